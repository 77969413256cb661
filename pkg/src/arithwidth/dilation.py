"""Behaviour of arithmetic ranges and widths under dilation.

Every "for n large enough" statement is checked empirically: the onset of an
identity is the least sampled n from which it holds through the end of the
sampled range. All series are exact; affine models are solved from exact
samples and verified on every other sample.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Callable, Optional, Sequence

from .arithmetic_range import decompose_almost_ap, functional_values
from .exact import IntVector, PreconditionError, canonical_direction, dot, format_rational, primitive
from .lattice_points import DEFAULT_CAP, enumerate_lattice_points
from .polytope import RationalPolytope, _check_direction, dilate, support
from .width import arithmetic_width

# n -> sorted AR_c(nP), or None when aff(nP) misses Z^d
RangeOracle = Callable[[int], Optional[Sequence[int]]]


def enumeration_oracle(P: RationalPolytope, c: Sequence[int], cap: int = DEFAULT_CAP) -> RangeOracle:
    cc = canonical_direction(c)

    def ar(n: int):
        Q = dilate(P, n)
        if not Q.affine.has_lattice_point:
            return None
        return functional_values(enumerate_lattice_points(Q, cap), cc)

    return ar


def lattice_step(P: RationalPolytope, c: Sequence[int]) -> int:
    """Image generator of the direction lattice of aff(P) under primitive c
    (1 when the functional is constant there). Unlike
    :func:`~arithwidth.arithmetic_range.step_size` this does not need aff(P)
    itself to contain a lattice point; the direction lattice is shared by all
    positive dilates."""
    c0, _ = primitive(c)
    g = 0
    for b in P.affine.direction_lattice:
        g = gcd(g, dot(c0, b))
    return g or 1


def recurrence_increment(P: RationalPolytope, c: Sequence[int]) -> Fraction:
    """Predicted growth ``D (M - m) / step`` of aw_c over one period."""
    c0, _ = primitive(c)
    lo, hi = support(P, c0)
    return P.denominator * (hi - lo) / lattice_step(P, c0)


def _fmt(v):
    return format_rational(v) if isinstance(v, Fraction) else v


def _stable_suffix(values: Sequence) -> int:
    """Least index from which all values are equal."""
    i = len(values) - 1
    while i > 0 and values[i - 1] == values[-1]:
        i -= 1
    return i


@dataclass(frozen=True)
class DilationSeries:
    label: str
    direction: IntVector | None
    period: int
    samples: tuple[tuple[int, int | Fraction], ...]
    flagged: tuple[int, ...] = ()

    def values(self) -> dict[int, int | Fraction]:
        return dict(self.samples)

    def to_dict(self) -> dict:
        return {"label": self.label,
                "direction": list(self.direction) if self.direction else None,
                "D": self.period,
                "samples": [[n, _fmt(v)] for n, v in self.samples],
                "flagged": list(self.flagged)}

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "value"])
        for n, v in self.samples:
            w.writerow([n, _fmt(v)])
        return buf.getvalue()


def _check_range(n_lo: int, n_hi: int) -> None:
    if not 1 <= n_lo <= n_hi:
        raise PreconditionError(f"need 1 <= n_lo <= n_hi, got [{n_lo}, {n_hi}]")


def aw_series(P: RationalPolytope, c: Sequence[int], n_lo: int, n_hi: int,
              oracle: RangeOracle | None = None, label: str = "P",
              cap: int = DEFAULT_CAP) -> DilationSeries:
    """``(n, aw_c(nP))`` for n in ``[n_lo, n_hi]``; dilates whose affine hull
    misses Z^d are recorded as 0 and flagged."""
    _check_direction(P, c)
    _check_range(n_lo, n_hi)
    oracle = oracle or enumeration_oracle(P, c, cap)
    samples, flagged = [], []
    for n in range(n_lo, n_hi + 1):
        ar = oracle(n)
        if ar is None:
            flagged.append(n)
            samples.append((n, 0))
        else:
            samples.append((n, len(ar)))
    return DilationSeries(label, canonical_direction(c), P.denominator, tuple(samples), tuple(flagged))


@dataclass(frozen=True)
class AffinePiece:
    residue: int
    slope: Fraction
    intercept: Fraction
    onset: int

    def __call__(self, n: int) -> Fraction:
        return self.slope * n + self.intercept


@dataclass(frozen=True)
class QuasilinearModel:
    period: int
    pieces: dict[int, AffinePiece] = field(default_factory=dict)

    def __call__(self, n: int) -> Fraction:
        return self.pieces[n % self.period](n)

    def to_dict(self) -> dict:
        return {"D": self.period,
                "pieces": [{"residue": p.residue, "slope": format_rational(p.slope),
                            "intercept": format_rational(p.intercept), "onset": p.onset}
                           for p in sorted(self.pieces.values(), key=lambda p: p.residue)]}


class InsufficientSamples(PreconditionError):
    pass


def fit_quasilinear(series: DilationSeries) -> QuasilinearModel:
    """Exact affine model per residue class modulo the period."""
    D = series.period
    ns = [n for n, _ in series.samples]
    if not ns or ns[-1] - ns[0] + 1 < 3 * D:
        raise InsufficientSamples(f"series must span at least 3 periods of D={D}")
    values = series.values()
    pieces = {}
    for r in range(D):
        cls = [n for n in ns if n % D == r]
        if len(cls) < 2:
            raise InsufficientSamples(f"residue class {r} mod {D} has fewer than 2 samples")
        diffs = [values[b] - values[a] for a, b in zip(cls, cls[1:])]
        start = cls[_stable_suffix(diffs)]
        slope = Fraction(diffs[-1], D)
        pieces[r] = AffinePiece(r, slope, values[start] - slope * start, start)
    return QuasilinearModel(D, pieces)


@dataclass(frozen=True)
class RecurrenceCheck:
    n: int
    lhs: int
    rhs: Fraction
    holds: bool


def check_recurrence(P: RationalPolytope, c: Sequence[int], n: int,
                     oracle: RangeOracle | None = None, cap: int = DEFAULT_CAP) -> RecurrenceCheck | None:
    """Compare ``aw_c((n+D)P)`` with ``aw_c(nP) + D(M-m)/step``; ``None``
    when either dilate's affine hull misses Z^d."""
    oracle = oracle or enumeration_oracle(P, c, cap)
    a, b = oracle(n), oracle(n + P.denominator)
    if a is None or b is None:
        return None
    rhs = len(a) + recurrence_increment(P, c)
    return RecurrenceCheck(n, len(b), rhs, len(b) == rhs)


@dataclass(frozen=True)
class RecurrenceReport:
    direction: IntVector
    period: int
    step: int
    increment: Fraction
    checks: tuple[RecurrenceCheck, ...]
    skipped: tuple[int, ...]
    onset: int | None
    violations: tuple[int, ...]

    @property
    def checked_through(self) -> int | None:
        return self.checks[-1].n if self.checks else None

    def to_dict(self) -> dict:
        return {"direction": list(self.direction), "D": self.period, "step": self.step,
                "increment": format_rational(self.increment), "onset": self.onset,
                "checked_through": self.checked_through,
                "violations": list(self.violations), "skipped": list(self.skipped),
                "checks": [{"n": k.n, "lhs": k.lhs, "rhs": format_rational(k.rhs),
                            "holds": k.holds} for k in self.checks]}


def verify_recurrence(P: RationalPolytope, c: Sequence[int], n_lo: int, n_hi: int,
                      oracle: RangeOracle | None = None, cap: int = DEFAULT_CAP) -> RecurrenceReport:
    """Check the one-period recurrence for every n with ``n + D <= n_hi``.

    ``violations`` lists every failing n; all of them precede ``onset``.
    """
    _check_direction(P, c)
    _check_range(n_lo, n_hi)
    oracle = oracle or enumeration_oracle(P, c, cap)
    cache: dict[int, Optional[Sequence[int]]] = {}

    def cached(n):
        if n not in cache:
            cache[n] = oracle(n)
        return cache[n]

    D = P.denominator
    checks, skipped = [], []
    for n in range(n_lo, n_hi - D + 1):
        k = check_recurrence(P, c, n, cached)
        if k is None:
            skipped.append(n)
        else:
            checks.append(k)
    onset = None
    if checks and checks[-1].holds:
        i = len(checks) - 1
        while i > 0 and checks[i - 1].holds:
            i -= 1
        onset = checks[i].n
    return RecurrenceReport(canonical_direction(c), D, lattice_step(P, c), recurrence_increment(P, c),
                            tuple(checks), tuple(skipped), onset,
                            tuple(k.n for k in checks if not k.holds))


def _periodic_onset(values: dict[int, object], D: int) -> int | None:
    """Least n from which ``values[n] == values[n + D]`` for every sampled
    pair through the end of the range."""
    pairs = sorted(n for n in values if n + D in values)
    if not pairs:
        return None
    ok = [values[n] == values[n + D] for n in pairs]
    if not ok[-1]:
        return None
    i = len(ok) - 1
    while i > 0 and ok[i - 1]:
        i -= 1
    return pairs[i]


@dataclass(frozen=True)
class GapCountReport:
    direction: IntVector
    period: int
    counts: tuple[tuple[int, int], ...]
    flagged: tuple[int, ...]
    onset: int | None

    def to_dict(self) -> dict:
        return {"direction": list(self.direction), "D": self.period, "onset": self.onset,
                "counts": [[n, k] for n, k in self.counts], "flagged": list(self.flagged)}

    def to_csv(self) -> str:
        return "n,value\n" + "".join(f"{n},{k}\n" for n, k in self.counts)


def gap_count_series(P: RationalPolytope, c: Sequence[int], n_lo: int, n_hi: int,
                     oracle: RangeOracle | None = None, cap: int = DEFAULT_CAP) -> GapCountReport:
    """Number of gaps of AR_c(nP) per n (0 for an empty range), and the onset
    of D-periodicity."""
    _check_direction(P, c)
    _check_range(n_lo, n_hi)
    oracle = oracle or enumeration_oracle(P, c, cap)
    counts, flagged = {}, []
    for n in range(n_lo, n_hi + 1):
        ar = oracle(n)
        if ar is None:
            flagged.append(n)
        else:
            counts[n] = len(decompose_almost_ap(ar).gaps) if ar else 0
    return GapCountReport(canonical_direction(c), P.denominator, tuple(sorted(counts.items())),
                          tuple(flagged), _periodic_onset(counts, P.denominator))


@dataclass(frozen=True)
class IntegralityGaps:
    I_M: Fraction
    I_m: Fraction

    def to_dict(self) -> dict:
        return {"I_M": format_rational(self.I_M), "I_m": format_rational(self.I_m)}


def integrality_gaps(P: RationalPolytope, c: Sequence[int], cap: int = DEFAULT_CAP) -> IntegralityGaps:
    """LP optimum minus lattice optimum at both ends, both nonnegative.

    The minimum-side gap is ``min over lattice points - min over P``.
    """
    lo, hi = support(P, c)
    vals = functional_values(enumerate_lattice_points(P, cap), c)
    if not vals:
        raise PreconditionError("integrality_gaps: P has no lattice points")
    return IntegralityGaps(hi - vals[-1], vals[0] - lo)


@dataclass(frozen=True)
class ResidueClassSummary:
    residue: int
    onset: int | None
    value: object
    stable_samples: int

    def to_dict(self) -> dict:
        v = self.value
        if isinstance(v, IntegralityGaps):
            v = v.to_dict()
        elif isinstance(v, tuple):
            v = [list(c) for c in v]
        return {"residue": self.residue, "onset": self.onset, "value": v,
                "stable_samples": self.stable_samples}


def _summarize_classes(per_n: dict[int, object], D: int) -> dict[int, ResidueClassSummary]:
    out = {}
    for r in range(D):
        cls = sorted(n for n in per_n if n % D == r)
        if not cls:
            out[r] = ResidueClassSummary(r, None, None, 0)
            continue
        i = _stable_suffix([per_n[n] for n in cls])
        out[r] = ResidueClassSummary(r, cls[i], per_n[cls[-1]], len(cls) - i)
    return out


@dataclass(frozen=True)
class PeriodicityReport:
    period: int
    per_n: dict[int, object]
    classes: dict[int, ResidueClassSummary]
    skipped: tuple[int, ...] = ()

    def to_dict(self) -> dict:
        def enc(v):
            if isinstance(v, IntegralityGaps):
                return v.to_dict()
            if isinstance(v, tuple):
                return [list(c) for c in v]
            return v
        return {"D": self.period, "skipped": list(self.skipped),
                "per_n": [{"n": n, "value": enc(v)} for n, v in sorted(self.per_n.items())],
                "classes": [self.classes[r].to_dict() for r in sorted(self.classes)]}


def integrality_gap_periodicity(P: RationalPolytope, c: Sequence[int], n_lo: int, n_hi: int,
                                cap: int = DEFAULT_CAP) -> PeriodicityReport:
    """Per residue class mod D, the eventual constant integrality gaps."""
    _check_direction(P, c)
    _check_range(n_lo, n_hi)
    per_n, skipped = {}, []
    for n in range(n_lo, n_hi + 1):
        Q = dilate(P, n)
        if not enumerate_lattice_points(Q, cap):
            skipped.append(n)
            continue
        per_n[n] = integrality_gaps(Q, c, cap)
    return PeriodicityReport(P.denominator, per_n, _summarize_classes(per_n, P.denominator),
                             tuple(skipped))


def _direction_report(results: dict, D: int) -> PeriodicityReport:
    per_n, skipped = {}, []
    for n, res in sorted(results.items()):
        if res.convention:
            skipped.append(n)
        else:
            per_n[n] = res.minimizers
    return PeriodicityReport(D, per_n, _summarize_classes(per_n, D), tuple(skipped))


def optimal_direction_series(P: RationalPolytope, n_lo: int, n_hi: int,
                             cap: int = DEFAULT_CAP) -> PeriodicityReport:
    """Per n the full minimizer set of aw(nP); per residue class the
    eventual set and its onset. Dilates with fewer than two lattice points
    carry no minimizer information and are skipped."""
    _check_range(n_lo, n_hi)
    results = {n: arithmetic_width(dilate(P, n), cap) for n in range(n_lo, n_hi + 1)}
    return _direction_report(results, P.denominator)


@dataclass(frozen=True)
class MinWidthAnalysis:
    series: DilationSeries
    model: QuasilinearModel
    directions: PeriodicityReport
    expected_slopes: dict[int, set[Fraction]]

    def slope_consistent(self, residue: int) -> bool:
        return self.expected_slopes.get(residue) == {self.model.pieces[residue].slope}

    def to_dict(self) -> dict:
        return {"series": self.series.to_dict(), "model": self.model.to_dict(),
                "optimal_directions": self.directions.to_dict(),
                "expected_slopes": {str(r): sorted(format_rational(s) for s in v)
                                    for r, v in sorted(self.expected_slopes.items())},
                "slope_consistent": {str(r): self.slope_consistent(r)
                                     for r in sorted(self.model.pieces)}}


def aw_min_series(P: RationalPolytope, n_lo: int, n_hi: int, label: str = "P",
                  cap: int = DEFAULT_CAP) -> MinWidthAnalysis:
    """Series of the minimized arithmetic width with its quasilinear fit.

    For each residue class the expected slope ``(M - m) / step`` is computed
    from the support values of every stabilized optimal direction.
    """
    _check_range(n_lo, n_hi)
    results = {n: arithmetic_width(dilate(P, n), cap) for n in range(n_lo, n_hi + 1)}
    samples = tuple((n, res.value) for n, res in sorted(results.items()))
    series = DilationSeries(label, None, P.denominator, samples)
    model = fit_quasilinear(series)
    directions = _direction_report(results, P.denominator)
    expected = {}
    for r, summary in directions.classes.items():
        if summary.value:
            expected[r] = {recurrence_increment(P, c) / P.denominator for c in summary.value}
    return MinWidthAnalysis(series, model, directions, expected)

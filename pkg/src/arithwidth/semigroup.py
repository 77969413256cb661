"""Numerical semigroups, their polytopes, factorizations and length sets.

The lattice points of the ``n``-th dilate of the semigroup polytope are the
factorizations of ``n``, and their coordinate sums are its lengths.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable

from .exact import IntVector, PreconditionError
from .polytope import RationalPolytope, make_polytope


@dataclass(frozen=True)
class NumericalSemigroup:
    generators: tuple[int, ...]
    gcd: int


def numerical_semigroup(generators: Iterable[int]) -> NumericalSemigroup:
    gens = tuple(sorted(set(int(g) for g in generators)))
    if not gens or gens[0] <= 0:
        raise PreconditionError("generators must be a nonempty list of positive integers")
    return NumericalSemigroup(gens, reduce(gcd, gens))


def semigroup_polytope(S: NumericalSemigroup) -> RationalPolytope:
    k = len(S.generators)
    return make_polytope([tuple(Fraction(int(i == j), g) for j in range(k))
                          for i, g in enumerate(S.generators)])


def factorizations(S: NumericalSemigroup, n: int) -> list[IntVector]:
    """All ``x >= 0`` with ``sum g_i x_i = n``, in lexicographic order."""
    gens = S.generators
    k = len(gens)
    if n < 0:
        return []
    # gcd of the generators not yet assigned, for divisibility pruning
    tail_gcd = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        tail_gcd[i] = gcd(gens[i], tail_gcd[i + 1])
    out: list[IntVector] = []
    x = [0] * k

    def rec(i: int, rest: int) -> None:
        if i == k - 1:
            if rest % gens[i] == 0:
                x[i] = rest // gens[i]
                out.append(tuple(x))
            return
        for xi in range(rest // gens[i] + 1):
            r = rest - xi * gens[i]
            if r % tail_gcd[i + 1] == 0:
                x[i] = xi
                rec(i + 1, r)
        x[i] = 0

    rec(0, n)
    return out


def lengths_from_factorizations(S: NumericalSemigroup, n: int) -> list[int]:
    return sorted({sum(f) for f in factorizations(S, n)})


class _MinCount:
    """Fewest generators of ``<h_1 < ... < h_r>`` summing to N.

    Large N: a representation costs ``N / h_r + sum x_i (h_r - h_i) / h_r``
    once the small generators are fixed, so the cheapest small-generator part
    per residue mod ``h_r`` comes from a shortest-path search. That part only
    fits when its total stays below N; below the largest such total a direct
    table is used.
    """

    def __init__(self, h: tuple[int, ...]):
        self.h = h
        top = h[-1]
        small = h[:-1]
        best: dict[int, tuple[int, int, int]] = {}
        heap = [(0, 0, 0)]  # (weight, total, count)
        while heap:
            w, tot, cnt = heapq.heappop(heap)
            r = tot % top
            if r in best:
                continue
            best[r] = (w, tot, cnt)
            for g in small:
                nxt = tot + g
                if nxt % top not in best:
                    heapq.heappush(heap, (w + top - g, nxt, cnt + 1))
        self.best = best
        self.threshold = max(tot for _, tot, _ in best.values())
        inf = float("inf")
        table = [inf] * (self.threshold + 1)
        table[0] = 0
        for N in range(1, self.threshold + 1):
            table[N] = min((table[N - g] + 1 for g in h if g <= N), default=inf)
        self.table = table

    def __call__(self, N: int):
        if N <= self.threshold:
            return self.table[N]
        entry = self.best.get(N % self.h[-1])
        if entry is None:
            return float("inf")
        _, tot, cnt = entry
        return cnt + (N - tot) // self.h[-1]


def length_set(S: NumericalSemigroup, n: int) -> list[int]:
    """Sorted set of factorization lengths of ``n``.

    A length ``l`` occurs iff ``n - g_1 l`` can be written with the shifted
    generators ``g_i - g_1`` (i > 1) using at most ``l`` of them; the rest of
    the factorization is filled with ``g_1``. This avoids enumerating
    factorizations, so it stays fast for very large n.
    """
    if n < 0:
        return []
    g1, gens = S.generators[0], S.generators
    if len(gens) == 1:
        return [n // g1] if n % g1 == 0 else []
    f = _min_count(tuple(g - g1 for g in gens[1:]))
    lo = -(-n // gens[-1])
    return [l for l in range(lo, n // g1 + 1) if f(n - g1 * l) <= l]


_CACHE: dict[tuple[int, ...], _MinCount] = {}


def _min_count(h: tuple[int, ...]) -> _MinCount:
    if h not in _CACHE:
        _CACHE[h] = _MinCount(h)
    return _CACHE[h]


def length_oracle(S: NumericalSemigroup):
    """Range oracle for the dilation module: ``n -> length_set(S, n)``."""
    def ar(n: int):
        return length_set(S, n) if S.gcd == 1 or n % S.gcd == 0 else None
    return ar

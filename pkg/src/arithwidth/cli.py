"""Command-line interface.

Exit codes: 0 success, 1 malformed input or usage, 2 enumeration cap
exceeded, 3 precondition violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import dilation, width
from .arithmetic_range import (
    arithmetic_range,
    arithmetic_width_dir,
    decompose_almost_ap,
    lattice_width_dir,
)
from .exact import PreconditionError, canonical_direction, format_rational
from .io import MalformedInput, load_polytope
from .lattice_points import DEFAULT_CAP, EnumerationCapExceeded, enumerate_lattice_points
from .semigroup import length_set, numerical_semigroup

EXIT_MALFORMED = 1
EXIT_CAP = 2
EXIT_PRECONDITION = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_MALFORMED, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _needs_dir(args, what):
    if args.dir is None:
        raise MalformedInput(f"{what} requires --dir")
    return args.dir


def _check_dim(P, c):
    if c is not None and len(c) != P.dim:
        raise MalformedInput(f"--dir has {len(c)} entries, polytope has dimension {P.dim}")


def cmd_points(args):
    P = load_polytope(args.file)
    pts = enumerate_lattice_points(P, args.cap)
    if args.format == "csv":
        return _csv([f"x{i + 1}" for i in range(P.dim)], pts)
    return {"count": len(pts), "points": [list(p) for p in pts]}


def cmd_ar(args):
    P = load_polytope(args.file)
    c = _needs_dir(args, "ar")
    _check_dim(P, c)
    ar = arithmetic_range(P, c, args.cap)
    if args.format == "csv":
        return _csv(["value"], [[v] for v in ar.values])
    return {"direction": list(ar.direction), "values": list(ar.values),
            "almost_ap": decompose_almost_ap(ar.values).to_dict() if ar.values else None}


def cmd_aw(args):
    P = load_polytope(args.file)
    if args.dir is not None:
        _check_dim(P, args.dir)
        value = arithmetic_width_dir(P, args.dir, args.cap)
        return {"direction": list(canonical_direction(args.dir)), "value": value}
    return width.arithmetic_width(P, args.cap).to_dict()


def cmd_lw(args):
    P = load_polytope(args.file)
    if args.dir is not None:
        _check_dim(P, args.dir)
        return {"direction": list(args.dir), "value": format_rational(lattice_width_dir(P, args.dir))}
    return width.lattice_width_bounded(P, args.bound).to_dict()


def cmd_diverge(args):
    P = load_polytope(args.file)
    return width.divergence_report(P, args.bound, args.cap).to_dict()


def cmd_series(args):
    P = load_polytope(args.file)
    _check_dim(P, args.dir)
    lo, hi = args.n_from, args.n_to
    csv_out = args.format == "csv"
    if args.what == "aw":
        if args.dir is None:
            res = dilation.aw_min_series(P, lo, hi, cap=args.cap)
            return res.series.to_csv() if csv_out else res.to_dict()
        series = dilation.aw_series(P, args.dir, lo, hi, cap=args.cap)
        if csv_out:
            return series.to_csv()
        try:
            model = dilation.fit_quasilinear(series).to_dict()
        except dilation.InsufficientSamples:
            model = None
        rec = dilation.verify_recurrence(P, args.dir, lo, hi, cap=args.cap)
        return {"series": series.to_dict(), "model": model, "recurrence": rec.to_dict()}
    if args.what == "gaps":
        rep = dilation.gap_count_series(P, _needs_dir(args, "--what gaps"), lo, hi, cap=args.cap)
        return rep.to_csv() if csv_out else rep.to_dict()
    if args.what == "igap":
        rep = dilation.integrality_gap_periodicity(P, _needs_dir(args, "--what igap"), lo, hi, args.cap)
        if csv_out:
            rows = [[n, format_rational(g.I_M), format_rational(g.I_m)] for n, g in sorted(rep.per_n.items())]
            return _csv(["n", "I_M", "I_m"], rows)
        return rep.to_dict()
    rep = dilation.optimal_direction_series(P, lo, hi, args.cap)
    if csv_out:
        rows = [[n, ";".join(" ".join(map(str, c)) for c in dirs)] for n, dirs in sorted(rep.per_n.items())]
        return _csv(["n", "value"], rows)
    return rep.to_dict()


def cmd_semigroup(args):
    S = numerical_semigroup(args.gens)
    lengths = length_set(S, args.n)
    if args.format == "csv":
        return _csv(["value"], [[v] for v in lengths])
    return {"generators": list(S.generators), "n": args.n, "lengths": lengths,
            "almost_ap": decompose_almost_ap(lengths).to_dict() if lengths else None}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP,
                        help="maximum bounding-box candidates to scan (default 10^8)")

    parser = _Parser(prog="arithwidth", description="Arithmetic width of rational polytopes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, file=True):
        p = sub.add_parser(name, parents=[common], help=help_)
        if file:
            p.add_argument("file", help="polytope JSON file")
        p.set_defaults(func=func)
        return p

    add("points", cmd_points, "list lattice points")
    p = add("ar", cmd_ar, "arithmetic range and almost-AP decomposition")
    p.add_argument("--dir", type=_int_list, required=True)
    p = add("aw", cmd_aw, "arithmetic width (in a direction or minimized)")
    p.add_argument("--dir", type=_int_list)
    p = add("lw", cmd_lw, "lattice width (in a direction or bounded search)")
    p.add_argument("--dir", type=_int_list)
    p.add_argument("--bound", type=int, default=10)
    p = add("series", cmd_series, "dilation reports")
    p.add_argument("--from", dest="n_from", type=int, required=True)
    p.add_argument("--to", dest="n_to", type=int, required=True)
    p.add_argument("--dir", type=_int_list)
    p.add_argument("--what", choices=("aw", "gaps", "igap", "mindirs"), default="aw")
    p = add("semigroup", cmd_semigroup, "length set of n in a numerical semigroup", file=False)
    p.add_argument("--gens", type=_int_list, required=True)
    p.add_argument("--n", type=int, required=True)
    p = add("diverge", cmd_diverge, "compare arithmetic- and lattice-width minimizers")
    p.add_argument("--bound", type=int, default=10)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.format == "csv" and args.command in ("aw", "lw", "diverge"):
            raise MalformedInput(f"csv output is not available for {args.command}")
        out = args.func(args)
    except MalformedInput as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_MALFORMED
    except EnumerationCapExceeded as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_CAP
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=stderr)
        return EXIT_PRECONDITION
    if isinstance(out, str):
        stdout.write(out)
    else:
        stdout.write(json.dumps(out) + "\n")
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

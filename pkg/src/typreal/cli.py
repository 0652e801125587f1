"""Command line interface.

    typreal compute  --n 7 [--format json|csv] [--out PATH]
    typreal certify  --n 7 [--format json|csv] [--out PATH]
    typreal curve    --n 7 [--samples 1024] [--out PATH]
    typreal sweep    --from 1 --to 200 [--format json|csv] [--out PATH]
    typreal spectrum --n 7 [--format json|csv] [--out PATH]

Exit codes: 0 success, 1 usage, 2 certification failure, 3 numeric failure.
Floats are printed with 17 significant digits so output is byte-stable and
round-trips to the same doubles.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass
from typing import Sequence

from .certify import DEFAULT_GRID, grid_min, sos_residual
from .errors import NumericalError
from .extremal import compute_extremal, curve_samples, j_value, upper_bound
from .pencil import principal_vector
from .spectra import characteristic_numbers, nu_least

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_UNCERTIFIED = 2
EXIT_NUMERIC = 3

MAX_N = 10_000
MAX_SWEEP_N = 2_000
CERT_RTOL = 1e-9
CERT_GRID_TOL = 1e-9
SOS_GRID = 4096


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunReport:
    n: int
    parity: str
    root_kind: str
    root: float
    j: float
    bound: float
    coeffs: tuple[float, ...]
    certified: bool
    grid_min: float
    sos_residual: float


def fmt(x: float) -> str:
    s = format(float(x), ".17g")
    if s.lstrip("-").isdigit():
        s += ".0"
    return s


def _json_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        return fmt(v)
    if isinstance(v, str):
        return '"' + v + '"'
    return "[" + ",".join(_json_value(x) for x in v) + "]"


def json_object(fields: Sequence[tuple[str, object]]) -> str:
    return "{" + ",".join(f'"{k}":{_json_value(v)}' for k, v in fields) + "}"


def csv_cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return fmt(v)
    return str(v)


def csv_table(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    lines = [",".join(header)]
    lines += [",".join(csv_cell(v) for v in row) for row in rows]
    return "\n".join(lines) + "\n"


def build_report(n: int, grid: int = DEFAULT_GRID) -> RunReport:
    poly = compute_extremal(n)
    z = principal_vector(n).z
    gmin = grid_min(poly.coeffs, grid)
    res = sos_residual(poly.coeffs, z, SOS_GRID)
    return RunReport(
        n=n,
        parity=poly.parity,
        root_kind=poly.root_kind,
        root=poly.root,
        j=poly.j_value,
        bound=upper_bound(n),
        coeffs=poly.coeffs,
        certified=bool(res <= CERT_RTOL * poly.j_value and gmin >= -CERT_GRID_TOL),
        grid_min=gmin,
        sos_residual=res,
    )


_REPORT_SCALARS = ("n", "parity", "root_kind", "root", "j", "bound", "certified", "grid_min", "sos_residual")


def render_report(r: RunReport, fmt_name: str) -> str:
    if fmt_name == "json":
        keys = ("n", "parity", "root_kind", "root", "j", "bound", "coeffs", "certified", "grid_min", "sos_residual")
        return json_object([(k, getattr(r, k)) for k in keys]) + "\n"
    header = list(_REPORT_SCALARS) + [f"alpha_{k}" for k in range(1, r.n + 1)]
    row = [getattr(r, k) for k in _REPORT_SCALARS] + list(r.coeffs)
    return csv_table(header, [row])


def _root(n: int) -> float:
    return math.sin(math.pi / (2 * (n + 2))) if n % 2 else nu_least(n)


def cmd_compute(args) -> tuple[str, int]:
    _check_range(args.n, 1, MAX_N, "--n")
    return render_report(build_report(args.n), args.format), EXIT_OK


def cmd_certify(args) -> tuple[str, int]:
    _check_range(args.n, 1, MAX_N, "--n")
    r = build_report(args.n)
    fields = [("n", r.n), ("grid_min", r.grid_min), ("sos_residual", r.sos_residual), ("certified", r.certified)]
    if args.format == "json":
        text = json_object(fields) + "\n"
    else:
        text = csv_table([k for k, _ in fields], [[v for _, v in fields]])
    return text, EXIT_OK if r.certified else EXIT_UNCERTIFIED


def cmd_curve(args) -> tuple[str, int]:
    _check_range(args.n, 1, MAX_N, "--n")
    if args.samples < 2:
        raise UsageError("--samples must be >= 2")
    poly = compute_extremal(args.n)
    rows = [(s.t, s.re, s.im) for s in curve_samples(poly.coeffs, args.samples)]
    return csv_table(("t", "re", "im"), rows), EXIT_OK


def cmd_sweep(args) -> tuple[str, int]:
    lo, hi = args.from_, args.to
    if lo is None or hi is None:
        raise UsageError("--from and --to are required")
    if not 1 <= lo <= hi <= MAX_SWEEP_N:
        raise UsageError(f"need 1 <= --from <= --to <= {MAX_SWEEP_N}")
    rows = []
    for n in range(lo, hi + 1):
        j, bound = j_value(n), upper_bound(n)
        rows.append((n, _root(n), j, bound, bound - j))
    header = ("n", "root", "j", "bound", "gap")
    if args.format == "csv":
        return csv_table(header, rows), EXIT_OK
    objs = [json_object(list(zip(header, row))) for row in rows]
    return "[" + ",\n".join(objs) + "]\n", EXIT_OK


def cmd_spectrum(args) -> tuple[str, int]:
    _check_range(args.n, 1, MAX_SWEEP_N, "--n")
    s = characteristic_numbers(args.n)
    if args.format == "json":
        fields = [("n", s.n), ("lambdas", s.lambdas), ("types", s.kinds), ("roots", s.roots)]
        return json_object(fields) + "\n", EXIT_OK
    rows = [(i, lam, kind, r) for i, (lam, kind, r) in enumerate(zip(s.lambdas, s.kinds, s.roots), start=1)]
    return csv_table(("index", "lambda", "type", "root"), rows), EXIT_OK


def _check_range(v, lo: int, hi: int, flag: str) -> None:
    if v is None:
        raise UsageError(f"{flag} is required")
    if not lo <= v <= hi:
        raise UsageError(f"{flag} must be in [{lo}, {hi}], got {v}")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="typreal", description="Extremal typically real polynomials.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        p.add_argument("--out", default=None, help="output file (default: stdout)")
        return p

    def fmt_flag(p):
        p.add_argument("--format", choices=("json", "csv"), default="json")

    p = add("compute", cmd_compute, "coefficients and extremal value for degree n")
    p.add_argument("--n", type=int)
    fmt_flag(p)

    p = add("certify", cmd_certify, "check nonnegativity of the sine polynomial")
    p.add_argument("--n", type=int)
    fmt_flag(p)

    p = add("curve", cmd_curve, "image of the upper unit semicircle as CSV")
    p.add_argument("--n", type=int)
    p.add_argument("--samples", type=int, default=1024)

    p = add("sweep", cmd_sweep, "extremal value vs bound for a range of degrees")
    p.add_argument("--from", dest="from_", type=int)
    p.add_argument("--to", type=int)
    fmt_flag(p)

    p = add("spectrum", cmd_spectrum, "characteristic numbers of the pencil")
    p.add_argument("--n", type=int)
    fmt_flag(p)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = args.func(args)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"typreal: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except NumericalError as e:
        print(f"typreal: numeric failure: {e}", file=sys.stderr)
        return EXIT_NUMERIC
    if args.out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        try:
            with open(args.out, "w", newline="\n") as fh:
                fh.write(text)
        except OSError as e:
            print(f"typreal: cannot write {args.out}: {e}", file=sys.stderr)
            return EXIT_USAGE
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

    triads show stirling2 --rows 5 --format csv
    triads show --i 1 --q 0 --d 1 --rows 4
    triads poly hermite --degree 3
    triads verify tchebychev --max 12 --oracle
    triads lah --r "j-1" --s "1-j" --rows 12 --check
    triads oracle hermite --rows 5

Exit status: 0 ok, 1 verification mismatch, 2 usage / parse / unknown name,
3 explicit list read past its end, 4 no polynomial sequence.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from duality_triads.catalog import NAMES, RootSequence, builtin, expand_roots, generalized_lah
from duality_triads.core import triangle
from duality_triads.duality import verify_triad
from duality_triads.errors import (
    EnumerationBoundExceeded,
    IndexBeyondExplicitList,
    NoPolynomialSequence,
    SequenceParseError,
    UnknownName,
)
from duality_triads.paths import oracle_triangle
from duality_triads.polynomials import triad_polynomials
from duality_triads.sequences import TriadSpec, format_rational, parse_sequence

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_BOUNDS = 3
EXIT_NO_POLYS = 4

FORMATS = ("pretty", "csv", "json")
ORACLE_VERIFY_CAP = 10


class UsageError(Exception):
    pass


# -- rendering ---------------------------------------------------------------

def render_pretty(rows: Sequence[Sequence[Fraction]]) -> str:
    """Centered triangle; row n sits half a cell right of row n+1."""
    cells = [[format_rational(v) for v in row] for row in rows]
    width = max((len(c) for row in cells for c in row), default=1)
    gap = 1 if width % 2 else 2
    half = (width + gap) // 2
    top = max((len(row) for row in cells), default=1)
    lines = []
    for row in cells:
        indent = " " * ((top - len(row)) * half)
        lines.append(indent + (" " * gap).join(c.center(width) for c in row).rstrip())
    return "\n".join(lines)


def render_csv(rows: Sequence[Sequence[Fraction]]) -> str:
    return "\n".join(",".join(format_rational(v) for v in row) for row in rows)


def render_json(header: dict[str, str], rows: Sequence[Sequence[Fraction]], key: str = "rows") -> str:
    obj = dict(header)
    obj[key] = [[format_rational(v) for v in row] for row in rows]
    return json.dumps(obj)


def render(fmt: str, header: dict[str, str], rows: Sequence[Sequence[Fraction]]) -> str:
    if fmt == "csv":
        return render_csv(rows)
    if fmt == "json":
        return render_json(header, rows)
    return render_pretty(rows)


def triad_header(triad: TriadSpec) -> dict[str, str]:
    return {
        "name": triad.label,
        "i": triad.i.to_expression(),
        "q": triad.q.to_expression(),
        "d": triad.d.to_expression(),
    }


# -- triad resolution --------------------------------------------------------

def resolve_triad(args: argparse.Namespace) -> TriadSpec:
    custom = [args.i, args.q, args.d]
    if args.name is not None:
        if any(e is not None for e in custom):
            raise UsageError("give either a catalog name or --i/--q/--d, not both")
        return builtin(args.name).triad
    if any(e is None for e in custom):
        raise UsageError("a custom triad needs all of --i, --q and --d")
    return TriadSpec(
        parse_sequence(args.i), parse_sequence(args.q), parse_sequence(args.d), "custom"
    )


# -- commands ----------------------------------------------------------------

def cmd_show(args: argparse.Namespace) -> int:
    triad = resolve_triad(args)
    tri = triangle(triad, args.rows + 1)
    print(render(args.format, triad_header(triad), tri.rows))
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    triad = resolve_triad(args)
    tri = oracle_triangle(triad, args.rows)
    print(render(args.format, triad_header(triad), tri.rows))
    return EXIT_OK


def cmd_poly(args: argparse.Namespace) -> int:
    triad = resolve_triad(args)
    polys = triad_polynomials(triad, args.degree)
    coeff_rows = [p.coeffs or (Fraction(0),) for p in polys]
    if args.format == "csv":
        print(render_csv(coeff_rows))
    elif args.format == "json":
        print(render_json(triad_header(triad), coeff_rows, key="polys"))
    else:
        print("\n".join(f"Φ{n} = {p}" for n, p in enumerate(polys)))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    triad = resolve_triad(args)
    report = verify_triad(triad, args.max)
    if report.first_mismatch is not None:
        n, k, expected, actual = report.first_mismatch
        print(
            f"{report.name}: MISMATCH at n={n}, k={k}: "
            f"expected {format_rational(expected)}, actual {format_rational(actual)}"
        )
        return EXIT_MISMATCH
    print(f"{report.name}: x^n = sum_k c(n,k) Phi_k(x) holds exactly for n = 0..{args.max}")
    if args.oracle:
        top = min(args.max, ORACLE_VERIFY_CAP)
        oracle = oracle_triangle(triad, top)
        tri = triangle(triad, top + 1)
        for n in range(top + 1):
            for k in range(n + 1):
                if oracle.rows[n][k] != tri.rows[n][k]:
                    print(
                        f"{report.name}: path oracle MISMATCH at n={n}, k={k}: "
                        f"expected {format_rational(tri.rows[n][k])}, "
                        f"actual {format_rational(oracle.rows[n][k])}"
                    )
                    return EXIT_MISMATCH
        print(f"{report.name}: path enumeration matches the triangle for n = 0..{top}")
    return EXIT_OK


def cmd_lah(args: argparse.Namespace) -> int:
    r, s = RootSequence.of(args.r), RootSequence.of(args.s)
    rows = generalized_lah(r, s, args.rows)
    header = {"name": "generalized_lah", "r": r.spec.to_expression(), "s": s.spec.to_expression()}
    print(render(args.format, header, rows))
    if args.check:
        other = expand_roots(r, s, args.rows)
        for n, (a, b) in enumerate(zip(rows, other)):
            if a != b:
                k = next(k for k in range(n + 1) if a[k] != b[k])
                print(
                    f"check MISMATCH at n={n}, k={k}: expected {format_rational(b[k])}, "
                    f"actual {format_rational(a[k])}",
                    file=sys.stderr,
                )
                return EXIT_MISMATCH
        print(f"check: recurrence matches direct expansion for n = 0..{args.rows}", file=sys.stderr)
    return EXIT_OK


# -- argument parsing --------------------------------------------------------

def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="triads",
        description="Connection-constant triangles and triad polynomials, in exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def triad_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("name", nargs="?", help=f"catalog triad: {', '.join(NAMES)} (pascal_s as pascal_s(3))")
        p.add_argument("--i", help="up weights i_k, e.g. '1' or 'k+1' or 'list:1,2'")
        p.add_argument("--q", help="stay weights q_k")
        p.add_argument("--d", help="down weights d_k (d_0 is always 0)")

    def fmt_arg(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=FORMATS, default="pretty")

    p = sub.add_parser("show", help="print the connection-constant triangle")
    triad_args(p)
    p.add_argument("--rows", "-n", type=_nonneg, default=5, help="last row index N")
    fmt_arg(p)
    p.set_defaults(func=cmd_show)

    p = sub.add_parser("poly", help="print the triad polynomials")
    triad_args(p)
    p.add_argument("--degree", type=_nonneg, default=5)
    fmt_arg(p)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("verify", help="check the duality identity row by row")
    triad_args(p)
    p.add_argument("--max", type=_nonneg, default=10)
    p.add_argument("--oracle", action="store_true", help="also compare with path enumeration (n <= 10)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lah", help="generalized Lah triangle for two root sequences")
    p.add_argument("--r", required=True, help="roots r_j of the basis, j >= 1, e.g. 'j-1'")
    p.add_argument("--s", required=True, help="roots s_j of the target, e.g. '1-j'")
    p.add_argument("--rows", "-n", type=_nonneg, default=5)
    p.add_argument("--check", action="store_true", help="cross-check against direct expansion")
    fmt_arg(p)
    p.set_defaults(func=cmd_lah)

    p = sub.add_parser("oracle", help="triangle by exhaustive path enumeration")
    triad_args(p)
    p.add_argument("--rows", "-n", type=_nonneg, default=5)
    fmt_arg(p)
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, SequenceParseError, UnknownName, EnumerationBoundExceeded) as exc:
        print(f"triads: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IndexBeyondExplicitList as exc:
        print(f"triads: error: {exc}", file=sys.stderr)
        return EXIT_BOUNDS
    except NoPolynomialSequence as exc:
        print(f"triads: error: {exc}", file=sys.stderr)
        return EXIT_NO_POLYS


if __name__ == "__main__":
    sys.exit(main())

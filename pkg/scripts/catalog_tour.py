"""Print every catalog triad: weights, triangle, row sums, first polynomials,
and whether the duality identity and the path oracle agree.

    python scripts/catalog_tour.py --rows 6 --degree 4
"""

from __future__ import annotations

import argparse

from duality_triads.catalog import default_entries
from duality_triads.cli import render_pretty
from duality_triads.core import row_sums, triangle
from duality_triads.duality import verify_triad
from duality_triads.paths import oracle_triangle
from duality_triads.polynomials import triad_polynomials
from duality_triads.sequences import format_rational


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--rows", type=int, default=6)
    parser.add_argument("--degree", type=int, default=4)
    parser.add_argument("--verify", type=int, default=20)
    args = parser.parse_args()

    for entry in default_entries():
        t = entry.triad
        print(f"== {entry.name}: i = {t.i.to_expression()}, q = {t.q.to_expression()}, "
              f"d = {t.d.to_expression()}  ({entry.note})")
        tri = triangle(t, args.rows + 1)
        print(render_pretty(tri.rows))
        print("row sums:", ", ".join(format_rational(v) for v in row_sums(tri)))
        for n, p in enumerate(triad_polynomials(t, args.degree)):
            print(f"  Φ{n} = {p}")
        report = verify_triad(t, args.verify)
        oracle_ok = oracle_triangle(t, min(args.rows, 10)).rows == triangle(t, min(args.rows, 10) + 1).rows
        print(f"duality identity n <= {args.verify}: {'ok' if report.ok else report.first_mismatch}; "
              f"path oracle: {'ok' if oracle_ok else 'MISMATCH'}")
        print()


if __name__ == "__main__":
    main()

"""Compare the three routes to the Lah numbers, next to the signed
(Laguerre) triangle.

    python scripts/lah_routes.py --rows 8
"""

from __future__ import annotations

import argparse

from duality_triads.catalog import RootSequence, builtin, closed_form, generalized_lah, lah_recurrence
from duality_triads.cli import render_pretty
from duality_triads.core import triangle


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--rows", type=int, default=8)
    args = parser.parse_args()
    N = args.rows

    routes = {
        "three-term recurrence": lah_recurrence(N),
        "generalized Lah (falling basis, rising target)": generalized_lah(
            RootSequence.of("j-1"), RootSequence.of("1-j"), N
        ),
        "lah triad triangle": [list(r) for r in triangle(builtin("lah").triad, N + 1).rows],
    }
    closed = [[closed_form("lah", n, k) for k in range(n + 1)] for n in range(N + 1)]
    for label, rows in routes.items():
        print(f"{label}: {'agrees' if rows == closed else 'DIFFERS'} with C(n-1,k-1) n!/k!")
    print()
    print(render_pretty(closed))
    print()
    print("Laguerre (signed) triangle:")
    print(render_pretty(triangle(builtin("laguerre").triad, min(N, 6) + 1).rows))


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Hunt for systems that stay unclassified as the period cap grows.

A system can color the whole quadrant while no torus through the origin
color does, in which case no periodic certificate exists at any cap and
the verdict stays Unknown forever.  This script makes those visible: it
runs the two-color census at increasing period caps and reports which
canonical classes refuse to move.

Usage:
    python scripts/stubborn_systems.py            # caps 1..6
    python scripts/stubborn_systems.py --max-period-cap 8 --depth-cap 48
"""

import argparse
import os
import sys
from collections import Counter

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from quadcolor import SearchBudget, Unknown, census_records


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--colors", type=int, default=2)
    ap.add_argument("--depth-cap", type=int, default=32)
    ap.add_argument("--max-period-cap", type=int, default=6)
    args = ap.parse_args()

    survivors = None
    for cap in range(1, args.max_period_cap + 1):
        budget = SearchBudget(depth_cap=args.depth_cap, period_cap=cap)
        unknown = Counter()
        for rec in census_records(args.colors, budget):
            if isinstance(rec.verdict, Unknown):
                unknown[rec.canonical_id] += 1
        print(f"period cap {cap}: {sum(unknown.values())} unknown systems "
              f"in {len(unknown)} classes")
        survivors = unknown

    if survivors:
        print("\nclasses still open at the largest cap (id = n.origin.H.V, hex masks):")
        for cid, members in sorted(survivors.items()):
            print(f"  {cid}  ({members} systems)")
        print("\nEach of these colors the quadrant (or would need a deeper search"
              "\nto bound), yet admits no torus through the origin color; raising"
              "\nthe period cap cannot close them.")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

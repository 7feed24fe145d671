#!/usr/bin/env python3
"""Survey the double covers of the handle-diagram family over a grid.

For every (p, q) in the grid this prints the cover's 2-handle framings
and the boundary homology of base and cover, then reports whether the
boundary groups really depend on q at all.  The expectation is that they
do not: a slide over the 0-framed dual handle trades (p, q) for
(p, q±2), and the odd/even classes of q are already connected that way.
"""

import argparse
from collections import defaultdict

from lbkit.covers import double_cover_diagram
from lbkit.homology import boundary_h1, h1
from lbkit.kirby import build_diagram


def group_name(g):
    parts = ["Z"] * g.free_rank + [f"Z/{n}" for n in g.invariant_factors]
    return " + ".join(parts) if parts else "0"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--radius", type=int, default=3,
                    help="sweep p, q over [-RADIUS, RADIUS]")
    args = ap.parse_args()

    span = range(-args.radius, args.radius + 1)
    by_p = defaultdict(set)
    print(f"{'p':>3} {'q':>3}  {'cover framings':<22} "
          f"{'H1(bd X)':<12} {'H1(bd cover)':<14} H1(cover)")
    for p in span:
        for q in span:
            base = build_diagram(p, q)
            cov = double_cover_diagram(base)
            framings = sorted(h.framing for h in cov.total.two_handles)
            bd_base = boundary_h1(base)
            bd_cover = boundary_h1(cov.total)
            by_p[p].add(bd_cover)
            print(f"{p:>3} {q:>3}  {str(framings):<22} "
                  f"{group_name(bd_base):<12} {group_name(bd_cover):<14} "
                  f"{group_name(h1(cov.total))}")

    print()
    for p in span:
        seen = by_p[p]
        verdict = group_name(next(iter(seen))) if len(seen) == 1 else \
            "VARIES: " + ", ".join(sorted(map(group_name, seen)))
        print(f"p = {p:>3}: cover boundary homology {verdict}")
    if all(len(s) == 1 for s in by_p.values()):
        print("\ncover boundary homology is independent of q at every p")


if __name__ == "__main__":
    main()

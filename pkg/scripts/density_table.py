#!/usr/bin/env python3
"""Print the edge density of the K5-block-tree family.

A tree of b blocks, each a K5, has n = 4b + 1 vertices and e = 10b edges,
so e/n = 10b/(4b+1) approaches 5/2 from below.  These graphs have cycle
spectrum {3, 4, 5}: no two cycles of consecutive even lengths and no cycle
of length 2 mod 4, which shows the density thresholds are sharp.
"""

import argparse


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-blocks", type=int, default=50)
    args = ap.parse_args()
    print(f"{'b':>4} {'n':>6} {'e':>6} {'e/n':>10}")
    for b in range(1, args.max_blocks + 1):
        n, e = 4 * b + 1, 10 * b
        print(f"{b:>4} {n:>6} {e:>6} {e / n:>10.6f}")
    print(f"{'inf':>4} {'':>6} {'':>6} {'2.500000':>10}")


if __name__ == "__main__":
    main()

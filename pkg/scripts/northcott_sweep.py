#!/usr/bin/env python3
"""Sweep the bounded-height enumeration and report counts per degree.

Illustrates the constructive Northcott finiteness: for each degree up to the
cap, count algebraic numbers with H <= bound and show how many are roots of
unity (all of them when bound = 1, by Kronecker)."""

import argparse
from collections import Counter
from fractions import Fraction

from otlck import PrecisionContext, enumerate_bounded_height


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--deg", type=int, default=4)
    ap.add_argument("--bound", type=Fraction, default=Fraction(1))
    ap.add_argument("--precision", type=int, default=64)
    args = ap.parse_args()
    ctx = PrecisionContext(args.precision, 2, 4096)

    records = enumerate_bounded_height(args.deg, args.bound, ctx)
    by_degree = Counter(r.min_poly.degree for r in records)
    rou = Counter(r.min_poly.degree for r in records if r.is_root_of_unity)
    print(f"degree <= {args.deg}, H <= {args.bound}: {len(records)} numbers")
    for d in sorted(by_degree):
        print(f"  degree {d}: {by_degree[d]:4d} total, {rou.get(d, 0):4d} roots of unity")
    tallest = max(records, key=lambda r: r.height.as_float)
    print(f"largest height: {tallest.height.as_float:.10f} "
          f"at {tallest.min_poly} (root {tallest.root_index})")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Run the main-theorem consistency audit over a small corpus of fields.

For each field we feed a natural generator set (defining root plus a known
fundamental-ish unit) through the full admissibility pipeline and print the
verdict. No audit should ever come back INCONSISTENT; with t >= 2 none
should come back admissible."""

import argparse
import json

from otlck import PrecisionContext, main_theorem_audit, new_field

CORPUS = [
    ("x^3 - x - 1", [[0, 1, 0]]),
    ("x^4 - 2x^2 - 1", [[0, 1, 0, 0]]),
    ("x^4 + x^3 + x^2 + x + 1", [[0, 1, 0, 0], [0, 0, -1, -1]]),
    ("x^5 - x - 1", [[0, 1, 0, 0, 0]]),
    ("x^6 - x^4 - 1", [[0, 0, 1, 0, 0, 0]]),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--precision", type=int, default=64)
    ap.add_argument("--json", action="store_true", help="dump full reports")
    args = ap.parse_args()
    ctx = PrecisionContext(args.precision, 2, 4096)

    for poly, gen_coeffs in CORPUS:
        fld = new_field(poly, ctx)
        gens = [fld.element(c) for c in gen_coeffs]
        report = main_theorem_audit(fld, gens, ctx)
        if args.json:
            print(json.dumps(report, sort_keys=True, default=str))
        else:
            s, t = report["signature"]
            print(
                f"{poly:28s} (s,t)=({s},{t})  lck={report['lck']!s:5s} "
                f"rank={report['rank']['certified']}/{report['rank']['estimate']}  "
                f"{report['status']}"
            )
            for r in report["reasons"]:
                print(f"    {r}")


if __name__ == "__main__":
    main()

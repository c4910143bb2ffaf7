#!/usr/bin/env python3
"""Fit every conjectured polynomial family and export the reports as JSON.

The plan covers the families with displayed expansions: s_0..s_3, r_1..r_3,
p_1, q_1 and rt_0..rt_2.  Use --family/--k-max to fit further members.
"""

import argparse
import json
import sys

from gesselwalks.conjectures import FitFamily, fit_family, fit_report

DEFAULT_PLAN = (
    [("s", k) for k in range(4)]
    + [("r", k) for k in range(1, 4)]
    + [("p", 1), ("q", 1)]
    + [("rt", k) for k in range(3)]
)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--family", choices=("p", "q", "r", "s", "rt"), default=None,
                        help="fit a single family instead of the default plan")
    parser.add_argument("--k-max", type=int, default=3,
                        help="largest k for --family (default 3)")
    parser.add_argument("--held-out", type=int, default=5,
                        help="extra validation points per fit (default 5)")
    parser.add_argument("--out", default=None, help="write JSON here instead of stdout")
    args = parser.parse_args()

    if args.family:
        k_min = 1 if args.family in ("p", "q", "r") else 0
        plan = [(args.family, k) for k in range(k_min, args.k_max + 1)]
    else:
        plan = DEFAULT_PLAN

    reports = []
    for name, k in plan:
        fit = fit_family(FitFamily(name), k, held_out=args.held_out)
        reports.append(fit_report(fit))
        claims_ok = reports[-1]["claims"]["degree_ok"]
        print(f"fitted {name}_{k}: degree {reports[-1]['degree']}, "
              f"degree_ok={claims_ok}", file=sys.stderr)

    payload = json.dumps(reports, indent=2)
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(payload + "\n")
    else:
        print(payload)
    return 0


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Run every verification suite with its default parameters.

Prints one status line per suite, then a JSON dump of the full reports.
Exits nonzero if any suite finds a counterexample.
"""

import argparse
import json
import sys

from gesselwalks import conjectures, series
from gesselwalks.cli import _verify_cross_pipeline, _verify_families


def gessel_report(n_max):
    check = conjectures.verify_gessel(n_max)
    return {"suite": "gessel", "n_max": check.n_max, "ok": check.ok}


def recurrence_report(n_max):
    check = conjectures.verify_recurrence_g(n_max)
    return {"suite": "recurrence_g", "range_checked": check.range_checked, "ok": check.holds}


def series_report(suite, check):
    return {
        "suite": suite,
        "ok": check.ok,
        "window": list(check.window),
        "compared": check.compared,
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--caps", type=int, default=10,
                        help="series truncation cap per variable (default 10)")
    parser.add_argument("--k-max", type=int, default=200,
                        help="triangular system size (default 200)")
    parser.add_argument("--quiet", action="store_true",
                        help="suppress the JSON dump, keep the status lines")
    args = parser.parse_args()

    caps = (args.caps, args.caps, args.caps)
    G = series.build_G(caps)
    reports = [
        gessel_report(16),
        series_report("kernel", series.verify_kernel_equation(caps, G)),
        series_report("hkernel", series.verify_H_equation(caps, G)),
        series_report("root", series.verify_root_identity(caps, G)),
        _verify_cross_pipeline(args.k_max),
        recurrence_report(30),
        _verify_families(),
    ]

    failed = 0
    for report in reports:
        status = "ok" if report["ok"] else "FAIL"
        print(f"{report['suite']:16s} {status}")
        failed += 0 if report["ok"] else 1
    if not args.quiet:
        print(json.dumps(reports, indent=2))
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Run every exact cross-check of the correspondence over a range of even
weights and print one summary line per weight (add --json for full reports)."""

import argparse
import json

from dshuffle.relations import correspondence_report


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--from", dest="start", type=int, default=12)
    parser.add_argument("--to", dest="stop", type=int, default=40)
    parser.add_argument("--json", action="store_true",
                        help="print full JSON reports instead of summaries")
    args = parser.parse_args()

    all_ok = True
    for k in range(args.start, args.stop + 1):
        if k % 2:
            continue
        rep = correspondence_report(k)
        all_ok = all_ok and rep.all_ok
        if args.json:
            print(json.dumps(rep.to_dict()))
        else:
            status = "ok" if rep.all_ok else "FAIL " + "; ".join(rep.failures)
            print(f"k={k:2d}  dim={rep.dim_ek}  {status}")
    return 0 if all_ok else 1


if __name__ == "__main__":
    raise SystemExit(main())

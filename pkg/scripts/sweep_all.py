"""Run every registered identity over a (possibly large) grid and report
pass/skip/fail counts and wall time per identity.

    python scripts/sweep_all.py --scale 4 --pair 5,-3 --pair -4,7
"""

import argparse
import time
from collections import Counter

from genfib.horadam import PRESETS, SequenceParams
from genfib.identities import IDENTITIES, sweep


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--scale", type=int, default=1,
                        help="multiply the upper end of each default range")
    parser.add_argument("--pair", action="append", default=[],
                        help="extra p,q pair (repeatable)")
    args = parser.parse_args()

    pairs = list(PRESETS.values()) + [SequenceParams(3, 2), SequenceParams(2, 1)]
    for text in args.pair:
        p, q = (int(x) for x in text.split(","))
        pairs.append(SequenceParams(p, q))

    total_failures = 0
    for identity_id, spec in IDENTITIES.items():
        ranges = {name: (lo, hi * args.scale) for name, (lo, hi) in spec.default_ranges.items()}
        if "k" in ranges:
            ranges["k"] = spec.default_ranges["k"]
        start = time.perf_counter()
        counts = Counter(r.status for r in sweep(identity_id, pairs, ranges))
        elapsed = time.perf_counter() - start
        total_failures += counts["fail"]
        print(f"{identity_id:<14} pass={counts['pass']:<6} skip={counts['skip']:<5} "
              f"fail={counts['fail']:<3} {elapsed:6.2f}s")
    raise SystemExit(1 if total_failures else 0)


if __name__ == "__main__":
    main()

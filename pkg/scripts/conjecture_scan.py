"""Sample the sign pattern of L_FCC and L_HCP and summarise it per interval."""
import argparse
import math
import sys
from collections import Counter

from cuboidal.config import SumConfig
from cuboidal.scans import conjecture_scan


def summarise(rows):
    by_interval = Counter()
    bad = []
    for s, fcc, hcp, pattern, status in rows:
        lo = math.floor(s * 2) / 2 if 0 < s < 1.5 else math.floor(s)
        by_interval[(lo, pattern)] += 1
        if status != "PASS":
            bad.append((s, fcc, hcp, pattern))
    return by_interval, bad


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--step", type=float, default=0.02)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    _, rows = conjecture_scan(args.step, SumConfig.from_env(), args.jobs)
    by_interval, bad = summarise(rows)
    for (lo, pattern), n in sorted(by_interval.items()):
        print(f"s from {lo:5.1f}: {n:4d} samples, expected {pattern}")
    for s, fcc, hcp, pattern in bad:
        print(f"VIOLATION s={s:.4f} fcc={fcc:.17g} hcp={hcp:.17g} expected {pattern}")
    print(f"{len(bad)} violations in {len(rows)} samples")
    sys.exit(1 if bad else 0)

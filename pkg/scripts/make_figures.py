"""Write the CSV data behind all four figures into one directory.

Usage: python3 scripts/make_figures.py [outdir] [--jobs N]
"""
import argparse
import pathlib
import sys

from cuboidal.cli import main

NAMES = {1: "packing_density", 2: "sums_versus_A", 3: "fcc_versus_s", 4: "hcp_minus_fcc"}


def run(outdir: pathlib.Path, jobs: int) -> int:
    outdir.mkdir(parents=True, exist_ok=True)
    for which, name in NAMES.items():
        path = outdir / f"fig{which}_{name}.csv"
        code = main(["figures", "--which", str(which), "--jobs", str(jobs), "--out", str(path)])
        if code:
            return code
        print(path)
    return 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("outdir", nargs="?", default="figures")
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    sys.exit(run(pathlib.Path(args.outdir), args.jobs))

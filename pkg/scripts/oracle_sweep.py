"""Run the seeded oracle suites over several seeds and report timings.

    python scripts/oracle_sweep.py --seeds 1 2 3 --scale 500
"""

import argparse
import sys
import time

from strongcyclic.selftest import run_selftest


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--seeds", type=int, nargs="+", default=[42])
    ap.add_argument("--scale", type=int, default=200)
    args = ap.parse_args()

    failed = False
    for seed in args.seeds:
        start = time.perf_counter()
        results = run_selftest(seed, args.scale)
        elapsed = time.perf_counter() - start
        summary = ", ".join(f"{r.name} {r.passed}/{r.passed + r.failed}" for r in results)
        print(f"seed {seed}: {summary} ({elapsed:.1f}s)")
        for r in results:
            for case in r.failures:
                print(f"  FAIL {r.name}: {case!r}")
            failed = failed or not r.ok
    sys.exit(1 if failed else 0)


if __name__ == "__main__":
    main()

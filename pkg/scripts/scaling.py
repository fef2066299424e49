"""Time budgeted stable/preferred on random frameworks of growing size."""
from __future__ import annotations

import argparse
import random
import statistics
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from generators import GenConfig, random_framework  # noqa: E402

from waba import INF, ResourceLimitError, assumption_extensions  # noqa: E402


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[2, 4, 6, 8])
    ap.add_argument("--trials", type=int, default=20)
    ap.add_argument("--semantics", nargs="+", default=["stable", "preferred"])
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    print(f"{'n':>3} {'semantics':>12} {'budget':>6} {'median ms':>10} {'max ms':>9} {'skipped':>8}")
    for n in args.sizes:
        cfg = GenConfig(max_assumptions=n, max_rules=2 * n)
        fws = [random_framework(rng, cfg) for _ in range(args.trials)]
        for sem in args.semantics:
            for b in (0, 3, INF):
                times, skipped = [], 0
                for fw in fws:
                    t0 = time.perf_counter()
                    try:
                        assumption_extensions(fw, sem, b)
                    except ResourceLimitError:
                        skipped += 1
                        continue
                    times.append(1000 * (time.perf_counter() - t0))
                med = statistics.median(times) if times else float("nan")
                top = max(times) if times else float("nan")
                print(f"{n:>3} {sem:>12} {str(b):>6} {med:>10.2f} {top:>9.2f} {skipped:>8}")


if __name__ == "__main__":
    main()

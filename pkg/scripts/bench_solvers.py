"""Wall time of the search solvers on random instances, one CSV row per solve.

    python3 scripts/bench_solvers.py --n 2 3 4 --q 1 10 100 --trials 5
"""

import argparse
import csv
import sys
import time

import numpy as np

from pauligeo.errors import TooLarge
from pauligeo.lattice import minimize_bnb, minimize_brute
from pauligeo.metrics import MetricSpec
from pauligeo.transform import TWO_PI

SOLVERS = {"brute": minimize_brute, "bnb": minimize_bnb}


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, nargs="+", default=[2, 3, 4])
    p.add_argument("--q", type=float, nargs="+", default=[1.0, 10.0, 100.0])
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()
    rng = np.random.default_rng(args.seed)
    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["solver", "n", "q", "trial", "wall_ms", "length"])
    for n in args.n:
        for trial in range(args.trials):
            h = rng.uniform(0.0, TWO_PI, 1 << n)
            for q in args.q:
                for name, solve in SOLVERS.items():
                    start = time.perf_counter()
                    try:
                        length = repr(solve(h, MetricSpec.fq(q)).length)
                    except TooLarge:
                        length = "too-large"
                    ms = (time.perf_counter() - start) * 1e3
                    out.writerow([name, n, q, trial, f"{ms:.2f}", length])


if __name__ == "__main__":
    main()

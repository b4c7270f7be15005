"""Minimal family length at q = 4**n for a range of n, compared with pi * 2**n.

    python3 scripts/scaling_table.py --n 3 4 5 6
"""

import argparse
import math
import time

from pauligeo.family import exponential_scaling_table


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, nargs="+", default=[3, 4, 5])
    args = p.parse_args()
    print(f"{'n':>3} {'q':>8} {'length/pi':>12} {'2**n':>6} {'seconds':>8}")
    for n in args.n:
        start = time.perf_counter()
        (row,) = exponential_scaling_table([n])
        secs = time.perf_counter() - start
        print(f"{row.n:3d} {row.q:8g} {row.length / math.pi:12.6f} {2**n:6d} {secs:8.2f}")


if __name__ == "__main__":
    main()

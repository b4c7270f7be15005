"""Minimal F_q length of the weight-3 family against q*pi/N.

    python3 scripts/lemma2_table.py --n 3 --q 1 8 64 512 --solver brute
"""

import argparse
import math

from pauligeo.family import default_sigma, verify_lemma2


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--sigma", type=lambda s: int(s, 0))
    p.add_argument("--q", type=float, nargs="+", default=[1, 8, 64, 512])
    p.add_argument("--solver", choices=["auto", "brute", "bnb"], default="auto")
    args = p.parse_args()
    sigma = default_sigma(args.n) if args.sigma is None else args.sigma
    print(f"{'q':>8} {'minimum':>14} {'q*pi/N':>14} {'min/pi':>10}  equal")
    for r in verify_lemma2(args.n, sigma, args.q, solver=args.solver):
        print(f"{r.q:8g} {r.minimum:14.9f} {r.bound:14.9f} {r.minimum / math.pi:10.6f}  {r.equality}")


if __name__ == "__main__":
    main()

"""How far the minimum moves when the degenerate family eigenvalues are split.

    python3 scripts/perturbation_sweep.py --n 3 --q 1e6 --eps 1e-6 1e-4 1e-2
"""

import argparse

from pauligeo.family import FamilyInstance, default_sigma, perturbation_report


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--q", type=float, nargs="+", default=[1e6])
    p.add_argument("--eps", type=float, nargs="+", default=[1e-6, 1e-4, 1e-2])
    args = p.parse_args()
    print(f"{'epsilon':>10} {'q':>10} {'|shift|':>12} {'q*eps':>12} distinct")
    for eps in args.eps:
        inst = FamilyInstance(args.n, default_sigma(args.n), eps)
        for r in perturbation_report(inst, args.q):
            shift = abs(r.minimum - r.unperturbed)
            print(f"{eps:10.1e} {r.q:10.3g} {shift:12.4e} {r.bound:12.4e} {r.distinct}")


if __name__ == "__main__":
    main()

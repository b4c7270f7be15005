"""Command-line interface: ``pauligeo {expand,minimize,family,verify,bench}``.

Exit codes: 0 ok, 1 verify property failed, 2 parse error, 3 invariant
violation, 4 unsupported flag combination, 5 instance too large for solver.
"""

import argparse
import csv
import io
import sys
import time

import numpy as np

from . import documents, family, suites
from .errors import (
    BadDimension,
    EpsilonTooLarge,
    InvalidSpec,
    InvariantViolation,
    NonUnitModulus,
    ParseError,
    TooLarge,
    WeightTooLow,
)
from .lattice import minimize_bnb, minimize_brute, minimize_f2_closed_form
from .metrics import MetricSpec
from .transform import TWO_PI, expand

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_INVARIANT, EXIT_UNSUPPORTED, EXIT_TOO_LARGE = range(6)


class Unsupported(Exception):
    pass


def _write(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _float_list(text):
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _spec_from_flags(metric, q):
    if metric == "f1":
        raise Unsupported(
            "F1 has no exact minimiser (open question for this metric); minimise fq or f2 "
            "instead, the result document reports F1 at that optimum as an upper bound"
        )
    if metric == "fq":
        if q is None:
            raise Unsupported("--metric fq requires --q")
        return MetricSpec.fq(q)
    if q is not None:
        raise Unsupported("--q only applies to --metric fq")
    return MetricSpec.f2()


def solve(h, spec, solver, workers=1):
    if solver == "rounding":
        if spec.weight != 1.0:
            raise Unsupported("the rounding solver is exact only for F2 (q = 1)")
        return minimize_f2_closed_form(h)
    if solver == "brute":
        return minimize_brute(h, spec)
    if solver == "bnb":
        return minimize_bnb(h, spec, workers=workers)
    raise Unsupported(f"unknown solver {solver!r}")


def cmd_expand(args):
    _, h = documents.load_input(args.input)
    _write(args.output, documents.coefficient_csv(expand(h), digits=args.digits))
    return EXIT_OK


def cmd_minimize(args):
    doc, h = documents.load_input(args.input)
    spec = _spec_from_flags(args.metric, args.q)
    start = time.perf_counter()
    result = solve(h, spec, args.solver, workers=args.workers)
    wall_ms = (time.perf_counter() - start) * 1e3
    out = documents.result_document(doc, spec, result, wall_ms)
    documents.check_result(out)
    _write(args.output, documents.dumps(out))
    return EXIT_OK


def cmd_family(args):
    if not 3 <= args.n <= 8:
        raise BadDimension(f"--n must satisfy 3 <= n <= 8, got {args.n}")
    sigma = family.default_sigma(args.n) if args.sigma is None else args.sigma
    inst = family.FamilyInstance(args.n, sigma, args.epsilon)
    phases = family.perturb(inst)
    q_list = args.q_list
    lemma2 = family.verify_lemma2(args.n, sigma, q_list, solver=args.solver)
    scaling = family.exponential_scaling_table([args.n], sigma=sigma)[0]
    report = {
        "instance": {"n": inst.n, "sigma": inst.sigma, "epsilon": inst.epsilon,
                     "rule": inst.rule, "phases": [float(v) for v in phases]},
        "lemma2": [
            {"q": r.q, "minimum": r.minimum, "bound": r.bound, "ratio": r.minimum / r.q,
             "holds": r.holds, "equality": r.equality, "solver": r.solver}
            for r in lemma2
        ],
        "scaling": {"n": scaling.n, "N": scaling.N, "q": scaling.q, "length": scaling.length,
                    "expected": scaling.expected, "ok": scaling.ok},
    }
    if inst.epsilon > 0:
        rows = family.perturbation_report(inst, q_list, solver=args.solver)
        report["perturbation"] = [
            {"q": r.q, "epsilon": r.epsilon, "minimum": r.minimum,
             "unperturbed": r.unperturbed, "bound": r.bound, "within": r.within,
             "distinct": r.distinct}
            for r in rows
        ]
    _write(args.output, documents.dumps(report))
    return EXIT_OK


def cmd_verify(args):
    report = suites.run_suite(args.suite, trials=args.trials, seed=args.seed, n_max=args.n_max)
    for prop in report["properties"]:
        status = "PASS" if prop["passed"] else "FAIL"
        print(f"{status} {report['suite']}: {prop['name']}", file=sys.stderr)
    _write(args.output, documents.dumps(report))
    return EXIT_OK if report["passed"] else EXIT_FAIL


def cmd_bench(args):
    solvers = [s for s in args.solver.split(",") if s]
    if args.instance == "family":
        h = family.make_h0(args.n, family.default_sigma(args.n))
    else:
        h = np.random.default_rng(args.seed).uniform(0.0, TWO_PI, 1 << args.n)
    spec = MetricSpec.fq(args.q)
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["solver", "n", "q", "run", "wall_ms", "length"])
    for solver in solvers:
        for run in range(args.repeat):
            start = time.perf_counter()
            res = solve(h, spec, solver, workers=args.workers)
            wall_ms = (time.perf_counter() - start) * 1e3
            writer.writerow([solver, args.n, repr(args.q), run, f"{wall_ms:.3f}", repr(res.length)])
    _write(args.output, out.getvalue())
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="pauligeo", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("expand", help="Pauli coefficients of an input document as CSV")
    e.add_argument("input")
    e.add_argument("-o", "--output", default="-")
    e.add_argument("--digits", type=int, default=10,
                   help="decimals per coefficient; 0 for full round-trip precision")
    e.set_defaults(func=cmd_expand)

    m = sub.add_parser("minimize", help="shortest constant geodesic as a JSON result document")
    m.add_argument("input")
    m.add_argument("--metric", choices=["fq", "f2", "f1"], default="f2")
    m.add_argument("--q", type=float)
    m.add_argument("--solver", choices=["rounding", "brute", "bnb"], default="bnb")
    m.add_argument("--workers", type=int, default=1)
    m.add_argument("-o", "--output", default="-")
    m.set_defaults(func=cmd_minimize)

    f = sub.add_parser("family", help="exponential-length family and its bound checks")
    f.add_argument("--n", type=int, default=3)
    f.add_argument("--sigma", type=lambda s: int(s, 0))
    f.add_argument("--epsilon", type=float, default=0.0)
    f.add_argument("--q-list", type=_float_list, default=[1.0, 8.0, 64.0, 512.0])
    f.add_argument("--solver", choices=["auto", "brute", "bnb"], default="auto")
    f.add_argument("-o", "--output", default="-")
    f.set_defaults(func=cmd_family)

    v = sub.add_parser("verify", help="run a seeded property suite")
    v.add_argument("--suite", choices=suites.SUITES, required=True)
    v.add_argument("--trials", type=int)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--n-max", type=int)
    v.add_argument("-o", "--output", default="-")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="time solvers on one instance, CSV output")
    b.add_argument("--solver", default="bnb", help="comma-separated: rounding,brute,bnb")
    b.add_argument("--n", type=int, default=3)
    b.add_argument("--q", type=float, default=100.0)
    b.add_argument("--repeat", type=int, default=3)
    b.add_argument("--instance", choices=["family", "random"], default="family")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--workers", type=int, default=1)
    b.add_argument("-o", "--output", default="-")
    b.set_defaults(func=cmd_bench)
    return p


_EXIT_CODES = {
    ParseError: EXIT_PARSE,
    InvariantViolation: EXIT_INVARIANT,
    NonUnitModulus: EXIT_INVARIANT,
    BadDimension: EXIT_INVARIANT,
    WeightTooLow: EXIT_INVARIANT,
    EpsilonTooLarge: EXIT_INVARIANT,
    Unsupported: EXIT_UNSUPPORTED,
    InvalidSpec: EXIT_UNSUPPORTED,
    TooLarge: EXIT_TOO_LARGE,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except tuple(_EXIT_CODES) as exc:
        print(f"pauligeo {args.command}: {exc}", file=sys.stderr)
        return next(code for kind, code in _EXIT_CODES.items() if isinstance(exc, kind))


if __name__ == "__main__":
    sys.exit(main())

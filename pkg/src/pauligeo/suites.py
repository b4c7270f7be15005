"""Seeded property suites behind ``pauligeo verify``.

Each suite returns a JSON-ready report. Reports contain no timings, so two
runs with the same arguments produce identical bytes.
"""

import math

import numpy as np

from . import family
from .documents import phases_document
from .lattice import TOL, minimize_bnb, minimize_brute, minimize_f2_closed_form
from .metrics import MetricSpec
from .transform import TWO_PI, eigenphases_from_unitary, expand, unexpand

SUITES = ("roundtrip", "parseval", "f2bound", "lemma2", "solver-xcheck")
DEFAULT_TRIALS = {"roundtrip": 100, "parseval": 100, "f2bound": 1000, "lemma2": 0, "solver-xcheck": 50}
DEFAULT_N_MAX = {"roundtrip": 10, "parseval": 10, "f2bound": 6, "lemma2": 3, "solver-xcheck": 3}

ROUNDTRIP_RTOL = 1e-12
PARSEVAL_RTOL = 1e-9
FAMILY_Q = (1, 8, 64, 512)


def _property(name, passed, counterexample=None, **details):
    entry = {"name": name, "passed": bool(passed), **details}
    if counterexample is not None:
        entry["counterexample"] = phases_document(counterexample)
    return entry


def _random_phases(rng, n):
    return rng.uniform(0.0, TWO_PI, 1 << n)


def suite_roundtrip(trials, seed, n_max):
    rng = np.random.default_rng(seed)
    props = []
    for n in range(1, n_max + 1):
        worst, bad = 0.0, None
        for _ in range(trials):
            h = _random_phases(rng, n)
            err = float(np.max(np.abs(unexpand(expand(h)) - h)) / np.max(np.abs(h)))
            if err > worst:
                worst = err
            if err > ROUNDTRIP_RTOL and bad is None:
                bad = h
        props.append(_property(f"roundtrip n={n}", bad is None, bad,
                               trials=trials, max_rel_error=worst, tolerance=ROUNDTRIP_RTOL))
    return props


def suite_parseval(trials, seed, n_max):
    rng = np.random.default_rng(seed)
    props = []
    for n in range(1, n_max + 1):
        worst, bad = 0.0, None
        for _ in range(trials):
            h = _random_phases(rng, n)
            lhs = float(np.sum(expand(h) ** 2))
            rhs = float(np.sum(h**2)) / len(h)
            err = abs(lhs - rhs) / rhs
            worst = max(worst, err)
            if err > PARSEVAL_RTOL and bad is None:
                bad = h
        props.append(_property(f"parseval n={n}", bad is None, bad,
                               trials=trials, max_rel_error=worst, tolerance=PARSEVAL_RTOL))
    return props


def suite_f2bound(trials, seed, n_max):
    """Minimal F2 length of random diagonal unitaries never exceeds 2*pi."""
    rng = np.random.default_rng(seed)
    worst, bad, within_pi = 0.0, None, 0
    for _ in range(trials):
        n = int(rng.integers(1, n_max + 1))
        diag = np.exp(-1j * _random_phases(rng, n))
        h = eigenphases_from_unitary(diag)
        length = minimize_f2_closed_form(h).length
        worst = max(worst, length)
        within_pi += length <= math.pi + TOL
        if length > TWO_PI and bad is None:
            bad = h
    return [
        _property("f2 length <= 2*pi", bad is None, bad, trials=trials, max_length=worst,
                  bound=TWO_PI),
        # the rounding solver's own guarantee; reported alongside, not a claim being checked
        _property("f2 length <= pi (rounding)", within_pi == trials, trials=trials,
                  count_within_pi=within_pi),
    ]


def suite_lemma2(trials, seed, n_max):
    rows = family.verify_lemma2(3, 0b111, FAMILY_Q, solver="brute")
    table = [{"q": r.q, "minimum": r.minimum, "q_pi_over_N": r.bound} for r in rows]
    return [
        _property("min >= q*pi/N", all(r.holds for r in rows), table=table),
        _property("min == q*pi/N", all(r.equality for r in rows)),
    ]


def suite_solver_xcheck(trials, seed, n_max):
    rng = np.random.default_rng(seed)
    sizes = [n for n in (2, 3) if n <= n_max] or [min(n_max, 3)]
    worst_bnb, worst_cf = 0.0, 0.0
    bad_bnb = bad_cf = None
    for t in range(trials):
        n = sizes[t % len(sizes)]
        h = _random_phases(rng, n)
        for q in (1.0, 10.0):
            spec = MetricSpec.fq(q)
            brute = minimize_brute(h, spec)
            bnb = minimize_bnb(h, spec)
            d = abs(brute.length - bnb.length)
            worst_bnb = max(worst_bnb, d)
            if d > TOL and bad_bnb is None:
                bad_bnb = h
            if q == 1.0:
                d = abs(minimize_f2_closed_form(h).length - brute.length)
                worst_cf = max(worst_cf, d)
                if d > TOL and bad_cf is None:
                    bad_cf = h
    return [
        _property("bnb == brute", bad_bnb is None, bad_bnb, trials=trials, max_abs_diff=worst_bnb),
        _property("rounding == brute at q=1", bad_cf is None, bad_cf, trials=trials,
                  max_abs_diff=worst_cf),
    ]


_RUNNERS = {
    "roundtrip": suite_roundtrip,
    "parseval": suite_parseval,
    "f2bound": suite_f2bound,
    "lemma2": suite_lemma2,
    "solver-xcheck": suite_solver_xcheck,
}


def run_suite(name: str, trials: int | None = None, seed: int = 0, n_max: int | None = None) -> dict:
    if name not in _RUNNERS:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    trials = DEFAULT_TRIALS[name] if trials is None else trials
    n_max = DEFAULT_N_MAX[name] if n_max is None else n_max
    props = _RUNNERS[name](trials, seed, n_max)
    return {
        "suite": name,
        "seed": seed,
        "trials": trials,
        "n_max": n_max,
        "passed": all(p["passed"] for p in props),
        "properties": props,
    }

"""The exponential-length family U = exp(-i H0), H0 = (pi/N) * sigma.

For a Z-string ``sigma`` of weight >= 3, every constant geodesic of U has
length at least q*pi/N under F_q, and J = 0 attains it. With q = 4**n this is
pi * 2**n. The eigenvalue-splitting perturbation moves the minimum by at most
q * epsilon.
"""

from dataclasses import dataclass, field
import math

import numpy as np

from .errors import BadDimension, EpsilonTooLarge, WeightTooLow
from .lattice import TOL, minimize_bnb, minimize_brute
from .metrics import MetricSpec
from .transform import canonicalize, pauli_weight

PERTURBATION_RULE = "ramp"  # h_k + epsilon * (k + 1) / N


def default_sigma(n: int) -> int:
    """Lowest-order weight-3 string: Z on qubits 0, 1, 2."""
    return 0b111


@dataclass(frozen=True)
class FamilyInstance:
    n: int
    sigma: int = 0b111
    epsilon: float = 0.0
    rule: str = PERTURBATION_RULE

    def __post_init__(self):
        _check(self.n, self.sigma)
        if not self.epsilon >= 0.0:
            raise EpsilonTooLarge(f"epsilon must be >= 0, got {self.epsilon!r}")
        if self.rule != PERTURBATION_RULE:
            raise ValueError(f"unknown perturbation rule {self.rule!r}")

    @property
    def N(self) -> int:
        return 1 << self.n


def _check(n, sigma):
    if n < 3:
        raise BadDimension(f"the family needs n >= 3, got {n}")
    if not 0 <= sigma < (1 << n):
        raise BadDimension(f"sigma {sigma} is not an {n}-bit mask")
    if pauli_weight(sigma) < 3:
        raise WeightTooLow(f"sigma {sigma:#b} has Pauli weight {pauli_weight(sigma)} < 3")


def make_h0(n: int, sigma: int) -> np.ndarray:
    """Diagonal of H0 = (pi/N) * sigma, i.e. (pi/N) * (-1)**popcount(k & sigma)."""
    _check(n, sigma)
    N = 1 << n
    k = np.arange(N, dtype=np.uint64)
    parity = np.bitwise_count(k & np.uint64(sigma)) & 1
    return (math.pi / N) * (1.0 - 2.0 * parity)


def perturb(instance: FamilyInstance) -> np.ndarray:
    """Canonical phases of U' with all N eigenvalues split apart."""
    N = instance.N
    if instance.epsilon >= math.pi / N:
        raise EpsilonTooLarge(
            f"epsilon {instance.epsilon!r} must be below pi/N = {math.pi / N!r}"
        )
    h = make_h0(instance.n, instance.sigma)
    ramp = instance.epsilon * (np.arange(N) + 1.0) / N
    return canonicalize(h + ramp)


def _solve(h, q, solver, workers=1):
    n = len(h).bit_length() - 1
    if solver == "auto":
        solver = "brute" if n <= 3 else "bnb"
    spec = MetricSpec.fq(q)
    if solver == "brute":
        return minimize_brute(h, spec)
    if solver == "bnb":
        return minimize_bnb(h, spec, workers=workers)
    raise ValueError(f"unknown solver {solver!r}")


@dataclass
class FamilyMinimumRow:
    q: float
    minimum: float
    bound: float
    solver: str
    offset: tuple[int, ...] = field(repr=False)

    @property
    def holds(self) -> bool:
        return self.minimum >= self.bound - TOL

    @property
    def equality(self) -> bool:
        return abs(self.minimum - self.bound) <= TOL


def verify_lemma2(n: int, sigma: int, q_list, solver: str = "auto") -> list[FamilyMinimumRow]:
    """Minimise F_q over offsets for H0 and compare with q*pi/N."""
    h = make_h0(n, sigma)
    N = 1 << n
    rows = []
    for q in q_list:
        if q < 1:
            raise ValueError(f"q must be >= 1, got {q}")
        res = _solve(h, float(q), solver)
        rows.append(FamilyMinimumRow(float(q), res.length, float(q) * math.pi / N, res.solver, res.offset))
    return rows


@dataclass
class ScalingRow:
    n: int
    N: int
    q: float
    length: float
    expected: float

    @property
    def ok(self) -> bool:
        return abs(self.length - self.expected) <= TOL * self.q


def exponential_scaling_table(n_list, q_rule=lambda n: 4.0**n, sigma=None,
                              solver: str = "bnb") -> list[ScalingRow]:
    """Minimal family length for each n at q = q_rule(n); expected q*pi/N."""
    rows = []
    for n in n_list:
        if not 3 <= n <= 8:
            raise BadDimension(f"scaling table supports 3 <= n <= 8, got {n}")
        q = float(q_rule(n))
        s = default_sigma(n) if sigma is None else sigma
        res = _solve(make_h0(n, s), q, solver)
        N = 1 << n
        rows.append(ScalingRow(n, N, q, res.length, q * math.pi / N))
    return rows


@dataclass
class PerturbationRow:
    q: float
    epsilon: float
    minimum: float
    unperturbed: float
    distinct: bool

    @property
    def bound(self) -> float:
        return self.q * self.epsilon

    @property
    def within(self) -> bool:
        return abs(self.minimum - self.unperturbed) <= self.bound + TOL


def distinct_phases(h) -> bool:
    s = np.sort(np.asarray(h, dtype=np.float64))
    return bool(np.all(np.diff(s) > 0.0))


def perturbation_report(instance: FamilyInstance, q_list, solver: str = "auto") -> list[PerturbationRow]:
    """Minimum for U' against the unperturbed minimum q*pi/N and the q*epsilon bound."""
    h = perturb(instance)
    h0 = make_h0(instance.n, instance.sigma)
    distinct = distinct_phases(h)
    rows = []
    for q in q_list:
        res = _solve(h, float(q), solver)
        base = _solve(h0, float(q), solver)
        rows.append(PerturbationRow(float(q), instance.epsilon, res.length, base.length, distinct))
    return rows


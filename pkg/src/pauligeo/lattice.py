"""Constant geodesics of a diagonal unitary and their minimal length.

Every constant geodesic from I to U = diag(exp(-1j*h)) has Hamiltonian
``diag(h - 2*pi*j)`` for an integer offset vector j, and length
``metric_value(expand(h - 2*pi*j))``. Minimising over j is a closest-vector
problem in the lattice 2*pi*Z**N under the (Hadamard-rotated, q-weighted)
metric. Three solvers are provided:

* ``minimize_f2_closed_form``: coordinate-wise rounding, exact for F_2.
* ``minimize_brute``: exhaustive box search, n <= 3, used as the oracle.
* ``minimize_bnb``: LLL-preconditioned Schnorr-Euchner enumeration, n <= 8.

All solvers break ties (lengths within ``TOL``) towards the lexicographically
smallest offset.
"""

from dataclasses import dataclass
from functools import lru_cache
import itertools
import math

import numpy as np

from . import cvp
from .errors import DimensionMismatch, DomainError, InvalidSpec, TooLarge
from .metrics import MetricSpec, metric_value, weight_vector
from .transform import TWO_PI, expand, num_qubits, walsh_matrix

TOL = 1e-9
BRUTE_MAX_QUBITS = 3
BNB_MAX_QUBITS = 8
BRUTE_MAX_POINTS = 2_000_000
BRUTE_FALLBACK_RADIUS = 2
# below this q, enumerate offsets directly with the separable F2 floor
SPLIT_BELOW_Q = 2.0
SPLIT_ALPHA = 0.9


@dataclass(frozen=True, eq=False)
class GeodesicResult:
    offset: tuple[int, ...]
    length: float
    coeffs: np.ndarray
    solver: str
    optimal: bool

    @property
    def hamiltonian_offset(self) -> np.ndarray:
        return TWO_PI * np.asarray(self.offset, dtype=np.float64)


def _check_pair(h, j):
    h = np.asarray(h, dtype=np.float64)
    j = np.asarray(j)
    if h.shape != j.shape:
        raise DimensionMismatch(f"phases have shape {h.shape}, offset has {j.shape}")
    num_qubits(h)
    return h, j


def geodesic_length(h, j, spec: MetricSpec) -> float:
    """Length of the constant geodesic exp(-1j*(H - J)*t)."""
    h, j = _check_pair(h, j)
    return metric_value(expand(h - TWO_PI * j), spec)


def evaluate_curve(h, j, t: float) -> np.ndarray:
    """Diagonal of exp(-1j*(H - J)*t) for t in [0, 1]."""
    if not 0.0 <= t <= 1.0:
        raise DomainError(f"t must lie in [0, 1], got {t!r}")
    h, j = _check_pair(h, j)
    return np.exp(-1j * (h - TWO_PI * j) * t)


def projection_gap(n: int) -> float:
    """Spacing of lattice points projected onto any one Pauli coefficient."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return TWO_PI / (1 << n)


def relaxation_lower_bound(h, spec: MetricSpec) -> float:
    """Lower bound on min_j length from per-coordinate lattice projections.

    Each Pauli coefficient of 2*pi*j lies in projection_gap(n) * Z, so the
    coefficient of H - J at mask m is at least its distance to that grid.
    """
    h = np.asarray(h, dtype=np.float64)
    n = num_qubits(h)
    gap = projection_gap(n)
    lam = expand(h)
    dist = np.abs(lam - gap * np.round(lam / gap))
    w = weight_vector(n, spec.weight)
    return float(np.sqrt(np.sum((w * dist) ** 2)))


def _result(h, j, spec, solver, optimal=True) -> GeodesicResult:
    j = tuple(int(v) for v in j)
    coeffs = expand(h - TWO_PI * np.asarray(j, dtype=np.float64))
    return GeodesicResult(j, metric_value(coeffs, spec), coeffs, solver, optimal)


def _pick(h, candidates, spec):
    """Lexicographically smallest offset among those within TOL of the best."""
    scored = [(geodesic_length(h, j, spec), tuple(j)) for j in candidates]
    best = min(s for s, _ in scored)
    return min(j for s, j in scored if s <= best + TOL)


def _euclidean_spec(spec: MetricSpec) -> float:
    if spec.kind == "F1":
        raise InvalidSpec("no exact minimiser for F1; evaluate it at an F2/Fq optimum instead")
    return spec.weight


def minimize_f2_closed_form(h) -> GeodesicResult:
    """Exact F_2 minimum: reduce every phase to its nearest representative.

    F_2 equals sqrt(sum_k r_k**2 / N) for residuals r = h - 2*pi*j, so the
    problem separates by coordinate. Near-ties are resolved greedily towards
    the smaller offset while the total stays within TOL of the optimum.
    """
    h = np.asarray(h, dtype=np.float64)
    N = 1 << num_qubits(h)
    x = h / TWO_PI
    lo = np.floor(x)
    r_lo = (h - TWO_PI * lo) ** 2
    r_hi = (h - TWO_PI * (lo + 1)) ** 2
    best_sq = np.minimum(r_lo, r_hi)
    opt = math.sqrt(float(np.sum(best_sq)) / N)
    budget = N * ((opt + TOL) ** 2 - opt**2)
    j = np.where(r_lo <= r_hi, lo, lo + 1)
    for k in range(N):
        if j[k] != lo[k]:
            extra = r_lo[k] - r_hi[k]
            if extra <= budget:
                j[k] = lo[k]
                budget -= extra
    return _result(h, j, MetricSpec.f2(), "rounding")


def _lengths_dense(h, js, walsh, w):
    resid = h[None, :] - TWO_PI * js
    coeffs = resid @ walsh / len(h)
    return np.sqrt(np.sum((coeffs * w) ** 2, axis=1))


def _scan_box(h, ranges, walsh, w):
    """Exhaustively score every offset in the product of ``ranges``."""
    N = len(h)
    # split into an outer Python loop and an inner vectorised block
    inner = N
    size = 1
    while inner > 0 and size * len(ranges[inner - 1]) <= 200_000:
        inner -= 1
        size *= len(ranges[inner])
    tail = np.stack(np.meshgrid(*ranges[inner:], indexing="ij"), -1).reshape(-1, N - inner)
    best = math.inf
    keep: list[tuple[float, tuple[int, ...]]] = []
    for head in itertools.product(*ranges[:inner]):
        js = np.empty((len(tail), N))
        js[:, :inner] = head
        js[:, inner:] = tail
        lengths = _lengths_dense(h, js, walsh, w)
        best = min(best, float(lengths.min()))
        near = np.flatnonzero(lengths <= best + 2 * TOL)
        keep = [kv for kv in keep if kv[0] <= best + 2 * TOL]
        keep.extend((float(lengths[i]), tuple(int(v) for v in js[i])) for i in near)
    return best, [j for _, j in keep]


def minimize_brute(h, spec: MetricSpec) -> GeodesicResult:
    """Exhaustive reference minimiser for n <= 3.

    The searched box is the bounding box of the sublevel ellipsoid
    {x : length(x) <= L} around h / 2*pi, with L the best length found in a
    small neighbourhood of the rounding point. When that box is too large to
    scan, the fixed box of radius 2 around the rounding point is scanned
    instead and its minimum must meet ``relaxation_lower_bound`` to count as
    certified.
    """
    h = np.asarray(h, dtype=np.float64)
    n = num_qubits(h)
    if n > BRUTE_MAX_QUBITS:
        raise TooLarge(f"brute force is limited to n <= {BRUTE_MAX_QUBITS}, got n = {n}")
    q = _euclidean_spec(spec)
    N = 1 << n
    walsh = walsh_matrix(n)
    w = weight_vector(n, q)
    x = h / TWO_PI
    center = np.array(minimize_f2_closed_form(h).offset)

    def around(radius):
        return [np.arange(c - radius, c + radius + 1) for c in center]

    local, _ = _scan_box(h, around(1), walsh, w)
    # diagonal of the inverse Gram matrix in j-space is the same for every k
    half = (local + 2 * TOL) / TWO_PI * math.sqrt(float(np.sum(w**-2.0)))
    ranges = [np.arange(math.ceil(xk - half), math.floor(xk + half) + 1) for xk in x]
    points = math.prod(len(r) for r in ranges)
    if points <= BRUTE_MAX_POINTS:
        _, cands = _scan_box(h, ranges, walsh, w)
    else:
        best, cands = _scan_box(h, around(BRUTE_FALLBACK_RADIUS), walsh, w)
        bound = relaxation_lower_bound(h, spec)
        if best > bound + TOL:
            raise TooLarge(
                f"certified search box has {points} points (limit {BRUTE_MAX_POINTS}) "
                f"and the radius-{BRUTE_FALLBACK_RADIUS} minimum {best!r} does not meet "
                f"the projection lower bound {bound!r}"
            )
    return _result(h, _pick(h, cands, spec), spec, "brute")


@lru_cache(maxsize=64)
def _reduced_bases(n: int, q: float):
    """LLL-reduced lattice bases in j-space for the weighted metric.

    Two starting points are reduced: the identity (ideal near q = 1) and the
    Boolean monomial basis ordered by degree, whose low-degree span is exactly
    the unweighted weight <= 2 subspace (good for large q).
    """
    N = 1 << n
    walsh = walsh_matrix(n)
    w = weight_vector(n, q)
    lattice = (TWO_PI / N) * (w[:, None] * walsh)
    k = np.arange(N)
    order = sorted(range(N), key=lambda m: (int(m).bit_count(), m))
    monomial = np.array([(k & m) == m for m in order], dtype=np.int64).T
    out = []
    for start in (np.eye(N, dtype=np.int64), monomial):
        reduced, U = cvp.lll_reduce(lattice @ start)
        T = start @ U
        Tinv = np.rint(np.linalg.inv(T)).astype(np.int64)
        if not np.array_equal(T @ Tinv, np.eye(N, dtype=np.int64)):
            raise ArithmeticError("basis transform lost unimodularity")
        R = np.linalg.cholesky(reduced.T @ reduced).T
        for a in (T, Tinv, R):
            a.flags.writeable = False
        out.append((T, Tinv, R))
    return tuple(out)


@lru_cache(maxsize=64)
def _split_factor(n: int, q: float):
    """Cholesky factor of G - alpha*s*I in offset coordinates, s = 4*pi**2/N.

    Since F_q >= F_2 for q >= 1, the Gram matrix G dominates s*I and the
    remainder stays positive definite.
    """
    N = 1 << n
    lattice = (TWO_PI / N) * (weight_vector(n, q)[:, None] * walsh_matrix(n))
    s = TWO_PI**2 / N
    R = np.linalg.cholesky(lattice.T @ lattice - SPLIT_ALPHA * s * np.eye(N)).T
    R.flags.writeable = False
    return R, SPLIT_ALPHA * s


def minimize_bnb(h, spec: MetricSpec, workers: int = 1) -> GeodesicResult:
    """Exact weighted-CVP minimiser by sphere enumeration, n <= 8, q >= 1.

    For q near 1 the offsets are enumerated directly and the isotropic F_2
    share of the metric is charged coordinate-wise at its integer minimum.
    Otherwise the search runs in a reduced basis T (j = T y). The rounding
    solution seeds the incumbent radius. ``workers`` splits the top-level
    branches across threads; the returned offset does not depend on it.
    """
    h = np.asarray(h, dtype=np.float64)
    n = num_qubits(h)
    if n > BNB_MAX_QUBITS:
        raise TooLarge(f"bnb is limited to n <= {BNB_MAX_QUBITS}, got n = {n}")
    q = _euclidean_spec(spec)
    if q < 1.0:
        raise InvalidSpec(f"bnb requires q >= 1, got {q!r}")
    seed = minimize_f2_closed_form(h).offset
    radius = geodesic_length(h, seed, spec)
    x = h / TWO_PI
    if q < SPLIT_BELOW_Q:
        R, s = _split_factor(n, float(q))
        inc = cvp.enumerate_closest(R, x, radius, slack=2 * TOL, workers=workers,
                                    separable=np.full(len(x), s))
        cands = [y for _, y in inc.leaves]
    else:
        bases = _reduced_bases(n, float(q))
        T, Tinv, R = min(bases, key=lambda b: cvp.log_node_estimate(b[2], radius))
        inc = cvp.enumerate_closest(R, Tinv @ x, radius, slack=2 * TOL, workers=workers)
        cands = [tuple(int(v) for v in T @ np.array(y)) for _, y in inc.leaves]
    cands.append(seed)
    return _result(h, _pick(h, cands, spec), spec, "bnb")

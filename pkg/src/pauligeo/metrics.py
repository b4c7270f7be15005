"""Pauli metrics on coefficient vectors.

Coefficients at masks of weight <= 2 (identity, one- and two-body terms) are
unweighted. Coefficients at masks of weight >= 3 are multiplied by ``q`` in
F_q. F_2 is F_q with q = 1. F_1 is offered in two forms: the square root of
an l1 sum (``literal_sqrt``) and the plain l1 sum (``plain_l1``).
"""

from dataclasses import dataclass
from functools import lru_cache
import math

import numpy as np

from .errors import InvalidSpec
from .transform import num_qubits, pauli_weights

HIGH_WEIGHT = 3
F1_VARIANTS = ("literal_sqrt", "plain_l1")


@dataclass(frozen=True)
class MetricSpec:
    kind: str
    q: float | None = None
    f1_variant: str | None = None

    def __post_init__(self):
        if self.kind == "Fq":
            if self.q is None or not math.isfinite(self.q) or self.q <= 0:
                raise InvalidSpec(f"Fq needs a finite q > 0, got {self.q!r}")
            if self.f1_variant is not None:
                raise InvalidSpec("f1_variant only applies to F1")
        elif self.kind == "F2":
            if self.q is not None or self.f1_variant is not None:
                raise InvalidSpec("F2 takes no parameters")
        elif self.kind == "F1":
            if self.q is not None:
                raise InvalidSpec("F1 takes no q")
            if self.f1_variant is None:
                object.__setattr__(self, "f1_variant", "literal_sqrt")
            if self.f1_variant not in F1_VARIANTS:
                raise InvalidSpec(f"unknown F1 variant {self.f1_variant!r}")
        else:
            raise InvalidSpec(f"unknown metric kind {self.kind!r}")

    @classmethod
    def fq(cls, q: float) -> "MetricSpec":
        return cls("Fq", q=float(q))

    @classmethod
    def f2(cls) -> "MetricSpec":
        return cls("F2")

    @classmethod
    def f1(cls, variant: str = "literal_sqrt") -> "MetricSpec":
        return cls("F1", f1_variant=variant)

    @property
    def weight(self) -> float:
        """Multiplier on weight >= 3 coefficients (F_q and F_2 only)."""
        if self.kind == "Fq":
            return self.q
        if self.kind == "F2":
            return 1.0
        raise InvalidSpec("F1 is not a weighted Euclidean norm")

    def to_dict(self) -> dict:
        d = {"kind": self.kind}
        if self.q is not None:
            d["q"] = self.q
        if self.f1_variant is not None:
            d["f1_variant"] = self.f1_variant
        return d


@lru_cache(maxsize=None)
def _high_mask(n: int) -> np.ndarray:
    high = pauli_weights(n) >= HIGH_WEIGHT
    high.flags.writeable = False
    return high


def weight_partition(n: int) -> tuple[frozenset[int], frozenset[int]]:
    """Split all masks below 2**n into (weight <= 2, weight >= 3)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    high = _high_mask(n)
    low_set = frozenset(int(m) for m in np.flatnonzero(~high))
    high_set = frozenset(int(m) for m in np.flatnonzero(high))
    return low_set, high_set


def weight_vector(n: int, q: float) -> np.ndarray:
    """Per-mask multipliers: 1 on weight <= 2, q on weight >= 3."""
    return np.where(_high_mask(n), float(q), 1.0)


def metric_value(coeffs, spec: MetricSpec) -> float:
    c = np.asarray(coeffs, dtype=np.float64)
    n = num_qubits(c)
    if spec.kind == "F1":
        total = float(np.sum(np.abs(c)))
        return math.sqrt(total) if spec.f1_variant == "literal_sqrt" else total
    high = _high_mask(n)
    low_sq = float(np.sum(c[~high] ** 2))
    high_sq = float(np.sum(c[high] ** 2))
    q = spec.weight
    return math.sqrt(low_sq + q * q * high_sq)


def identity_contribution(coeffs) -> float:
    """Coefficient of the identity string (a global phase for SU(N) purposes)."""
    return float(np.asarray(coeffs, dtype=np.float64)[0])

"""Minimal constant Pauli geodesics of diagonal unitaries."""

from .errors import (
    BadDimension,
    DimensionMismatch,
    DomainError,
    EpsilonTooLarge,
    InvalidSpec,
    NonUnitModulus,
    PauliGeoError,
    TooLarge,
    WeightTooLow,
)
from .family import FamilyInstance, make_h0, perturb, verify_lemma2, exponential_scaling_table
from .lattice import (
    GeodesicResult,
    evaluate_curve,
    geodesic_length,
    minimize_bnb,
    minimize_brute,
    minimize_f2_closed_form,
    projection_gap,
)
from .metrics import MetricSpec, metric_value, weight_partition
from .transform import eigenphases_from_unitary, expand, pauli_weight, unexpand

__version__ = "0.1.0"

"""JSON/CSV documents exchanged by the command line.

Input document::

    {"n": 3, "phases": [h_0, ..., h_7]}
    {"n": 1, "diag": [[re, im], [re, im]]}

Phases are used as given (they describe a Hamiltonian); ``diag`` entries are
converted to canonical eigenphases in [0, 2*pi).
"""

import csv
import io
import json
import math

import numpy as np

from .errors import InvariantViolation, NonUnitModulus, ParseError
from .lattice import TOL, GeodesicResult, geodesic_length
from .metrics import MetricSpec, identity_contribution, metric_value
from .transform import eigenphases_from_unitary, pauli_weight


def _real(v, where):
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ParseError(f"{where}: expected a number, got {v!r}")
    if not math.isfinite(v):
        raise ParseError(f"{where}: non-finite value {v!r}")
    return float(v)


def parse_input(doc) -> np.ndarray:
    """Validate an input document and return its phase vector."""
    if not isinstance(doc, dict):
        raise ParseError("input document must be a JSON object")
    n = doc.get("n")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ParseError(f"field 'n' must be a positive integer, got {n!r}")
    has_phases, has_diag = "phases" in doc, "diag" in doc
    if has_phases == has_diag:
        raise ParseError("document must contain exactly one of 'phases' or 'diag'")
    key = "phases" if has_phases else "diag"
    values = doc[key]
    if not isinstance(values, list):
        raise ParseError(f"field '{key}' must be an array")
    if len(values) != 1 << n:
        raise InvariantViolation(
            f"array length = 2^n violated: '{key}' has {len(values)} entries, n = {n}"
        )
    if has_phases:
        return np.array([_real(v, f"phases[{k}]") for k, v in enumerate(values)])
    entries = []
    for k, pair in enumerate(values):
        if not isinstance(pair, list) or len(pair) != 2:
            raise ParseError(f"diag[{k}] must be a [re, im] pair")
        entries.append(complex(_real(pair[0], f"diag[{k}][0]"), _real(pair[1], f"diag[{k}][1]")))
    try:
        return eigenphases_from_unitary(entries)
    except NonUnitModulus as exc:
        raise InvariantViolation(f"unit modulus violated: {exc}") from None


def load_input(path) -> tuple[dict, np.ndarray]:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return doc, parse_input(doc)


def phases_document(h) -> dict:
    h = np.asarray(h, dtype=np.float64)
    return {"n": len(h).bit_length() - 1, "phases": [float(v) for v in h]}


def coefficient_csv(coeffs, digits: int = 10) -> str:
    """``mask,weight,coefficient`` rows, masks ascending, with a header row.

    ``digits`` is the number of decimals; 0 means shortest round-trip repr.
    """
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["mask", "weight", "coefficient"])
    for mask, c in enumerate(np.asarray(coeffs, dtype=np.float64)):
        if digits:
            c = 0.0 if abs(c) < 0.5 * 10.0**-digits else c
            text = f"{c:.{digits}f}"
        else:
            text = repr(float(c))
        writer.writerow([mask, pauli_weight(mask), text])
    return out.getvalue()


def result_document(doc: dict, spec: MetricSpec, result: GeodesicResult, wall_ms: float) -> dict:
    coeffs = result.coeffs
    return {
        "input": doc,
        "metric": spec.to_dict(),
        "solver": result.solver,
        "j": list(result.offset),
        "length": result.length,
        "coeffs": [float(c) for c in coeffs],
        "identity_contribution": identity_contribution(coeffs),
        "optimal": result.optimal,
        # F1 has no exact minimiser here; its value at this optimum bounds min F1 from above
        "f1_upper_bounds": {
            variant: metric_value(coeffs, MetricSpec.f1(variant))
            for variant in ("literal_sqrt", "plain_l1")
        },
        "wall_time_ms": wall_ms,
    }


def check_result(doc: dict) -> float:
    """Recompute a result document's length from its own fields.

    Returns the absolute discrepancy; raises InvariantViolation above TOL.
    """
    h = parse_input(doc["input"])
    spec = MetricSpec(**doc["metric"])
    length = geodesic_length(h, np.array(doc["j"]), spec)
    err = abs(length - doc["length"])
    if err > TOL:
        raise InvariantViolation(f"recorded length {doc['length']!r} != recomputed {length!r}")
    return err


def dumps(obj) -> str:
    # json writes floats with repr, the shortest string that round-trips a double
    return json.dumps(obj, indent=2) + "\n"


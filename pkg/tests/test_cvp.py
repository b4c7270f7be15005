import itertools

from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays
import numpy as np

from pauligeo.cvp import enumerate_closest, lll_reduce, log_node_estimate


@st.composite
def bases(draw, d_max=5):
    d = draw(st.integers(1, d_max))
    b = draw(arrays(np.float64, (d, d), elements=st.integers(-6, 6).map(float)))
    if abs(np.linalg.det(b)) < 0.5:
        b = b + 7 * np.eye(d)
    return b


@given(bases())
def test_lll_is_unimodular_change_of_basis(b):
    red, U = lll_reduce(b)
    assert U.dtype == np.int64
    assert round(abs(np.linalg.det(U))) == 1
    np.testing.assert_allclose(red, b @ U, atol=1e-9)


@given(bases())
def test_lll_does_not_lengthen_first_vector(b):
    red, _ = lll_reduce(b)
    assert np.linalg.norm(red[:, 0]) <= np.linalg.norm(b, axis=0).max() + 1e-9


def test_node_estimate_grows_with_radius():
    R = np.eye(4)
    assert log_node_estimate(R, 1.0) < log_node_estimate(R, 3.0)
    assert log_node_estimate(R, 0.0) == 0.0


def brute_closest(R, yhat, sep, span=3):
    best, arg = np.inf, []
    base = np.round(yhat)
    for delta in itertools.product(range(-span, span + 1), repeat=len(yhat)):
        y = base + delta
        r = yhat - y
        v = float(np.sum((R @ r) ** 2) + np.sum(sep * r * r))
        if v < best - 1e-12:
            best, arg = v, [tuple(int(t) for t in y)]
        elif v <= best + 1e-12:
            arg.append(tuple(int(t) for t in y))
    return np.sqrt(best), arg


@given(
    st.integers(1, 4).flatmap(
        lambda d: st.tuples(
            arrays(np.float64, (d, d), elements=st.floats(-2, 2)),
            arrays(np.float64, d, elements=st.floats(-5, 5)),
            arrays(np.float64, d, elements=st.floats(0, 2)),
        )
    ),
    st.booleans(),
)
@settings(max_examples=60, deadline=None)
def test_enumeration_matches_exhaustive_scan(data, use_sep):
    a, yhat, sep = data
    d = len(yhat)
    R = np.linalg.qr(a + 3 * np.eye(d))[1]
    R = R * np.sign(np.diag(R))[:, None]
    sep = sep if use_sep else np.zeros(d)
    best, args = brute_closest(R, yhat, sep)
    y0 = np.round(yhat)
    start = float(np.sqrt(np.sum((R @ (yhat - y0)) ** 2) + np.sum(sep * (yhat - y0) ** 2)))
    for workers in (1, 3):
        inc = enumerate_closest(R, yhat, start, 1e-9, workers=workers, separable=sep)
        assert abs(inc.best - best) <= 1e-9
        found = {y for dist, y in inc.leaves if dist <= inc.best + 1e-12}
        assert set(args) <= {y for _, y in inc.leaves}
        assert found

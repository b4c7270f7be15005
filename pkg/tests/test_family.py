import math

from hypothesis import given, settings, strategies as st
import numpy as np
import pytest

from pauligeo.errors import BadDimension, EpsilonTooLarge, WeightTooLow
from pauligeo.family import (
    FamilyInstance,
    default_sigma,
    distinct_phases,
    exponential_scaling_table,
    make_h0,
    perturb,
    perturbation_report,
    verify_lemma2,
)
from pauligeo.lattice import TOL
from pauligeo.transform import TWO_PI, expand

from conftest import h0_phases


@pytest.mark.parametrize("n, sigma", [(3, 0b111), (4, 0b1011), (5, 0b11111), (6, 0b101010)])
def test_h0_matches_bitwise_oracle(n, sigma):
    np.testing.assert_allclose(make_h0(n, sigma), h0_phases(n, sigma), atol=0)


@pytest.mark.parametrize("n, sigma", [(3, 0b111), (4, 0b1110), (5, 0b10101)])
def test_h0_is_single_pauli_string(n, sigma):
    c = expand(make_h0(n, sigma))
    expected = np.zeros(1 << n)
    expected[sigma] = math.pi / (1 << n)
    np.testing.assert_allclose(c, expected, atol=1e-15)


def test_validation():
    with pytest.raises(WeightTooLow):
        FamilyInstance(3, 0b011)
    with pytest.raises(BadDimension):
        FamilyInstance(2, 0b11)
    with pytest.raises(BadDimension):
        make_h0(3, 0b1111)
    with pytest.raises(EpsilonTooLarge):
        FamilyInstance(3, epsilon=-1.0)
    with pytest.raises(EpsilonTooLarge):
        perturb(FamilyInstance(3, epsilon=math.pi / 8))


def test_default_sigma_has_weight_three():
    assert bin(default_sigma(5)).count("1") == 3


@given(st.integers(3, 8), st.floats(1e-9, 0.99))
def test_perturbation_splits_all_phases(n, frac):
    eps = frac * math.pi / (1 << n)
    h = perturb(FamilyInstance(n, default_sigma(n), eps))
    assert distinct_phases(h)
    assert np.all((h >= 0) & (h < TWO_PI))
    # each phase moves by at most epsilon (mod 2*pi)
    shift = np.angle(np.exp(1j * (h - make_h0(n, default_sigma(n)))))
    assert np.all(np.abs(shift) <= eps + 1e-15)


def test_unperturbed_is_degenerate():
    assert not distinct_phases(make_h0(3, 0b111))


@pytest.mark.parametrize("solver", ["brute", "bnb"])
def test_family_minimum_equality(solver):
    rows = verify_lemma2(3, 0b111, [1, 8, 64, 512], solver=solver)
    for r in rows:
        assert r.holds and r.equality
        assert r.bound == r.q * math.pi / 8
        assert r.offset == (0,) * 8


@pytest.mark.parametrize("n, sigma, q", [(4, 0b0111, 30.0), (4, 0b1111, 3.0), (5, 0b11100, 50.0)])
def test_family_bound_other_strings(n, sigma, q):
    (row,) = verify_lemma2(n, sigma, [q], solver="bnb")
    assert row.holds
    assert row.minimum <= row.bound + TOL


def test_scaling_table():
    rows = exponential_scaling_table([3, 4, 5])
    for r in rows:
        assert r.ok
        assert r.expected == pytest.approx(math.pi * 2**r.n, rel=1e-15)


def test_scaling_table_range():
    with pytest.raises(BadDimension):
        exponential_scaling_table([2])


def test_perturbation_report_within_bound():
    inst = FamilyInstance(3, 0b111, 1e-3)
    for r in perturbation_report(inst, [1.0, 64.0]):
        assert r.distinct and r.within
        assert r.unperturbed == pytest.approx(r.q * math.pi / 8, abs=TOL)

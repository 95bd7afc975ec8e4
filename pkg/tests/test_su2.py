"""Tests for the SU(2) building blocks."""
from __future__ import annotations

import numpy as np
import pytest

from kickedqubit import (
    IDENTITY,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    compose,
    occupation_probabilities,
    su2_exponential,
    unitarity_defect,
)

# su2_exponential(0.7, (0.36, 0.48, 0.8)), frozen from a 30-term series sum
EXP_SPOT = np.array([
    [0.7648421872844884 + 0.5153741497901528j,
     0.3092244898740917 + 0.23191836740556881j],
    [-0.3092244898740917 + 0.23191836740556881j,
     0.7648421872844884 - 0.5153741497901528j],
])


def _series_exponential(phi, axis, terms=48):
    """Plain Taylor sum of exp(i phi (sigma . u)), independent of the library."""
    gen = 1j * phi * (axis[0] * SIGMA_X + axis[1] * SIGMA_Y + axis[2] * SIGMA_Z)
    out = np.zeros((2, 2), dtype=complex)
    term = np.eye(2, dtype=complex)
    for n in range(terms):
        out += term
        term = term @ gen / (n + 1)
    return out


def _random_axis(rng):
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def test_exponential_matches_frozen_spot():
    u = su2_exponential(0.7, (0.36, 0.48, 0.8))
    assert np.max(np.abs(u - EXP_SPOT)) < 1e-15


def test_exponential_matches_series_on_random_draws():
    rng = np.random.default_rng(11)
    for _ in range(200):
        phi = rng.uniform(-2 * np.pi, 2 * np.pi)
        axis = _random_axis(rng)
        u = su2_exponential(phi, axis)
        assert np.max(np.abs(u - _series_exponential(phi, axis))) < 1e-12
        assert unitarity_defect(u) < 1e-14


def test_exponential_pauli_special_cases():
    assert np.allclose(su2_exponential(0.0, (0.0, 0.0, 1.0)), IDENTITY)
    # quarter turn about z: exp(i pi/2 sz) = i sz
    u = su2_exponential(np.pi / 2, (0.0, 0.0, 1.0))
    assert np.max(np.abs(u - 1j * SIGMA_Z)) < 1e-15
    u = su2_exponential(np.pi / 2, (1.0, 0.0, 0.0))
    assert np.max(np.abs(u - 1j * SIGMA_X)) < 1e-15


def test_same_axis_exponents_add():
    rng = np.random.default_rng(12)
    for _ in range(50):
        axis = _random_axis(rng)
        a, b = rng.uniform(-3, 3, size=2)
        lhs = su2_exponential(a, axis) @ su2_exponential(b, axis)
        rhs = su2_exponential(a + b, axis)
        assert np.max(np.abs(lhs - rhs)) < 1e-14


def test_negated_angle_is_the_adjoint():
    rng = np.random.default_rng(13)
    for _ in range(50):
        axis = _random_axis(rng)
        phi = rng.uniform(-3, 3)
        u = su2_exponential(phi, axis)
        assert np.max(np.abs(su2_exponential(-phi, axis) - u.conj().T)) < 1e-15


def test_different_axes_do_not_commute():
    x = su2_exponential(0.4, (1.0, 0.0, 0.0))
    z = su2_exponential(0.9, (0.0, 0.0, 1.0))
    assert np.max(np.abs(x @ z - z @ x)) > 0.1


def test_compose_applies_first_factor_first():
    x = su2_exponential(0.4, (1.0, 0.0, 0.0))
    z = su2_exponential(0.9, (0.0, 0.0, 1.0))
    assert np.allclose(compose([x, z]), z @ x)
    assert np.allclose(compose([x]), x)


def test_compose_is_associative_in_grouping():
    rng = np.random.default_rng(14)
    mats = [su2_exponential(rng.uniform(-2, 2), _random_axis(rng))
            for _ in range(5)]
    left = compose([compose(mats[:2]), *mats[2:]])
    flat = compose(mats)
    assert np.max(np.abs(left - flat)) < 1e-14


def test_compose_long_product_stays_unitary():
    rng = np.random.default_rng(15)
    mats = [su2_exponential(rng.uniform(-np.pi, np.pi), _random_axis(rng))
            for _ in range(100)]
    assert unitarity_defect(compose(mats)) < 1e-10


def test_compose_rejects_empty_input():
    with pytest.raises(ValueError, match="at least one factor"):
        compose([])


def test_axis_validation():
    with pytest.raises(ValueError, match="unit vector"):
        su2_exponential(0.3, (1.0, 1.0, 0.0))
    with pytest.raises(ValueError, match="3-vector"):
        su2_exponential(0.3, (1.0, 0.0))


def test_occupation_probabilities():
    probs = occupation_probabilities([3j / 5, 4 / 5])
    assert probs == pytest.approx((0.36, 0.64))
    assert sum(probs) == pytest.approx(1.0)


def test_unitarity_defect_of_a_stretch():
    assert unitarity_defect(np.diag([1.0, 2.0])) == pytest.approx(3.0)
    assert unitarity_defect(IDENTITY) == 0.0

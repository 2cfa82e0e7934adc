import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from batres.continuum_spectrum import time_reverse
from batres.inverted_oscillator import (
    biortho_gram,
    iho_potential,
    resonance_eigenvalue,
    resonance_state,
    scale_function,
    truncated_norm,
)
from batres.oscillator_basis import QuantumNumbers, ho_radial
from batres.params_transforms import PhysicalParams
from batres.quadrature import gauss_laguerre_rule
from batres.radial_ode import observed_order

RHO = np.linspace(0.0, 3.0, 31)


def test_zero_dilation_is_identity(unit):
    f, _ = ho_radial(QuantumNumbers(2, 1), 1.0)
    assert np.array_equal(scale_function(f, 0.0)(RHO), f(RHO))


@settings(max_examples=30, deadline=None)
@given(st.floats(-0.7, 0.7), st.floats(-0.7, 0.7))
def test_dilations_compose(l1, l2):
    f, _ = ho_radial(QuantumNumbers(1, 2), 1.0)
    a = scale_function(scale_function(f, l1), l2)(RHO)
    b = scale_function(f, l1 + l2)(RHO)
    # past |lambda| = pi/4 the dilated Gaussian grows, so compare relatively
    assert np.max(np.abs(a - b) / np.maximum(1.0, np.abs(b))) <= 1e-12


def test_plus_ground_state_closed_form(unit):
    st0 = resonance_state(QuantumNumbers(0, 0), "+", unit)
    ref = cmath.exp(1j * math.pi / 4) * math.sqrt(2) * np.exp(-1j * RHO * RHO / 2)
    assert st0.eigenvalue == 1j
    assert np.max(np.abs(st0.radial(RHO) - ref)) <= 1e-14
    ho, _ = ho_radial(QuantumNumbers(0, 0), 1.0)
    assert np.max(np.abs(scale_function(ho, -math.pi / 4)(RHO) - ref)) <= 1e-14


def test_minus_eigenvalue():
    p = PhysicalParams(0.5, 1.0)
    assert resonance_eigenvalue(QuantumNumbers(1, 2), "-", p) == pytest.approx(-2.5j)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 8), st.integers(-5, 5), st.sampled_from([1, -1]), st.floats(0.1, 3))
def test_eigenvalue_law(n, l, s, g):
    p = PhysicalParams(g, 1.0)
    assert resonance_state(QuantumNumbers(n, l), s, p).eigenvalue == complex(0, s * g * (abs(l) + 2 * n + 1))


@pytest.mark.parametrize("n,l", [(0, 0), (1, 2), (3, -1)])
def test_conjugation_bridge(unit, n, l):
    plus = resonance_state(QuantumNumbers(n, l), +1, unit).radial
    minus = resonance_state(QuantumNumbers(n, l), -1, unit).radial
    assert np.max(np.abs(time_reverse(plus)(RHO) - minus(RHO))) <= 1e-12


def test_rotated_integrand_equals_oscillator_integrand(unit):
    rule = gauss_laguerre_rule(50)
    s = np.sqrt(rule.nodes)
    phase = cmath.exp(1j * math.pi / 4)
    for n, m in [(0, 0), (1, 2), (3, 3)]:
        up = resonance_state(QuantumNumbers(n, 0), +1, unit).radial
        um = resonance_state(QuantumNumbers(m, 0), -1, unit).radial
        rho = phase * s
        lhs = np.conj(up.evaluate(np.conj(rho))) * um.evaluate(rho) * phase * phase
        rn, _ = ho_radial(QuantumNumbers(n, 0), 1.0)
        rm, _ = ho_radial(QuantumNumbers(m, 0), 1.0)
        rhs = rn(s) * rm(s)
        assert np.max(np.abs(lhs - rhs)) <= 1e-12 * max(1.0, np.max(np.abs(rhs)))


@pytest.mark.parametrize("l", [0, 1, 2])
def test_biorthonormal_gram(unit, l):
    g = biortho_gram(3, l, unit)
    assert abs(g[0, 0] - 1) <= 1e-8 and abs(g[1, 0]) <= 1e-8
    assert np.max(np.abs(g - np.eye(4))) < 1e-8


def test_regularized_gram_agrees(unit):
    rot = biortho_gram(3, 1, unit)
    reg = biortho_gram(3, 1, unit, method="regularized")
    assert np.max(np.abs(rot - reg)) <= 1e-6


@pytest.mark.parametrize("n,l,s", [(0, 0, 1), (1, 1, -1), (2, -2, 1)])
def test_resonance_residual_second_order(unit, n, l, s):
    st_ = resonance_state(QuantumNumbers(n, l), s, unit)
    order = observed_order(st_.radial, l * l, iho_potential(unit), st_.eigenvalue, np.linspace(0.3, 3.0, 50))[0]
    assert 1.8 <= order <= 2.2


def test_truncated_norm_grows_like_r_squared(unit):
    st0 = resonance_state(QuantumNumbers(0, 0), +1, unit)
    for R in (5.0, 10.0, 20.0):
        assert truncated_norm(st0, R) == pytest.approx(R * R, rel=1e-9)


def test_truncated_norm_ratio_exceeds_ten(unit):
    # |u+_00|^2 = 2 on the real axis, so the integral is R^2 and the
    # ratio between R = 20 and R = 10 is exactly 4.
    st0 = resonance_state(QuantumNumbers(0, 0), +1, unit)
    assert truncated_norm(st0, 20.0) > 10 * truncated_norm(st0, 10.0)

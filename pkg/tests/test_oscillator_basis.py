import math

import numpy as np
import pytest
from scipy.integrate import quad
from hypothesis import given, settings
from hypothesis import strategies as st

from batres.oscillator_basis import (
    QuantumNumbers,
    RadialFunction,
    ho_gram,
    ho_projection_errors,
    ho_radial,
    overlap_radial,
)
from batres.quadrature import gauss_laguerre_rule
from batres.radial_ode import observed_order


def test_ground_state_closed_form():
    f, e = ho_radial(QuantumNumbers(0, 0), 1.0)
    r = np.linspace(0, 3, 7)
    assert np.allclose(f(r), math.sqrt(2) * np.exp(-r * r / 2), rtol=1e-15, atol=0)
    assert e == pytest.approx(1.0)


def test_eigenvalue_law():
    assert ho_radial(QuantumNumbers(1, 0), 1.0)[1] == pytest.approx(3.0)
    assert ho_radial(QuantumNumbers(2, -3), 0.5, hbar=2.0)[1] == pytest.approx(8.0)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10), st.integers(-5, 5), st.floats(0.2, 3.0))
def test_routes_agree(n, l, Omega):
    a, _ = ho_radial(QuantumNumbers(n, l), Omega)
    b, _ = ho_radial(QuantumNumbers(n, l), Omega, route="hyp1f1")
    r = np.linspace(0, 4 / math.sqrt(Omega), 41)
    scale = max(1.0, float(np.max(np.abs(a(r)))))
    assert np.max(np.abs(a(r) - b(r))) <= 1e-12 * scale * max(1, n)


def test_quantum_numbers_validated():
    with pytest.raises(ValueError):
        QuantumNumbers(-1, 0)
    with pytest.raises(ValueError):
        QuantumNumbers(0.5, 0)


def test_unit_norm_and_orthogonality():
    rule = gauss_laguerre_rule(200)
    r00, _ = ho_radial(QuantumNumbers(0, 0), 1.0)
    r10, _ = ho_radial(QuantumNumbers(1, 0), 1.0)
    assert abs(overlap_radial(r00, r00, rule=rule, scale=1.0) - 1) <= 1e-12
    assert abs(overlap_radial(r10, r00, rule=rule, scale=1.0)) <= 1e-12


@pytest.mark.parametrize("l", range(6))
def test_gram_identity(l):
    assert np.max(np.abs(ho_gram(10, l, 1.3) - np.eye(11))) < 1e-10
    assert np.max(np.abs(ho_gram(10, -l, 0.7, hbar=2.0) - np.eye(11))) < 1e-10


def test_overlap_matches_adaptive_quadrature():
    f = RadialFunction(lambda r: np.exp(-0.3 * r * r) * np.cos(r), "generic", 0)
    g, _ = ho_radial(QuantumNumbers(2, 0), 1.0)
    adaptive = overlap_radial(f, g, tol=1e-13)
    ref, _ = quad(lambda r: (f(r) * g(r)).real * r, 0, np.inf, epsabs=1e-14, epsrel=1e-13, limit=200)
    assert abs(adaptive - ref) <= 1e-9


def test_different_l_is_exactly_zero():
    a, _ = ho_radial(QuantumNumbers(0, 1), 1.0)
    b, _ = ho_radial(QuantumNumbers(0, 2), 1.0)
    assert overlap_radial(a, b) == 0


@pytest.mark.parametrize("n,l", [(0, 0), (2, 1), (4, 3), (3, -2)])
def test_radial_residual_second_order(n, l):
    f, e = ho_radial(QuantumNumbers(n, l), 1.0)
    order = observed_order(f, l * l, lambda r: 0.5 * r * r, e, np.linspace(0.3, 3.0, 50))[0]
    assert 1.8 <= order <= 2.2


def test_truncated_completeness():
    def bump(rr):
        x = (np.asarray(rr, dtype=np.complex128) / 2.5) ** 2
        out = np.zeros(x.shape, dtype=np.complex128)
        m = x.real < 1
        out[m] = np.exp(-1.0 / (1.0 - x[m]))
        return out

    errs = ho_projection_errors(RadialFunction(bump, "generic", 0), [4, 8, 16, 32], 1.0)
    assert all(b < a for a, b in zip(errs, errs[1:]))

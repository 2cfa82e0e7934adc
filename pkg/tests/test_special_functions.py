import cmath
import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from batres._backend import get_kernels
from batres.errors import (
    DivergentAtUnitArgument,
    DomainError,
    ParameterPole,
    PoleAtNonpositiveInteger,
    SeriesDomain,
)
from batres.quadrature import CircleContour, contour_integral_circle
from batres.special_functions import (
    gamma_complex,
    gauss_2f1_at_1,
    hyp1f1,
    hyp2f1_series,
    laguerre,
    rgamma,
    tricomi_u,
)

small = st.floats(-5, 5, allow_nan=False)
cplx = st.builds(complex, small, small)


def rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


# -- Gamma --------------------------------------------------------------------

def test_gamma_values():
    assert gamma_complex(5) == pytest.approx(24.0, rel=1e-14)
    assert gamma_complex(0.5) == pytest.approx(1.772453850905516, rel=1e-14)


def test_gamma_residue_by_limit():
    h = 1e-7
    assert (h * gamma_complex(-2 + h)).real == pytest.approx(0.5, rel=1e-6)


@pytest.mark.parametrize("n", [0, 1, 2, 5])
def test_gamma_pole_raises(n):
    with pytest.raises(PoleAtNonpositiveInteger):
        gamma_complex(-n)
    assert rgamma(-n) == 0


@settings(max_examples=80, deadline=None)
@given(cplx)
def test_gamma_matches_mpmath(z):
    if abs(z - round(z.real)) < 1e-3 and round(z.real) <= 0:
        return
    ref = complex(mpmath.gamma(mpmath.mpc(z)))
    assert rel(gamma_complex(z), ref) <= 1e-12


def test_gamma_reflection_region():
    z = np.array([-3.5 + 0.2j, -0.7 - 1.1j, 0.1 + 4j])
    ref = np.array([complex(mpmath.gamma(mpmath.mpc(v))) for v in z])
    assert np.max(np.abs(gamma_complex(z) - ref) / np.abs(ref)) <= 1e-12


# -- 1F1 ----------------------------------------------------------------------

def test_hyp1f1_at_zero_and_polynomial():
    assert hyp1f1(0.3 + 1j, 2.5, 0.0) == 1
    z = np.linspace(-3, 3, 7)
    assert np.allclose(hyp1f1(-1, 2, z), 1 - z / 2, rtol=0, atol=1e-15)


def test_kummer_spot_value():
    a, b, z = 0.3 + 0.2j, 2.0, 1.5j
    lhs = hyp1f1(a, b, z)
    rhs = cmath.exp(z) * hyp1f1(b - a, b, -z)
    assert rel(lhs, rhs) <= 1e-12


@settings(max_examples=100, deadline=None)
@given(cplx, st.integers(1, 6), st.builds(complex, st.floats(-10, 10), st.floats(-10, 10)))
def test_kummer_transformation(a, b, z):
    if abs(z) > 10:
        z = z * 10 / abs(z)
    lhs = hyp1f1(a, b, z)
    rhs = cmath.exp(z) * hyp1f1(b - a, b, -z)
    assert abs(lhs - rhs) <= 1e-10 * max(abs(lhs), abs(rhs), 1e-300)


@settings(max_examples=60, deadline=None)
@given(cplx, st.floats(0.5, 6), st.builds(complex, st.floats(-10, 10), st.floats(-10, 10)))
def test_hyp1f1_matches_mpmath(a, b, z):
    ref = complex(mpmath.hyp1f1(mpmath.mpc(a), b, mpmath.mpc(z)))
    scale = max(abs(ref), 1e-8 * math.exp(abs(z)))
    assert abs(hyp1f1(a, b, z) - ref) <= 1e-10 * scale


def test_hyp1f1_parameter_pole():
    with pytest.raises(ParameterPole):
        hyp1f1(0.5, -2, 1.0)


# -- Laguerre -----------------------------------------------------------------

def test_laguerre_low_degrees():
    z = np.linspace(0, 5, 6) + 0.5j
    assert np.all(laguerre(0, 1.5, z) == 1)
    assert np.allclose(laguerre(1, 0, z), 1 - z, atol=1e-15)


def test_laguerre_is_scaled_1f1():
    rng = np.random.default_rng(3)
    for _ in range(60):
        n = int(rng.integers(0, 11))
        mu = float(rng.uniform(0, 3))
        z = complex(rng.uniform(0, 8), rng.uniform(-2, 2))
        binom = math.exp(math.lgamma(n + mu + 1) - math.lgamma(n + 1) - math.lgamma(mu + 1))
        assert rel(laguerre(n, mu, z), binom * hyp1f1(-n, mu + 1, z)) <= 1e-12


def test_laguerre_negative_degree():
    with pytest.raises(DomainError):
        laguerre(-1, 0, 1.0)


# -- Tricomi U ----------------------------------------------------------------

def test_tricomi_laguerre_case():
    z = np.linspace(0.1, 4, 9)
    assert np.allclose(tricomi_u(-2, 1, z), 2 * (1 - 2 * z + z * z / 2), rtol=1e-14, atol=0)


def test_tricomi_two_term_definition():
    a, c, z = 0.7, 0.3, 2.0
    direct = (gamma_complex(1 - c) / gamma_complex(a - c + 1) * hyp1f1(a, c, z)
              + gamma_complex(c - 1) / gamma_complex(a) * z ** (1 - c) * hyp1f1(a - c + 1, 2 - c, z))
    assert rel(tricomi_u(a, c, z), direct) <= 1e-13


def test_tricomi_matches_mpmath():
    for a, c, z in [(0.7, 0.3, 2.0), (1.2 + 0.5j, 1.7, 3.0 - 1j), (0.4j, 2.0, 1.5)]:
        ref = complex(mpmath.hyperu(a, c, z))
        assert rel(tricomi_u(a, c, z), ref) <= 1e-8


def test_tricomi_reflection():
    rng = np.random.default_rng(5)
    for _ in range(40):
        a = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        c = complex(rng.uniform(0.2, 2.8), rng.uniform(-1, 1))
        z = complex(rng.uniform(0.5, 4), rng.uniform(-2, 2))
        lhs = tricomi_u(a, c, z)
        rhs = z ** (1 - c) * tricomi_u(1 + a - c, 2 - c, z)
        assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(lhs))


def test_tricomi_singular_at_origin():
    with pytest.raises(DomainError):
        tricomi_u(0.5, 0.3, 0.0)


# -- Gauss 2F1 at unit argument ----------------------------------------------

def test_gauss_trivial():
    assert gauss_2f1_at_1(0, 0.3, 2.0) == pytest.approx(1.0, abs=1e-15)


def test_gauss_value_against_series():
    a, b, c = 0.2, 0.3, 2.0
    closed = gauss_2f1_at_1(a, b, c)
    expected = math.gamma(2) * math.gamma(1.5) / (math.gamma(1.8) * math.gamma(1.7))
    assert closed.real == pytest.approx(expected, rel=1e-13)
    k = np.arange(2_000_000, dtype=float)
    terms = np.concatenate([[1.0], np.cumprod((a + k) * (b + k) / ((c + k) * (k + 1.0)))])
    tail = terms[-1] * len(terms) / 1.5  # terms ~ k^{-2.5}
    assert abs(terms.sum() + tail - closed.real) <= 1e-8


def test_gauss_divergent_configuration():
    eps, l, g = 0.7, 1, 1.0
    a = 0.5 * (abs(l) + 1 - eps / (1j * g))
    with pytest.raises(DivergentAtUnitArgument):
        gauss_2f1_at_1(a, a.conjugate(), abs(l) + 1)


def test_hyp2f1_series_against_mpmath():
    for a, b, c, x in [(0.5, 1.5j, 2.0, 0.4 + 0.3j), (1 + 1j, 1 - 1j, 3.0, -0.8)]:
        ref = complex(mpmath.hyp2f1(a, b, c, x))
        assert rel(hyp2f1_series(a, b, c, x), ref) <= 1e-12
    with pytest.raises(SeriesDomain):
        hyp2f1_series(0.5, 0.5, 1.0, 1.0)


# -- residue of Gamma by contour ---------------------------------------------

def test_gamma_residue_by_contour():
    val = contour_integral_circle(lambda z: gamma_complex(z), CircleContour(-2.0, 0.3))
    assert abs(val - math.pi * 1j) <= 1e-10


# -- backend equivalence ------------------------------------------------------

def _cython_or_skip():
    try:
        return get_kernels("cython")
    except ImportError:
        pytest.skip("compiled kernels are not built")


@pytest.mark.parametrize("fn", ["gamma", "rgamma", "hyp1f1", "hyp1f1_poly", "laguerre", "tricomi"])
def test_backends_agree(fn):
    _cython_or_skip()
    rng = np.random.default_rng(11)
    z = rng.uniform(-8, 8, 200) + 1j * rng.uniform(-8, 8, 200)
    x = np.abs(z)
    calls = {
        "gamma": lambda b: gamma_complex(z, backend=b),
        "rgamma": lambda b: rgamma(z, backend=b),
        "hyp1f1": lambda b: hyp1f1(0.3 + 0.7j, 1.5, z, backend=b),
        "hyp1f1_poly": lambda b: hyp1f1(-6, 2.5, z, backend=b),
        "laguerre": lambda b: laguerre(12, 1.0, x, backend=b),
        "tricomi": lambda b: tricomi_u(0.4 + 0.2j, 1.3, x + 0.1, backend=b),
    }
    py = calls[fn]("python")
    cy = calls[fn]("cython")
    assert np.max(np.abs(py - cy) / np.maximum(np.abs(py), 1e-300)) <= 1e-13

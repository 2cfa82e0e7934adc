import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from batres.errors import NonPositive, OverdampedRegime, UnsupportedPath
from batres.params_transforms import (
    PhasePoint,
    PhysicalParams,
    Representation,
    classical_hamiltonian,
    jacobian,
    make_params,
    symplectic_defect,
    transform,
)

coord = st.floats(-10, 10, allow_nan=False)
gammas = st.floats(0.05, 3.0)
omegas = st.floats(0.05, 3.0)
REPS = list(Representation)


def test_omega_from_kappa():
    assert make_params(0.5, 4.25, 1.0).omega == 2.0


@pytest.mark.parametrize("gamma,kappa", [(1.0, 1.0), (0.1, 0.005)])
def test_overdamped_rejected(gamma, kappa):
    with pytest.raises(OverdampedRegime):
        make_params(gamma, kappa)


def test_kappa_just_above_gamma_squared_is_underdamped():
    # 0.02 > 0.1**2, so this point is admissible
    assert make_params(0.1, 0.02).omega == pytest.approx(0.1)


@pytest.mark.parametrize("gamma,hbar", [(0.0, 1.0), (-1.0, 1.0), (1.0, 0.0)])
def test_nonpositive_rejected(gamma, hbar):
    with pytest.raises(NonPositive):
        make_params(gamma, 10.0, hbar)


def test_physical_params_validation():
    with pytest.raises(NonPositive):
        PhysicalParams(1.0, -1.0)
    assert PhysicalParams(0.5, 2.0).kappa == pytest.approx(4.25)


def test_bateman_hamiltonian_value(p_half_two):
    assert classical_hamiltonian(PhasePoint("bateman", (1, 1, 0, 0)), p_half_two) == 4.0
    assert classical_hamiltonian(PhasePoint("bateman", (0, 0, 0, 0)), p_half_two) == 0.0


def test_mode_transform_value(p_half_two):
    out = transform(PhasePoint("bateman", (1, 0, 0, 0)), "mode", p_half_two)
    assert out.coords == pytest.approx((0.0, -math.sqrt(2.0), 0.0, 0.0), abs=1e-15)


def test_identity_transform(unit):
    p = PhasePoint("uv", (1, 2, 3, 4))
    assert transform(p, "uv", unit) is p


def test_unsupported_path(unit):
    with pytest.raises(UnsupportedPath):
        transform(PhasePoint("bateman", (1, 0, 0, 0)), "polar", unit)
    with pytest.raises(UnsupportedPath):
        jacobian("bateman", "nowhere", unit)


def test_phase_point_needs_four_coordinates():
    with pytest.raises(ValueError):
        PhasePoint("bateman", (1, 2, 3))


@settings(max_examples=60, deadline=None)
@given(st.tuples(coord, coord, coord, coord), gammas, omegas, st.sampled_from(REPS))
def test_hamiltonian_invariance(coords, g, w, target):
    params = PhysicalParams(g, w)
    p = PhasePoint("bateman", coords)
    h0 = classical_hamiltonian(p, params)
    h1 = classical_hamiltonian(transform(p, target, params), params)
    scale = max(1.0, abs(h0), float(np.sum(np.abs(coords))) ** 2)
    assert abs(h1 - h0) <= 1e-12 * scale


@settings(max_examples=40, deadline=None)
@given(gammas, omegas, st.sampled_from(REPS), st.sampled_from(REPS))
def test_every_jacobian_is_symplectic(g, w, a, b):
    assert symplectic_defect(jacobian(a, b, PhysicalParams(g, w))) <= 1e-12 * max(1.0, g, w, 1 / w) ** 2


@settings(max_examples=60, deadline=None)
@given(st.tuples(coord, coord, coord, coord), gammas, omegas, st.sampled_from(REPS))
def test_round_trip(coords, g, w, target):
    params = PhysicalParams(g, w)
    p = PhasePoint("bateman", coords)
    back = transform(transform(p, target, params), "bateman", params)
    assert np.allclose(back.as_array(), p.as_array(), rtol=1e-12, atol=1e-12 * max(1.0, max(map(abs, coords))))

import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from batres.continuum_spectrum import ContinuumLabel, continuum_eigenfunction
from batres.errors import NearPole, NonConvergent, SemigroupDomain
from batres.inverted_oscillator import resonance_state
from batres.oscillator_basis import QuantumNumbers, RadialFunction
from batres.params_transforms import PhysicalParams
from batres.quadrature import CircleContour, contour_integral_circle
from batres.resonance_engine import (
    DiscreteLabel,
    ResolventSeries,
    bateman_resonance_energy,
    decay_curves,
    evolve,
    expand,
    pole_residue_coefficient,
    projector_contour,
    projector_element,
    projector_matrix,
    projector_product_matrix,
    resolvent_element,
    residue_theorem_check,
    semigroup_factor,
    test_battery as make_battery,
)

Q = QuantumNumbers


def gaussian(beta, l=0):
    return RadialFunction(lambda r: np.exp(-beta * r * r), "generic", l, {"beta": beta})


# -- eigenvalues ----------------------------------------------------------------

def test_energy_spot_values(p_half_two):
    v = bateman_resonance_energy(Q(0, 1), +1, p_half_two)
    assert v.value == 2 + 1j and v.label == DiscreteLabel(0, 1, 1)
    assert bateman_resonance_energy(Q(2, -3), -1, PhysicalParams(1.0, 1.0)).value == -3 - 8j


@settings(max_examples=40, deadline=None)
@given(st.floats(0.1, 5))
def test_ground_energy_is_imaginary(w):
    p = PhysicalParams(0.7, w)
    assert bateman_resonance_energy(Q(0, 0), +1, p).value == 0.7j
    assert bateman_resonance_energy(Q(0, 0), -1, p).value == -0.7j


@pytest.mark.parametrize("n", range(11))
@pytest.mark.parametrize("l", range(-5, 6))
def test_lattice_closed_form(p_half_two, n, l):
    for s in (1, -1):
        e = bateman_resonance_energy(Q(n, l), s, p_half_two).value
        assert e == complex(2.0 * l, s * 0.5 * (abs(l) + 2 * n + 1))


# -- residues ---------------------------------------------------------------------

@pytest.mark.parametrize("n,l", [(0, 0), (1, 0), (0, 1)])
@pytest.mark.parametrize("rho0", [0.5, 1.0, 2.0])
def test_contour_residue_matches_coefficient(unit, n, l, rho0):
    eps0 = complex(0, abs(l) + 2 * n + 1)

    def f(eps):
        return np.array([continuum_eigenfunction(ContinuumLabel(e, l), unit)[0](rho0) for e in eps])

    res = contour_integral_circle(f, CircleContour(eps0, 0.2), tol=1e-13) / (2j * math.pi)
    u = resonance_state(Q(n, l), +1, unit).radial(rho0)
    assert abs(res - pole_residue_coefficient(Q(n, l), unit) * u) <= 1e-8


def test_ground_residue_coefficient_closed_value(unit):
    # stated closed value -i/sqrt(i) * sqrt(1/(2 pi)) for gamma = hbar = 1
    stated = -1j / cmath.sqrt(1j) * math.sqrt(1 / (2 * math.pi))
    assert abs(pole_residue_coefficient(Q(0, 0), unit) - stated) <= 1e-12


def test_residue_coefficient_scales_with_gamma_hbar():
    # the contour residue carries a factor 2 gamma hbar in front of that value
    base = -1j / cmath.sqrt(1j) * math.sqrt(1 / (2 * math.pi))
    for g, hb in [(1.0, 1.0), (0.5, 1.0), (0.3, 2.0)]:
        c = pole_residue_coefficient(Q(0, 0), PhysicalParams(g, 1.0, hb))
        assert abs(c - 2 * g * hb * math.sqrt(hb) * base) <= 1e-14


def test_residue_ratio_law(unit):
    for n in range(6):
        for l in range(6):
            r = abs(pole_residue_coefficient(Q(n, l), unit) / pole_residue_coefficient(Q(n, l + 1), unit))
            law = math.sqrt((n + l + 1) / (l + 1))
            assert abs(r - law) <= 1e-12 * law


# -- resolvent and projectors -----------------------------------------------------

def test_resolvent_zero_outside_truncation(unit):
    f = gaussian(1.0, l=4)
    assert resolvent_element(f, f, 3.0 + 0.5j, +1, (3, 2), unit) == 0


def test_resolvent_near_pole_raises(unit):
    f = gaussian(1.0)
    with pytest.raises(NearPole):
        resolvent_element(f, f, 1j, +1, (2, 0), unit)


def test_resolvent_limit_is_projector(unit):
    f, g = make_battery(unit)[0], make_battery(unit)[1]
    series = ResolventSeries(f, g, +1, (4, 0), unit)
    e = 1j
    direct = projector_element(Q(0, 0), +1, f, g, unit)
    for z in (e + 1e-7, e + 1e-7j):
        assert abs((e - z) * series(z) - direct) <= 1e-6


def test_far_field_summation_order(unit):
    f, g = make_battery(unit)[0], make_battery(unit)[2]
    series = ResolventSeries(f, g, +1, (8, 0), unit)
    z = 100j * cmath.exp(0.3j)
    assert abs(series(z) - series(z, reverse=True)) <= 1e-12


@pytest.mark.parametrize("qn", [Q(0, 0), Q(1, 0), Q(0, 1), Q(2, -1)])
@pytest.mark.parametrize("sign", [1, -1])
def test_contour_route_equals_direct_route(unit, qn, sign):
    bat = make_battery(unit, ls=(qn.l,), k_max=2)
    direct, contour = projector_element(qn, sign, bat[0], bat[1], unit, return_both=True)
    assert abs(direct - contour) <= 1e-6


def test_counter_clockwise_flips_sign(unit):
    bat = make_battery(unit)
    cw = projector_contour(Q(0, 0), +1, bat[0], bat[1], unit)
    ccw = projector_contour(Q(0, 0), +1, bat[0], bat[1], unit, orientation="ccw")
    assert abs(cw + ccw) <= 1e-12


def test_empty_circle_gives_zero(unit):
    bat = make_battery(unit)
    series = ResolventSeries(bat[0], bat[1], +1, (3, 0), unit)
    val = contour_integral_circle(lambda z: series(z, check=False), CircleContour(2.0 + 2j, 0.3))
    assert abs(val) <= 1e-10


def test_check_flag_runs_both_routes(unit):
    bat = make_battery(unit)
    assert projector_element(Q(1, 0), +1, bat[0], bat[3], unit, check=True) == pytest.approx(
        projector_element(Q(1, 0), +1, bat[0], bat[3], unit))


def test_projector_calculus(unit):
    bat = make_battery(unit, ls=(0, 1), k_max=2)
    qns = [Q(0, 0), Q(1, 0), Q(0, 1)]
    for a in qns:
        m = projector_matrix(a, +1, bat, unit)
        assert np.max(np.abs(projector_product_matrix(a, a, +1, bat, unit) - m)) <= 1e-8
        for b in qns:
            if a != b:
                assert np.max(np.abs(projector_product_matrix(a, b, +1, bat, unit))) <= 1e-8


# -- expansion --------------------------------------------------------------------

def test_zero_function_expands_to_zero(unit):
    zero = RadialFunction(lambda r: np.zeros(np.shape(r), dtype=complex), "generic", 0)
    ex = expand(zero, +1, (3, 0), unit)
    assert all(c == 0 for c in ex.coefficients.values())


def test_round_trip(unit):
    a = [0.7, -0.2 + 0.4j, 0.1j, 0.05]
    states = [resonance_state(Q(k, 0), +1, unit).radial for k in range(4)]
    phi = RadialFunction(lambda r: sum(c * s(r) for c, s in zip(a, states)), "generic", 0)
    ex = expand(phi, +1, (5, 0), unit, check_convergence=False)
    for k in range(6):
        assert abs(ex.coefficients[(k, 0)] - (a[k] if k < 4 else 0)) < 1e-8


def test_chirped_gaussian_converges(unit):
    beta = 0.1 + 0.5j
    phi = gaussian(beta)
    grid = np.linspace(0, 3, 64)
    errs = [expand(phi, +1, (n, 0), unit, grid=grid).reconstruction_error for n in (4, 8, 16)]
    assert errs[0] > errs[1] > errs[2]
    s = 0.5 - 1j * beta
    ex = expand(phi, +1, (6, 0), unit)
    for n in range(7):
        closed = cmath.sqrt(1j) * math.sqrt(2) / 2 * (-1j) * (s - 1) ** n / s ** (n + 1)
        assert abs(ex.coefficients[(n, 0)] - closed) <= 1e-12


def test_chirp_needs_matching_sign(unit):
    with pytest.raises(NonConvergent), np.errstate(over="ignore", invalid="ignore"):
        expand(gaussian(0.1 + 0.5j), -1, (4, 0), unit)
    expand(gaussian(0.1 - 0.5j), -1, (4, 0), unit)


def test_expansion_keys_are_validated(unit):
    ex = expand(gaussian(0.1 + 0.5j), +1, (2, 0), unit)
    with pytest.raises(ValueError):
        type(ex)(1, {(3, 0): 1.0}, (2, 0), unit)


def test_expansion_evaluate_matches_reconstruction(unit):
    phi = gaussian(0.1 + 0.5j)
    grid = np.linspace(0, 4, 64)
    ex = expand(phi, +1, (12, 0), unit, grid=grid)
    assert np.max(np.abs(ex.evaluate(grid) - phi(grid))) == pytest.approx(ex.reconstruction_error)


# -- semigroup ----------------------------------------------------------------------

def _minus_expansion(params):
    return expand(gaussian(0.1 - 0.5j), -1, (3, 0), params)


def test_identity_at_zero(unit):
    ex = _minus_expansion(unit)
    assert evolve(ex, 0.0).coefficients == ex.coefficients


def test_half_life_of_ground_coefficient(unit):
    ex = _minus_expansion(unit)
    c = evolve(ex, math.log(2)).coefficients[(0, 0)]
    assert abs(c / ex.coefficients[(0, 0)] - 0.5) <= 1e-15


@settings(max_examples=30, deadline=None)
@given(st.floats(0, 3), st.floats(0, 3))
def test_composition(t1, t2):
    p = PhysicalParams(1.0, 1.3)
    for n, l in [(0, 0), (2, 1), (1, -3)]:
        a = semigroup_factor(Q(n, l), -1, t1, p) * semigroup_factor(Q(n, l), -1, t2, p)
        b = semigroup_factor(Q(n, l), -1, t1 + t2, p)
        assert abs(a - b) <= 1e-14 * max(1.0, abs(b))


def test_decay_slopes(unit):
    ex = _minus_expansion(unit)
    ts = np.linspace(0, 3, 31)
    curves = decay_curves(ex, ts)
    for (n, l), amp in curves.items():
        slope = np.polyfit(ts, np.log(amp), 1)[0]
        assert abs(slope + (2 * n + abs(l) + 1)) <= 1e-12
        assert np.all(np.diff(amp) <= 0)


def test_wrong_sign_time_rejected(unit):
    with pytest.raises(SemigroupDomain):
        evolve(_minus_expansion(unit), -0.1)
    plus = expand(gaussian(0.1 + 0.5j), +1, (2, 0), unit)
    with pytest.raises(SemigroupDomain):
        evolve(plus, 0.1)
    assert evolve(plus, -0.1).time == -0.1


# -- residue theorem behind the expansion ----------------------------------------------

def test_half_disk_contour_equals_pole_sum(unit):
    out = residue_theorem_check(1.0, 0.8, 8.0, unit, nodes=512)
    assert abs(out["contour"] - out["pole_sum"]) <= 1e-10
    assert out["poles"] == 4


def test_line_integral_approaches_pole_sum(unit):
    beta = 0.1 + 0.5j
    gaps = []
    for A in (4.0, 8.0, 12.0):
        out = residue_theorem_check(beta, 1.0, A, unit, nodes=1024)
        gaps.append(abs(out["line"] - out["pole_sum"]))
    assert gaps[0] > gaps[1] > gaps[2]


def test_pole_sum_reproduces_twice_phi(unit):
    # the continuum constant normalizes psi to delta/2, hence the factor 2
    out = residue_theorem_check(0.1 + 0.5j, 1.0, 16.0, unit, nodes=1024)
    assert abs(out["pole_sum"] - 2 * out["phi"]) <= 1e-3

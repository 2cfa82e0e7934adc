"""Resolvent, spectral projectors and resonance expansions.

On the test space where the expansion holds, the resolvent of the
Hamiltonian reduces to the pole series

    R_+(z) = sum_nl |u-_nl><u+_nl| / (E+_nl - z),
    R_-(z) = sum_nl |u+_nl><u-_nl| / (E-_nl - z),

with ``E+-_nl = hbar omega l +- i hbar gamma (|l| + 2n + 1)``.  The rank-one
projectors ``P+_nl = |u-_nl><u+_nl|`` and ``P-_nl = |u+_nl><u-_nl|`` are
the residues of ``R_+-`` at those poles.  A function ``phi`` expands as
``phi = sum u+-_nl <u-+_nl|phi>`` and evolves under the semigroups
``U_-(t), t >= 0`` (decay) and ``U_+(t), t <= 0`` (growth).

Matrix elements use the analytic pairing ``<f|g> = int conj~f g rho drho``
of :mod:`batres.oscillator_basis`.  Every pairing that contains ``u-``
(or ``conj~u+ = u-``) is evaluated on a ray with ``theta > 0`` and every
pairing with ``u+`` on a ray with ``theta < 0``, where the resonance
factor decays like a Gaussian.
"""

import cmath
import math
from dataclasses import dataclass, field, replace
from typing import Any, Mapping, Optional, Tuple, Union

import numpy as np

from ._parallel import ordered_map
from .continuum_spectrum import ContinuumLabel, continuum_eigenfunction
from .errors import NearPole, NonConvergent, SemigroupDomain
from .inverted_oscillator import BIORTHO_THETA, MINUS, PLUS, _sign, resonance_state
from .oscillator_basis import QuantumNumbers, RadialFunction, laguerre_overlap, overlap_radial
from .quadrature import CircleContour, RayContour, contour_integral_circle, gauss_laguerre_rule
from .special_functions import gamma_complex, laguerre

DEFAULT_TRUNCATION = (16, 8)
DEFAULT_GRID_POINTS = 64
DEFAULT_GRID_EXTENT = 4.0
POLE_RADIUS = 0.2
NEAR_POLE_TOL = 1e-9
BATTERY_THETA = math.pi / 8
EXPANSION_THETA = math.pi / 4


@dataclass(frozen=True)
class DiscreteLabel:
    """Resonance label ``(n, l, sign)``."""

    n: int
    l: int
    sign: int


@dataclass(frozen=True)
class HyperbolicDiscreteLabel:
    """Label ``(n, l)`` of the hyperbolic-representation eigenvalues."""

    n: int
    l: int


SpectralLabel = Union[DiscreteLabel, ContinuumLabel, HyperbolicDiscreteLabel]


@dataclass(frozen=True)
class SpectralValue:
    """A complex energy with the label it belongs to."""

    value: complex
    label: SpectralLabel


def bateman_resonance_energy(qn, sign, params):
    """``E+-_nl = hbar omega l +- i hbar gamma (|l| + 2n + 1)``.

    Examples
    --------
    >>> from batres.params_transforms import PhysicalParams
    >>> bateman_resonance_energy(QuantumNumbers(0, 1), "+", PhysicalParams(0.5, 2.0)).value
    (2+1j)
    """
    s = _sign(sign)
    hb = params.hbar
    value = complex(hb * params.omega * qn.l, s * hb * params.gamma * (abs(qn.l) + 2 * qn.n + 1))
    return SpectralValue(value, DiscreteLabel(qn.n, qn.l, s))


def pole_residue_coefficient(qn, params):
    """Scalar ``c_nl`` with ``Res_{eps = eps_nl} psi_{eps,l} = c_nl u+_nl``.

    Near ``a = -n`` the normalization ``Gamma(a)`` has residue
    ``(-1)^n/n!`` in ``a``; with ``da/deps = i/(2 gamma hbar)`` and the
    1F1 route of ``u+_nl`` this gives

        c_nl = -2i gamma hbar (-i)^n e^{-i pi/4} sqrt(hbar/(2 pi))
               * sqrt(|l|! / (n! (n+|l|)!)).

    Examples
    --------
    >>> from batres.params_transforms import PhysicalParams
    >>> c = pole_residue_coefficient(QuantumNumbers(0, 0), PhysicalParams(1.0, 1.0))
    >>> round(c.real, 6), round(c.imag, 6)
    (-0.56419, -0.56419)
    """
    n, L = qn.n, abs(qn.l)
    g, hb = params.gamma, params.hbar
    mag = math.sqrt(hb / (2.0 * math.pi)) * math.exp(
        0.5 * (math.lgamma(L + 1) - math.lgamma(n + 1) - math.lgamma(n + L + 1)))
    phase = (-1j) ** n * cmath.exp(-0.25j * math.pi)
    return complex(-2j * g * hb * phase * mag)


def _pairing_theta(kind, theta):
    # kind +1: the integrand carries u- (ray above the axis); -1: u+
    return kind * abs(theta)


def pair(f, g, kind, theta=BATTERY_THETA, tol=1e-12):
    """``<f|g>`` on the ray ``theta * kind``; ``kind = +1`` if ``u-`` appears, -1 for ``u+``."""
    return overlap_radial(f, g, RayContour(theta=_pairing_theta(kind, theta)), tol=tol)


def _left_right(qn, sign, params):
    """``(ket, bra)`` of ``P+-_nl``: ``(u-, u+)`` for plus, ``(u+, u-)`` for minus."""
    s = _sign(sign)
    return (resonance_state(qn, -s, params).radial, resonance_state(qn, s, params).radial)


def projector_factors(qn, sign, f, g, params, theta=BATTERY_THETA, tol=1e-12):
    """The two overlaps ``<f|u-+_nl>`` and ``<u+-_nl|g>`` of ``<f|P+-_nl|g>``."""
    s = _sign(sign)
    ket, bra = _left_right(qn, s, params)
    # <f|u-> and <u+|g> (= int u- g) both carry u-; the minus projector carries u+
    left = pair(f, ket, s, theta, tol) if f.l == qn.l else 0j
    right = pair(bra, g, s, theta, tol) if g.l == qn.l else 0j
    return left, right


def _circle(center, radius, orientation):
    return CircleContour(center=complex(center), radius=float(radius), orientation=orientation)


class ResolventSeries:
    """Truncated pole series of ``<f|R_+-(z)|g>`` with cached overlaps.

    Parameters
    ----------
    f, g : RadialFunction
    sign : {+1, -1, "+", "-", "plus", "minus"}
    truncation : (n_max, l_max)
    params : PhysicalParams
    theta : float
        Magnitude of the pairing-ray angle.
    tol : float
        Quadrature tolerance of each overlap.
    workers : int, optional
        Parallel overlap evaluation (capped by ``BATRES_THREADS``).
    """

    def __init__(self, f, g, sign, truncation, params, theta=BATTERY_THETA, tol=1e-12,
                 workers=None):
        self.sign = _sign(sign)
        self.params = params
        self.truncation = (int(truncation[0]), int(truncation[1]))
        n_max, l_max = self.truncation
        keys = []
        if f.l == g.l and abs(f.l) <= l_max:
            keys = [QuantumNumbers(n, f.l) for n in range(n_max + 1)]

        def term(qn):
            left, right = projector_factors(qn, self.sign, f, g, params, theta, tol)
            return bateman_resonance_energy(qn, self.sign, params).value, left * right

        terms = ordered_map(term, keys, workers)
        self.keys = keys
        self.energies = np.array([t[0] for t in terms], dtype=np.complex128)
        self.weights = np.array([t[1] for t in terms], dtype=np.complex128)

    def check_far(self, z):
        """Raise :class:`NearPole` if ``z`` is within 1e-9 of a pole."""
        z = np.atleast_1d(np.asarray(z, dtype=np.complex128))
        for e in self.energies:
            if np.any(np.abs(z - e) <= NEAR_POLE_TOL * max(1.0, abs(e))):
                raise NearPole(f"z within {NEAR_POLE_TOL:g} of the pole {e}")

    def __call__(self, z, reverse=False, check=True):
        """Series value at ``z`` summed in n-major order (or reversed)."""
        scalar = np.ndim(z) == 0
        zz = np.atleast_1d(np.asarray(z, dtype=np.complex128))
        if check:
            self.check_far(zz)
        out = np.zeros(zz.shape, dtype=np.complex128)
        order = range(len(self.weights))
        if reverse:
            order = reversed(order)
        for k in order:
            out = out + self.weights[k] / (self.energies[k] - zz)
        return complex(out[0]) if scalar else out


def resolvent_element(f, g, z, sign, truncation, params, theta=BATTERY_THETA, tol=1e-12):
    """``sum <f|u-+_nl><u+-_nl|g> / (E+-_nl - z)`` over the truncation.

    Raises
    ------
    NearPole
        If ``z`` lies within 1e-9 of a pole; use :func:`projector_element`.
    """
    return ResolventSeries(f, g, sign, truncation, params, theta, tol)(z)


def projector_contour(qn, sign, f, g, params, radius=None, orientation="cw", truncation=None,
                      theta=BATTERY_THETA, tol=1e-12):
    """``(1/2 pi i) oint <f|R_+-(z)|g> dz`` on a circle around ``E+-_nl``.

    The series is ``sum w/(E - z)``, whose residue in ``z`` is ``-w``; the
    clockwise circle therefore returns ``+w`` for either sign.
    """
    s = _sign(sign)
    radius = POLE_RADIUS * params.hbar * params.gamma if radius is None else radius
    truncation = truncation or (qn.n + 2, abs(qn.l))
    series = ResolventSeries(f, g, s, truncation, params, theta, tol)
    center = bateman_resonance_energy(qn, s, params).value
    val = contour_integral_circle(lambda z: series(z, check=False),
                                  _circle(center, radius, orientation), tol=1e-14)
    return val / (2j * math.pi)


def projector_element(qn, sign, f, g, params, check=False, radius=None, orientation="cw",
                      theta=BATTERY_THETA, tol=1e-12, check_tol=1e-6, return_both=False):
    """``<f|P+-_nl|g>`` from the direct overlap product.

    Parameters
    ----------
    check : bool
        Also evaluate the Cauchy integral of the resolvent around the pole
        and raise ``AssertionError`` if the two routes differ by more than
        ``check_tol``.
    return_both : bool
        Return ``(direct, contour)``; implies ``check``.
    """
    left, right = projector_factors(qn, sign, f, g, params, theta, tol)
    direct = left * right
    if not (check or return_both):
        return direct
    contour = projector_contour(qn, sign, f, g, params, radius, orientation, theta=theta, tol=tol)
    if check and abs(direct - contour) > check_tol:
        raise AssertionError(f"projector routes disagree: {abs(direct - contour):.3e}")
    return (direct, contour) if return_both else direct


def test_battery(params, ls=(0,), k_max=5):
    """Laguerre-damped test functions ``rho^|l| e^{-beta rho^2} L_k^|l|(2 beta rho^2)``.

    ``beta = gamma/hbar`` and ``k <= k_max`` for each ``l`` in ``ls``.
    """
    beta = params.gamma / params.hbar
    out = []
    for l in ls:
        L = abs(l)
        for k in range(k_max + 1):
            def evaluate(rho, k=k, L=L):
                z = beta * rho * rho
                return rho ** L * np.exp(-z) * laguerre(k, L, 2.0 * z)

            out.append(RadialFunction(evaluate, "generic", l, {"k": k, "l": l, "beta": beta},
                                      params))
    return out


test_battery.__test__ = False


def projector_matrix(qn, sign, battery, params, theta=BATTERY_THETA, tol=1e-12):
    """``M[i, j] = <f_i|P+-_nl|f_j>`` over the battery."""
    left, right = _factor_vectors(qn, sign, battery, params, theta, tol)
    return np.outer(left, right)


def _factor_vectors(qn, sign, battery, params, theta, tol):
    s = _sign(sign)
    ket, bra = _left_right(qn, s, params)
    left = np.array([pair(f, ket, s, theta, tol) if f.l == qn.l else 0j for f in battery])
    right = np.array([pair(bra, g, s, theta, tol) if g.l == qn.l else 0j for g in battery])
    return left, right


def projector_product_matrix(qn1, qn2, sign, battery, params, theta=BATTERY_THETA, tol=1e-12):
    """``<f_i|P+-_{n1 l1} P+-_{n2 l2}|f_j>`` through the rank-one structure.

    ``P1 P2 = |ket1> <bra1|ket2> <bra2|``; the middle pairing is the
    bi-orthogonality integral, evaluated by Gauss-Laguerre on the ray
    ``theta = pi/4`` (plus) or ``-pi/4`` (minus).
    """
    s = _sign(sign)
    left, _ = _factor_vectors(qn1, s, battery, params, theta, tol)
    _, right = _factor_vectors(qn2, s, battery, params, theta, tol)
    if qn1.l != qn2.l:
        middle = 0j
    else:
        ket2, _ = _left_right(qn2, s, params)
        _, bra1 = _left_right(qn1, s, params)
        middle = laguerre_overlap(bra1, ket2, gauss_laguerre_rule(200, 0.0),
                                  params.gamma / params.hbar, s * BIORTHO_THETA)
    return middle * np.outer(left, right)


@dataclass(frozen=True)
class ResonanceExpansion:
    """Coefficients of ``phi = sum c_nl u+-_nl``.

    Attributes
    ----------
    sign : int
        +1 for the ``u+`` expansion (growth semigroup), -1 for ``u-`` (decay).
    coefficients : dict
        ``(n, l) -> c_nl``.
    truncation : (int, int)
        ``(n_max, l_max)``.
    params : PhysicalParams
    reconstruction_error : float, optional
        Max pointwise ``|phi - sum c u|`` on the diagnostic grid.
    time : float
        Evolution time accumulated by :func:`evolve`.
    """

    sign: int
    coefficients: Mapping[Tuple[int, int], complex]
    truncation: Tuple[int, int]
    params: Any
    reconstruction_error: Optional[float] = None
    time: float = 0.0
    diagnostics: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "sign", _sign(self.sign))
        n_max, l_max = self.truncation
        for n, l in self.coefficients:
            if not (0 <= n <= n_max and abs(l) <= l_max):
                raise ValueError(f"coefficient key {(n, l)} outside truncation {self.truncation}")

    def evaluate(self, rho, l=None):
        """``sum c_nl u+-_nl(rho)``, optionally restricted to one ``l``."""
        r = np.atleast_1d(np.asarray(rho, dtype=np.complex128))
        out = np.zeros(r.shape, dtype=np.complex128)
        for (n, ll), c in sorted(self.coefficients.items()):
            if l is not None and ll != l:
                continue
            out = out + c * resonance_state(QuantumNumbers(n, ll), self.sign, self.params).radial(r)
        return out


def diagnostic_grid(params, points=DEFAULT_GRID_POINTS, extent=DEFAULT_GRID_EXTENT):
    """``points`` radii on ``[0, extent * sqrt(hbar/gamma)]``."""
    return np.linspace(0.0, extent * math.sqrt(params.hbar / params.gamma), points)


def _sectors(phi):
    if isinstance(phi, RadialFunction):
        return {phi.l: phi}
    if isinstance(phi, Mapping):
        return dict(phi)
    out = {}
    for f in phi:
        if f.l in out:
            raise ValueError(f"two components with l = {f.l}")
        out[f.l] = f
    return out


def _coefficient(phi_l, qn, sign, params, theta, tol):
    # <u-+_nl|phi>: the analytic integrand is conj~(u-+) phi = u+- phi
    dual = resonance_state(qn, -sign, params).radial
    return pair(dual, phi_l, -sign, theta, tol)


def _reconstruction_error(sectors, coeffs, sign, params, grid, n_upto):
    err = 0.0
    for l, f in sectors.items():
        approx = np.zeros(grid.shape, dtype=np.complex128)
        for (n, ll), c in sorted(coeffs.items()):
            if ll == l and n <= n_upto:
                approx = approx + c * resonance_state(QuantumNumbers(n, l), sign, params).radial(grid)
        err = max(err, float(np.max(np.abs(f(grid) - approx))))
    return err


def expand(phi, sign, truncation=DEFAULT_TRUNCATION, params=None, grid=None,
           check_convergence=True, theta=EXPANSION_THETA, tol=1e-12, workers=None):
    """Resonance expansion ``phi = sum u+-_nl <u-+_nl|phi>``.

    Parameters
    ----------
    phi : RadialFunction, mapping l -> RadialFunction, or sequence
        One radial component per angular index.
    sign : {+1, -1, "+", "-", "plus", "minus"}
    truncation : (n_max, l_max)
    params : PhysicalParams
    grid : array_like, optional
        Diagnostic radii; 64 points on ``[0, 4 sqrt(hbar/gamma)]`` by default.
    check_convergence : bool
        Also compute the coefficients up to ``n_max + 2`` and raise
        :class:`NonConvergent` if the reconstruction error does not drop.
    theta : float
        Magnitude of the pairing-ray angle; ``pi/4`` turns the resonance
        factor into a real Gaussian.
    tol : float
    workers : int, optional

    Returns
    -------
    ResonanceExpansion
    """
    if params is None:
        raise ValueError("params is required")
    s = _sign(sign)
    n_max, l_max = int(truncation[0]), int(truncation[1])
    sectors = {l: f for l, f in _sectors(phi).items() if abs(l) <= l_max}
    grid = diagnostic_grid(params) if grid is None else np.asarray(grid, dtype=float)
    n_top = n_max + 2 if check_convergence else n_max
    keys = [(n, l) for n in range(n_top + 1) for l in sorted(sectors)]

    def coeff(key):
        n, l = key
        return _coefficient(sectors[l], QuantumNumbers(n, l), s, params, theta, tol)

    values = ordered_map(coeff, keys, workers)
    all_coeffs = dict(zip(keys, values))
    coeffs = {k: v for k, v in all_coeffs.items() if k[0] <= n_max}
    err = _reconstruction_error(sectors, coeffs, s, params, grid, n_max)
    diagnostics = {}
    if check_convergence:
        err_up = _reconstruction_error(sectors, all_coeffs, s, params, grid, n_top)
        scale = max([1.0] + [float(np.max(np.abs(f(grid)))) for f in sectors.values()])
        diagnostics["reconstruction_error_n_max_plus_2"] = err_up
        if err_up >= err and err > 1e-10 * scale:
            raise NonConvergent(
                f"reconstruction error {err:.3e} at n_max={n_max} did not decrease "
                f"({err_up:.3e} at n_max={n_top})")
    return ResonanceExpansion(s, coeffs, (n_max, l_max), params, err, 0.0, diagnostics)


def semigroup_factor(qn, sign, t, params):
    """``e^{-i omega l t} e^{+-gamma (2n + |l| + 1) t}`` (minus: decay)."""
    s = _sign(sign)
    m = 2 * qn.n + abs(qn.l) + 1
    return cmath.exp(complex(s * params.gamma * m * t, -params.omega * qn.l * t))


def evolve(expansion, t):
    """Evolve coefficients under ``U_-(t), t >= 0`` or ``U_+(t), t <= 0``.

    Raises
    ------
    SemigroupDomain
        If ``t`` has the forbidden sign.
    """
    t = float(t)
    if expansion.sign == MINUS and t < 0:
        raise SemigroupDomain("the decay semigroup U_- is defined for t >= 0 only")
    if expansion.sign == PLUS and t > 0:
        raise SemigroupDomain("the growth semigroup U_+ is defined for t <= 0 only")
    coeffs = {
        key: semigroup_factor(QuantumNumbers(*key), expansion.sign, t, expansion.params) * c
        for key, c in expansion.coefficients.items()
    }
    return replace(expansion, coefficients=coeffs, time=expansion.time + t)


def decay_curves(expansion, t_grid):
    """``|c_nl(t)|`` for every coefficient over ``t_grid``."""
    ts = np.asarray(t_grid, dtype=float)
    out = {}
    for key, c in sorted(expansion.coefficients.items()):
        qn = QuantumNumbers(*key)
        out[key] = np.array([abs(semigroup_factor(qn, expansion.sign, t, expansion.params) * c)
                             for t in ts])
    return out


def gaussian_spectral_weight(eps, beta, params):
    """``<psi_{eps,0}|phi>`` for ``phi = e^{-beta rho^2}``, continued to complex ``eps``.

    The analytic continuation of ``conj(R_{eps,0})`` is, after Kummer's
    transformation, ``N~(eps) e^{-i k rho^2/2} 1F1(a, 1, i k rho^2)`` with
    ``k = gamma/hbar`` and ``N~ = sqrt(gamma/pi) e^{i pi (1 - a)/2} Gamma(1 - a)``.
    The Laplace transform of 1F1 then gives
    ``N~ / (2 s) * (1 - i k / s)^{-a}`` with ``s = beta + i k/2``.
    """
    eps = np.asarray(eps, dtype=np.complex128)
    k = params.gamma / params.hbar
    a = 0.5 * (1.0 + 1j * eps / (params.gamma * params.hbar))
    ab = 1.0 - a
    nt = math.sqrt(params.gamma / math.pi) * np.exp(0.5j * math.pi * ab) * gamma_complex(ab)
    s = complex(beta) + 0.5j * k
    return nt / (2.0 * s) * np.exp(-a * np.log(1.0 - 1j * k / s))


def residue_theorem_check(beta, rho0, radius, params, nodes=2048):
    """Half-disk contour integral of ``psi_{eps,0}(rho0) <psi_eps|phi>`` against its pole sum.

    Integrates over ``[-A, A]`` plus the upper semicircle ``|eps| = A``
    for the l = 0 Gaussian ``phi = e^{-beta rho^2}`` and returns a dict with
    the contour value, the sum ``2 pi i sum Res`` over the enclosed poles
    ``eps_n0 = i gamma hbar (2n + 1)``, the real-line piece alone, the pole
    count and ``phi(rho0)``.

    Notes
    -----
    The contour value equals the enclosed pole sum for every radius
    (Cauchy), and the real-line piece approaches it as the radius grows.
    With the continuum normalization of :mod:`batres.continuum_spectrum`
    the limit is ``2 phi(rho0)`` rather than ``phi(rho0)``: that constant
    normalizes ``psi`` to ``delta(eps - eps') / 2``.  Each pole term is
    ``2 u+_n0 <u-_n0|phi>``, so the resonance expansion itself is unaffected.
    """
    A = float(radius)
    x, w = np.polynomial.legendre.leggauss(nodes)

    def integrand(eps):
        vals = np.empty(eps.shape, dtype=np.complex128)
        for i, e in enumerate(eps):
            rf, _ = continuum_eigenfunction(ContinuumLabel(complex(e), 0), params)
            vals[i] = rf(rho0)
        return vals * gaussian_spectral_weight(eps, beta, params)

    line = A * np.sum(w * integrand(A * x.astype(np.complex128)))
    phi_ang = 0.5 * math.pi * (x + 1.0)
    z = A * np.exp(1j * phi_ang)
    arc = np.sum(w * integrand(z) * 1j * z) * 0.5 * math.pi
    poles = []
    n = 0
    while params.gamma * params.hbar * (2 * n + 1) < A:
        poles.append(n)
        n += 1
    total = 0j
    for n in poles:
        qn = QuantumNumbers(n, 0)
        e = complex(0.0, params.gamma * params.hbar * (2 * n + 1))
        c = pole_residue_coefficient(qn, params)
        u = resonance_state(qn, PLUS, params).radial(rho0)
        total += 2j * math.pi * c * u * complex(gaussian_spectral_weight(e, beta, params))
    return {"contour": complex(line + arc), "pole_sum": complex(total),
            "line": complex(line), "poles": len(poles),
            "phi": complex(cmath.exp(-complex(beta) * rho0 * rho0))}

"""The hyperbolic representation of the damped-oscillator pair.

In light-cone coordinates ``y1 = varrho cosh u``, ``y2 = varrho sinh u``
the Hamiltonian splits as ``H = H_0 + H_iho`` with

    H_0   = -(hbar^2/2) [d^2/dvarrho^2 + (1/varrho) d/dvarrho - (1/varrho^2) d^2/du^2]
            + omega^2 varrho^2 / 2,
    H_iho = i gamma hbar d/du.

``H_iho`` has the entire eigenfunctions ``Phi_nu(u) = e^{-i nu u}/sqrt(2 pi)``
with eigenvalue ``gamma hbar nu``, so no resonance poles appear.  The
radial part solves ``H_0 R = eps R`` through Tricomi's U, and the
square-integrable choice ``i nu = l >= 0``, ``b = -n`` gives the Laguerre
family ``R_nl`` and the complex values

    E_nl = hbar omega (2n + l + 1) - i hbar gamma l,

which never coincide with the resonance lattice
``hbar omega l +- i hbar gamma (|l| + 2n + 1)`` when ``gamma > 0``.
"""

import math
from dataclasses import dataclass, field
from typing import Any, List

import numpy as np

from .continuum_spectrum import ContinuumLabel, normalization_constant, resonance_pole
from .errors import NegativeAngularIndex, PoleAtResonance
from .oscillator_basis import QuantumNumbers, RadialFunction
from .resonance_engine import HyperbolicDiscreteLabel, SpectralValue, bateman_resonance_energy
from .special_functions import laguerre, tricomi_u

MATCH_RTOL = 1e-12


@dataclass(frozen=True)
class HyperbolicLabel:
    """Eigenvalue ``epsilon_h`` of ``H_0`` (an energy) and boost label ``nu``."""

    epsilon_h: complex
    nu: complex

    def __post_init__(self):
        for name in ("epsilon_h", "nu"):
            v = complex(getattr(self, name))
            if not (math.isfinite(v.real) and math.isfinite(v.imag)):
                raise ValueError(f"{name} must be finite")
            object.__setattr__(self, name, v)


def tricomi_b(label, params):
    """``b = (i nu + 1 - eps/(hbar omega)) / 2``.

    Examples
    --------
    >>> from batres.params_transforms import PhysicalParams
    >>> tricomi_b(HyperbolicLabel(1.0, 0.0), PhysicalParams(1.0, 1.0))
    0j
    """
    return 0.5 * (1j * label.nu + 1.0 - label.epsilon_h / (params.hbar * params.omega))


def normalizable_energy(n, nu, params):
    """``eps = hbar omega (2n + 1 + i nu)``, the root of ``b = -n``."""
    return params.hbar * params.omega * (2 * n + 1 + 1j * complex(nu))


def hyperbolic_energy(label, params):
    """``E_{eps nu} = eps + gamma hbar nu``."""
    return label.epsilon_h + params.gamma * params.hbar * label.nu


def hyperbolic_continuum(label, params):
    """Radial function ``(sqrt(omega/hbar) r)^{i nu} e^{-z/2} U(b, i nu + 1, z)``, ``z = omega r^2/hbar``.

    The normalization factor is left as 1.  Complex powers use the
    principal branch.
    """
    k = params.omega / params.hbar
    sk = math.sqrt(k)
    nu = label.nu
    b = tricomi_b(label, params)
    c = 1j * nu + 1.0

    def evaluate(rho):
        rho = np.asarray(rho, dtype=np.complex128)
        z = k * rho * rho
        return np.exp(1j * nu * np.log(sk * rho)) * np.exp(-0.5 * z) * tricomi_u(b, c, z)

    return RadialFunction(evaluate, "hyperbolic_cont", 0,
                          {"epsilon_h": label.epsilon_h, "nu": nu, "b": b}, params)


def hyperbolic_radial_m2(nu):
    """``m^2`` of the radial operator: ``-(1/r^2) d^2/du^2`` on ``e^{-i nu u}`` is ``-nu^2/r^2``."""
    return -complex(nu) ** 2


def h0_potential(params):
    """``omega^2 r^2 / 2``."""
    w2 = params.omega ** 2
    return lambda rho: 0.5 * w2 * rho * rho


def hyperbolic_normalization(n, l, params, convention="orthonormal"):
    """Constant of ``R_nl``.

    ``"orthonormal"`` is ``sqrt(2 (omega/hbar) n! / Gamma(n + l + 1))``,
    which makes the family orthonormal for the standard Laguerre
    polynomials.  ``"printed"`` is ``sqrt(2 (omega/hbar) / (n! Gamma(n + l + 1)))``,
    whose squared norm is ``1/(n!)^2``; it is kept for comparison.
    """
    k = params.omega / params.hbar
    if convention == "orthonormal":
        return math.sqrt(2.0 * k * math.exp(math.lgamma(n + 1) - math.lgamma(n + l + 1)))
    if convention == "printed":
        return math.sqrt(2.0 * k * math.exp(-math.lgamma(n + 1) - math.lgamma(n + l + 1)))
    raise ValueError(f"unknown convention {convention!r}")


def hyperbolic_eigenvalue(n, l, params):
    """``E_nl = hbar omega (2n + l + 1) - i hbar gamma l``."""
    hb = params.hbar
    value = complex(hb * params.omega * (2 * n + l + 1), -hb * params.gamma * l)
    return SpectralValue(value, HyperbolicDiscreteLabel(n, l))


def hyperbolic_discrete(n, l, params, convention="orthonormal"):
    """Normalizable family ``R_nl`` (``l >= 0``) and its eigenvalue ``E_nl``.

    Raises
    ------
    NegativeAngularIndex
        For ``l < 0``: ``varrho^l`` is then not square integrable at 0.

    Examples
    --------
    >>> from batres.params_transforms import PhysicalParams
    >>> hyperbolic_discrete(0, 1, PhysicalParams(0.5, 2.0))[1].value
    (4-0.5j)
    """
    if int(n) != n or n < 0:
        raise ValueError("n must be a nonnegative integer")
    if int(l) != l:
        raise ValueError("l must be an integer")
    n, l = int(n), int(l)
    if l < 0:
        raise NegativeAngularIndex(f"the family R_nl is normalizable only for l >= 0, got l = {l}")
    k = params.omega / params.hbar
    sk = math.sqrt(k)
    c = hyperbolic_normalization(n, l, params, convention)

    def evaluate(rho):
        x = sk * rho
        z = x * x
        return c * x ** l * np.exp(-0.5 * z) * laguerre(n, l, z)

    rf = RadialFunction(evaluate, "hyperbolic_disc", l, {"n": n, "l": l}, params)
    return rf, hyperbolic_eigenvalue(n, l, params)


def hyperbolic_gram(n_max, l, params, rule=None, convention="orthonormal"):
    """``G[n][m] = int conj(R_nl) R_ml r dr`` by Gauss-Laguerre (``z = omega r^2/hbar``)."""
    from .oscillator_basis import laguerre_overlap
    from .quadrature import gauss_laguerre_rule

    rule = rule or gauss_laguerre_rule(200, 0.0)
    fs = [hyperbolic_discrete(n, l, params, convention)[0] for n in range(n_max + 1)]
    k = params.omega / params.hbar
    g = np.empty((n_max + 1, n_max + 1), dtype=np.complex128)
    for i, fi in enumerate(fs):
        for j, fj in enumerate(fs):
            g[i, j] = laguerre_overlap(fi, fj, rule, k)
    return g


def boost_eigenfunction(nu):
    """``Phi_nu(u) = e^{-i nu u} / sqrt(2 pi)``, entire in ``nu``."""
    nu = complex(nu)
    return lambda u: np.exp(-1j * nu * np.asarray(u, dtype=np.complex128)) / math.sqrt(2.0 * math.pi)


def generator_residual(nu, params, h, u=None):
    """Max ``|i gamma hbar Phi'(u) - gamma hbar nu Phi(u)|`` with a central difference."""
    u = np.linspace(-1.0, 1.0, 41) if u is None else np.asarray(u, dtype=float)
    phi = boost_eigenfunction(nu)
    d = (phi(u + h) - phi(u - h)) / (2.0 * h)
    gh = params.gamma * params.hbar
    return float(np.max(np.abs(1j * gh * d - gh * complex(nu) * phi(u))))


def generator_order(nu, params, h=1e-2, u=None):
    """Observed order of :func:`generator_residual` under step halving."""
    r1 = generator_residual(nu, params, h, u)
    r2 = generator_residual(nu, params, 0.5 * h, u)
    return math.log2(r1 / r2), r1, r2


def by_hand_gram(n_max, l, eta=1.0):
    """Regularized Gram of the boost functions fixed at ``nu = i(2n + |l| + 1)``.

    With ``nu = i m`` the function is ``e^{m u}/sqrt(2 pi)``.  The pairing
    ``int conj~Phi_m Phi_m' du`` diverges, so it is cut off by
    ``e^{-eta u^2}``:

        G[m][m'] = (1/(2 pi)) sqrt(pi/eta) exp((m + m')^2 / (4 eta)).

    The result is far from the identity and grows without bound as
    ``eta -> 0+``.
    """
    ms = np.array([2 * n + abs(l) + 1 for n in range(n_max + 1)], dtype=float)
    s = ms[:, None] + ms[None, :]
    return math.sqrt(math.pi / eta) / (2.0 * math.pi) * np.exp(s * s / (4.0 * eta))


@dataclass(frozen=True)
class ReportRow:
    """One line of the representation comparison."""

    n: int
    l: int
    e_plus: complex
    e_minus: complex
    e_hyperbolic: complex
    match: bool


@dataclass(frozen=True)
class RepresentationReport:
    """Eigenvalue comparison and analyticity summary of both representations."""

    rows: List[ReportRow]
    matches: int
    elliptic_poles: int
    elliptic_lattice_size: int
    hyperbolic_poles: int
    hyperbolic_probes: int
    by_hand_gram: Any = field(default=None, repr=False)
    by_hand_gram_defect: float = 0.0


def _close(a, b):
    return abs(a - b) <= MATCH_RTOL * max(1.0, abs(a), abs(b))


def elliptic_pole_count(n_max, l_max, params):
    """Probe ``normalization_constant`` at every lattice point and count poles."""
    count = 0
    for n in range(n_max + 1):
        for l in range(-l_max, l_max + 1):
            try:
                normalization_constant(ContinuumLabel(resonance_pole(n, l, params), l), params)
            except PoleAtResonance:
                count += 1
    return count


def hyperbolic_probe_nus(n_max=3, l_max=2, count=100):
    """Complex ``nu`` probe set: the by-hand lattice ``i(2n+|l|+1)`` plus a grid."""
    lattice = sorted({complex(0, 2 * n + l + 1) for n in range(n_max + 1) for l in range(l_max + 1)},
                     key=lambda z: z.imag)
    side = int(math.ceil(math.sqrt(max(count - len(lattice), 1))))
    re = np.linspace(-5.0, 5.0, side)
    im = np.linspace(-5.0, 5.0, side)
    grid = [complex(a, b) for b in im for a in re]
    return (lattice + grid)[:count]


def hyperbolic_pole_count(nus, u=None, radius=1e-2, points=16, rtol=1e-8, family=None):
    """Count probe points where ``Phi_nu`` fails the mean-value test in ``nu``.

    An analytic function equals its average over a small circle around
    the probe; a pole or branch point inside the circle breaks this.  The
    defect is measured relative to the largest value on the circle, so the
    ``e^{|nu| u}`` growth of ``Phi_nu`` is not mistaken for a pole.
    ``family`` maps ``nu`` to a function of ``u`` and defaults to
    :func:`boost_eigenfunction`.
    """
    family = family or boost_eigenfunction
    u = np.linspace(-2.0, 2.0, 33) if u is None else np.asarray(u, dtype=float)
    ring = radius * np.exp(2j * math.pi * np.arange(points) / points)
    poles = 0
    for nu in nus:
        centre = family(nu)(u)
        around = np.array([family(nu + d)(u) for d in ring])
        if not (np.all(np.isfinite(centre)) and np.all(np.isfinite(around))):
            poles += 1
            continue
        scale = np.max(np.abs(around), axis=0)
        defect = np.max(np.abs(around.mean(axis=0) - centre) / scale)
        if defect > rtol:
            poles += 1
    return poles


def representation_report(n_max, l_max, params, probes=100, gram_eta=1.0):
    """Compare ``{E_nl}`` (hyperbolic) with ``{E+-_nl}`` (resonance lattice).

    Rows cover ``0 <= l <= l_max`` (the hyperbolic family needs ``l >= 0``);
    a row matches when its hyperbolic value equals any ``E+-_{n'l'}`` with
    ``n' <= n_max`` and ``|l'| <= l_max``.
    """
    lattice = []
    for n in range(n_max + 1):
        for l in range(-l_max, l_max + 1):
            for s in (+1, -1):
                lattice.append(bateman_resonance_energy(QuantumNumbers(n, l), s, params).value)
    rows = []
    for n in range(n_max + 1):
        for l in range(l_max + 1):
            qn = QuantumNumbers(n, l)
            eh = hyperbolic_eigenvalue(n, l, params).value
            rows.append(ReportRow(
                n, l,
                bateman_resonance_energy(qn, +1, params).value,
                bateman_resonance_energy(qn, -1, params).value,
                eh,
                any(_close(eh, e) for e in lattice),
            ))
    nus = hyperbolic_probe_nus(n_max, l_max, probes)
    gram = by_hand_gram(n_max, 0, gram_eta)
    return RepresentationReport(
        rows=rows,
        matches=sum(r.match for r in rows),
        elliptic_poles=elliptic_pole_count(n_max, l_max, params),
        elliptic_lattice_size=(n_max + 1) * (2 * l_max + 1),
        hyperbolic_poles=hyperbolic_pole_count(nus),
        hyperbolic_probes=len(nus),
        by_hand_gram=gram,
        by_hand_gram_defect=float(np.max(np.abs(gram - np.eye(n_max + 1)))),
    )

"""Real-energy generalized eigenfunctions of the inverted oscillator.

For an iho energy ``eps`` and angular index ``l`` the radial function is

    R_{eps,l}(rho) = N (sqrt(i gamma/hbar) rho)^|l| exp(-i gamma rho^2 / 2 hbar)
                     * 1F1(a, |l| + 1, i gamma rho^2 / hbar),
    a = (|l| + 1 - eps/(i gamma hbar)) / 2,
    N = sqrt(gamma / (pi |l|!)) (-i)^a Gamma(a),

and the total energy of the full problem is ``hbar omega l + eps``.  All
complex powers use the principal branch, so ``(-i)^a = exp(-i pi a / 2)``
and ``sqrt(i) = exp(i pi / 4)``.

Continued to complex ``eps``, ``N`` has poles where ``a = -n``, that is
at ``eps_nl = i gamma hbar (|l| + 2n + 1)``, which are the resonance
energies of :mod:`batres.inverted_oscillator`.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import PoleAtResonance, SeriesDomain
from .oscillator_basis import RadialFunction
from .quadrature import RayContour, integrate_ray
from .special_functions import (
    gamma_complex,
    gauss_2f1_at_1,
    hyp1f1,
    hyp2f1_series,
)

POLE_RTOL = 1e-9
SERIES_LIMIT = 0.999
SQRT_I = complex(math.sqrt(0.5), math.sqrt(0.5))


@dataclass(frozen=True)
class ContinuumLabel:
    """iho energy ``epsilon`` (complex when continued) and angular index ``l``."""

    epsilon: complex
    l: int

    def __post_init__(self):
        e = complex(self.epsilon)
        if not (math.isfinite(e.real) and math.isfinite(e.imag)):
            raise ValueError("epsilon must be finite")
        object.__setattr__(self, "l", int(self.l))


@dataclass(frozen=True)
class NormalizationConstant:
    """Value of ``N_{eps,l}`` and its parameter ``a``."""

    value: complex
    a_parameter: complex


def continuum_a(label, params):
    """``a = (|l| + 1 - eps/(i gamma hbar)) / 2``.

    Examples
    --------
    >>> from batres.params_transforms import PhysicalParams
    >>> continuum_a(ContinuumLabel(1.0, 1), PhysicalParams(1.0, 1.0))
    (1+0.5j)
    """
    eps = complex(label.epsilon)
    return 0.5 * (abs(label.l) + 1 + 1j * eps / (params.gamma * params.hbar))


def pole_index(a):
    """Return n if ``a`` is within ``1e-9 * max(1, n)`` of ``-n``, else None."""
    a = complex(a)
    n = round(-a.real)
    if n < 0:
        return None
    if abs(a + n) <= POLE_RTOL * max(1, n):
        return int(n)
    return None


def resonance_pole(n, l, params):
    """Pole location ``eps_nl = i gamma hbar (|l| + 2n + 1)``."""
    return complex(0.0, params.gamma * params.hbar * (abs(l) + 2 * n + 1))


def normalization_constant(label, params):
    """``N_{eps,l} = sqrt(gamma/(pi |l|!)) (-i)^a Gamma(a)``.

    Raises
    ------
    PoleAtResonance
        If the (continued) ``eps`` sits on a pole ``eps_nl``.
    """
    a = continuum_a(label, params)
    n = pole_index(a)
    if n is not None:
        raise PoleAtResonance(n, label.l)
    L = abs(label.l)
    pref = math.sqrt(params.gamma / (math.pi * math.factorial(L)))
    value = pref * cmath.exp(-0.5j * math.pi * a) * gamma_complex(a)
    return NormalizationConstant(complex(value), a)


def continuum_eigenfunction(label, params):
    """Radial eigenfunction ``R_{eps,l}`` and total energy ``hbar omega l + eps``.

    Returns
    -------
    (RadialFunction, complex)
        The total energy is real for real ``eps``.
    """
    norm = normalization_constant(label, params)
    L = abs(label.l)
    a = norm.a_parameter
    k = params.gamma / params.hbar
    s = SQRT_I * math.sqrt(k)
    nval = norm.value

    def evaluate(rho):
        z = 1j * k * rho * rho
        return nval * (s * rho) ** L * np.exp(-0.5 * z) * hyp1f1(a, L + 1, z)

    rf = RadialFunction(evaluate, "continuum", label.l,
                        {"epsilon": complex(label.epsilon), "l": label.l}, params)
    energy = params.hbar * params.omega * label.l + complex(label.epsilon)
    if energy.imag == 0.0:
        energy = energy.real
    return rf, energy


def time_reverse(f):
    """Analytic conjugation of a radial function.

    Conjugates the coefficients of the analytic expression, i.e. returns
    ``rho -> conj(f(conj(rho)))``; on the real axis this is the pointwise
    conjugate.  It maps ``u+_nl`` to ``u-_nl`` and the continuum family
    ``psi`` onto its partner ``chi``; the angular index is unchanged.
    """
    return f.conj_analytic()


def _principal_pow(z, w):
    if z == 0:
        if w == 0:
            return 1.0 + 0j
        return 0j if w.real > 0 else complex(math.inf, 0.0)
    return cmath.exp(w * cmath.log(z))


def formula_J(lam, mu, alpha, alpha_p, k, k_p):
    """Closed form of ``int_0^inf e^{-lam z} z^{mu-1} M(alpha, mu, k z) M(alpha', mu, k' z) dz``.

    Evaluates

        Gamma(mu) lam^{alpha + alpha' - mu} (lam - k)^{-alpha} (lam - k')^{-alpha'}
            * 2F1(alpha, alpha'; mu; k k' / ((lam - k)(lam - k'))),

    with principal branches.  The 2F1 is summed as a series for
    ``|x| < 0.999`` and by Gauss's closed form at ``x = 1``.

    Raises
    ------
    DivergentAtUnitArgument
        At ``x = 1`` when ``Re(mu - alpha - alpha') <= 0``; this is how the
        normalization integral of the continuum functions diverges as
        ``lam -> 0+``.
    SeriesDomain
        If ``|x| >= 0.999`` and ``x != 1``.
    """
    lam, mu, al, alp, k, kp = (complex(v) for v in (lam, mu, alpha, alpha_p, k, k_p))
    x = k * kp / ((lam - k) * (lam - kp))
    if abs(x - 1.0) < 1e-14:
        hyp = gauss_2f1_at_1(al, alp, mu)
    elif abs(x) < SERIES_LIMIT:
        hyp = hyp2f1_series(al, alp, mu, x)
    else:
        raise SeriesDomain(f"2F1 argument |x| = {abs(x):.6f} outside the series disc")
    pre = gamma_complex(mu) * _principal_pow(lam - k, -al) * _principal_pow(lam - kp, -alp)
    return complex(pre * _principal_pow(lam, al + alp - mu) * hyp)


def regularized_self_overlap_integral(label, lam, params, tol=1e-12):
    """``int_0^inf e^{-lam z} z^|l| M(a, |l|+1, i z) M(conj a, |l|+1, -i z) dz`` by quadrature."""
    a = continuum_a(label, params)
    L = abs(label.l)
    ac = a.conjugate()

    def integrand(z):
        return np.exp(-lam * z) * z ** L * hyp1f1(a, L + 1, 1j * z) * hyp1f1(ac, L + 1, -1j * z)

    return complex(integrate_ray(integrand, RayContour(panel=1.0), tol=tol))


def regularized_self_overlap_closed(label, lam, params):
    """Closed form of :func:`regularized_self_overlap_integral` via :func:`formula_J`."""
    a = continuum_a(label, params)
    L = abs(label.l)
    return formula_J(lam, L + 1, a, a.conjugate(), 1j, -1j)


def regularized_norm(label, lam, params, tol=1e-12):
    """``int_0^inf |R_{eps,l}(rho)|^2 exp(-lam gamma rho^2/hbar) rho drho`` by quadrature.

    Equals ``|N|^2 hbar/(2 gamma) * J(lam)`` with ``J`` the closed form above.
    """
    rf, _ = continuum_eigenfunction(label, params)
    k = params.gamma / params.hbar
    ev = rf.evaluate

    def integrand(rho):
        return np.abs(ev(rho)) ** 2 * np.exp(-lam * k * rho * rho) * rho

    return integrate_ray(integrand, RayContour(panel=0.5 / math.sqrt(k)), tol=tol).real


def continuum_potential(params):
    """Barrier potential ``-gamma^2 rho^2 / 2``."""
    g2 = params.gamma ** 2
    return lambda rho: -0.5 * g2 * rho * rho

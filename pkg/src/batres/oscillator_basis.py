"""Eigenbasis of the 2D isotropic harmonic oscillator.

The radial functions

    R_nl(rho) = sqrt(2 Omega/hbar) sqrt(n!/(n+|l|)!) x^|l| exp(-x^2/2) L_n^|l|(x^2),
    x = sqrt(Omega/hbar) rho,

are orthonormal under ``int_0^inf conj(R) R' rho drho`` and belong to the
eigenvalue ``hbar Omega (|l| + 2n + 1)``.  The angular factor
``exp(i l phi)/sqrt(2 pi)`` is carried by the label ``l`` only: overlaps
between different ``l`` are zero without integration.

Conjugation convention
----------------------
Overlaps are ``int conj~f(rho) g(rho) rho drho`` where
``conj~f(rho) = conj(f(conj(rho)))`` is the analytic function whose Taylor
coefficients are the conjugates of those of ``f``.  On the real axis it is
the ordinary complex conjugate; on a rotated ray it is the continuation
that keeps the integrand analytic, so the contour can be turned.
"""

import math
from dataclasses import dataclass, field
from typing import Any, Callable, Mapping, Optional

import numpy as np

from .quadrature import QuadratureRule, RayContour, gauss_laguerre_rule, integrate_ray
from .special_functions import hyp1f1, laguerre

FAMILIES = (
    "ho",
    "iho_plus",
    "iho_minus",
    "continuum",
    "continuum_reversed",
    "hyperbolic_cont",
    "hyperbolic_disc",
    "generic",
)
_CONJUGATE_FAMILY = {
    "iho_plus": "iho_minus",
    "iho_minus": "iho_plus",
    "continuum": "continuum_reversed",
    "continuum_reversed": "continuum",
}


@dataclass(frozen=True)
class QuantumNumbers:
    """Radial quantum number ``n >= 0`` and angular momentum ``l``."""

    n: int
    l: int

    def __post_init__(self):
        if int(self.n) != self.n or int(self.l) != self.l:
            raise ValueError("quantum numbers must be integers")
        if self.n < 0:
            raise ValueError("radial quantum number n must be >= 0")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "l", int(self.l))


@dataclass(frozen=True, eq=False)
class RadialFunction:
    """Complex radial function with its angular index and provenance.

    Attributes
    ----------
    evaluate : callable
        Vectorized map from complex ``rho`` arrays to complex values; it
        must be analytic so that rotated contours make sense.
    family : str
        One of :data:`FAMILIES`.
    l : int
        Angular index.
    labels : mapping
        Quantum numbers or continuum labels.
    params : object
        The :class:`~batres.params_transforms.PhysicalParams` used, if any.
    omega_ho : float, optional
        Oscillator frequency of the ``ho`` family.
    """

    evaluate: Callable[[np.ndarray], np.ndarray]
    family: str
    l: int
    labels: Mapping[str, Any] = field(default_factory=dict)
    params: Any = None
    omega_ho: Optional[float] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")

    def __call__(self, rho):
        scalar = np.ndim(rho) == 0
        r = np.atleast_1d(np.asarray(rho, dtype=np.complex128))
        out = np.asarray(self.evaluate(r), dtype=np.complex128)
        return complex(out[0]) if scalar else out

    def conj_analytic(self, family=None):
        """The function ``rho -> conj(f(conj(rho)))``."""
        f = self.evaluate
        return RadialFunction(
            evaluate=lambda r: np.conj(f(np.conj(r))),
            family=family or _CONJUGATE_FAMILY.get(self.family, self.family),
            l=self.l,
            labels=dict(self.labels),
            params=self.params,
            omega_ho=self.omega_ho,
        )


def _factorial_ratio_sqrt(n, l):
    """sqrt(n! / (n + l)!) computed in logs."""
    return math.exp(0.5 * (math.lgamma(n + 1) - math.lgamma(n + l + 1)))


def ho_radial(qn, Omega, hbar=1.0, route="laguerre"):
    """Radial oscillator eigenfunction R_nl and its eigenvalue.

    Parameters
    ----------
    qn : QuantumNumbers
    Omega : float
        Oscillator frequency, > 0.
    hbar : float
        > 0.
    route : {"laguerre", "hyp1f1"}
        Laguerre recurrence (default) or the equivalent 1F1 form with
        ``C_nl = sqrt(2 Omega/hbar)/|l|! * sqrt((n+|l|)!/n!)``.

    Returns
    -------
    (RadialFunction, float)
        ``R_nl`` and ``hbar * Omega * (|l| + 2n + 1)``.

    Examples
    --------
    >>> R, e = ho_radial(QuantumNumbers(0, 0), 1.0)
    >>> round(abs(R(0.0)), 12), e
    (1.414213562373, 1.0)
    """
    Omega = float(Omega)
    hbar = float(hbar)
    if not (Omega > 0 and hbar > 0):
        raise ValueError("Omega and hbar must be positive")
    n, L = qn.n, abs(qn.l)
    s = math.sqrt(Omega / hbar)
    pref = math.sqrt(2.0 * Omega / hbar)
    if route == "laguerre":
        c = pref * _factorial_ratio_sqrt(n, L)

        def evaluate(rho):
            x = s * rho
            z = x * x
            return c * x ** L * np.exp(-0.5 * z) * laguerre(n, L, z)
    elif route == "hyp1f1":
        c = pref / math.factorial(L) / _factorial_ratio_sqrt(n, L)

        def evaluate(rho):
            x = s * rho
            z = x * x
            return c * x ** L * np.exp(-0.5 * z) * hyp1f1(-n, L + 1, z)
    else:
        raise ValueError(f"unknown route {route!r}")
    rf = RadialFunction(evaluate, "ho", qn.l, {"n": n, "l": qn.l, "hbar": hbar}, None, Omega)
    return rf, hbar * Omega * (L + 2 * n + 1)


def ho_normalization(qn, Omega, hbar=1.0):
    """The 1F1-route constant ``C_nl``."""
    n, L = qn.n, abs(qn.l)
    return math.sqrt(2.0 * Omega / hbar) / math.factorial(L) / _factorial_ratio_sqrt(n, L)


def laguerre_overlap(f, g, rule, scale, theta=0.0):
    """``int conj~f g rho drho`` along ``rho = e^{i theta} s`` by Gauss-Laguerre.

    The substitution ``z = scale * s**2`` turns the integral into
    ``e^{2 i theta}/(2 scale) * int_0^inf [conj~f g](e^{i theta} sqrt(z/scale)) dz``,
    which the rule evaluates with its ``exp(z)``-scaled weights.  It is
    exact when ``conj~f g`` is a polynomial in ``z`` times ``exp(-z)``.
    """
    phase = complex(math.cos(theta), math.sin(theta))
    rho = phase * np.sqrt(rule.nodes / scale)
    ft = np.conj(f.evaluate(np.conj(rho)))
    vals = ft * g.evaluate(rho)
    return complex(phase * phase / (2.0 * scale) * np.sum(rule.scaled_weights * vals))


def overlap_radial(f, g, contour=None, rule=None, scale=None, tol=1e-12):
    """Radial overlap ``int_0^inf conj~f(rho) g(rho) rho drho``.

    Parameters
    ----------
    f, g : RadialFunction
    contour : RayContour, optional
        Integration ray; the real axis by default.
    rule : QuadratureRule or int, optional
        Use a Gauss-Laguerre rule (or one with that many points) instead of
        adaptive quadrature.  Requires ``scale``.
    scale : float, optional
        Gaussian scale for the Gauss-Laguerre substitution; defaults to
        ``Omega/hbar`` of ``f`` for the ``ho`` family.
    tol : float
        Absolute tolerance of the adaptive route.

    Returns
    -------
    complex
        Exactly 0 when ``f.l != g.l``.
    """
    if f.l != g.l:
        return 0j
    contour = contour or RayContour()
    if rule is not None:
        if isinstance(rule, int):
            rule = gauss_laguerre_rule(rule, 0.0)
        if not isinstance(rule, QuadratureRule) or rule.alpha != 0.0:
            raise ValueError("overlap needs a Gauss-Laguerre rule with alpha = 0")
        if scale is None:
            if f.omega_ho is None:
                raise ValueError("scale is required for non-oscillator functions")
            scale = f.omega_ho / f.labels.get("hbar", 1.0)
        return laguerre_overlap(f, g, rule, scale, contour.theta)

    def integrand(rho):
        return np.conj(f.evaluate(np.conj(rho))) * g.evaluate(rho) * rho

    return complex(integrate_ray(integrand, contour, tol=tol))


def ho_gram(n_max, l, Omega, hbar=1.0, n_points=200):
    """Gram matrix of ``{R_nl : n <= n_max}`` by Gauss-Laguerre quadrature."""
    rule = gauss_laguerre_rule(n_points, 0.0)
    fs = [ho_radial(QuantumNumbers(n, l), Omega, hbar)[0] for n in range(n_max + 1)]
    scale = Omega / hbar
    g = np.empty((n_max + 1, n_max + 1), dtype=np.complex128)
    for i, fi in enumerate(fs):
        for j, fj in enumerate(fs):
            g[i, j] = laguerre_overlap(fi, fj, rule, scale)
    return g


def ho_projection_errors(f, n_values, Omega, hbar=1.0, grid=None, tol=1e-12):
    """Pointwise error of truncated oscillator expansions of ``f``.

    Applies the truncated kernel ``sum_{n <= N} R_nl(rho) <R_nl|f>`` for
    each ``N`` in ``n_values`` (``l = f.l``) and returns
    ``max_rho |f - P_N f|`` on ``grid``.  Overlaps are computed on the real
    axis, so ``f`` may have compact support.
    """
    n_values = sorted(int(n) for n in n_values)
    grid = np.linspace(0.0, 3.0 * math.sqrt(hbar / Omega), 61) if grid is None else np.asarray(grid)
    target = f(grid)
    basis = [ho_radial(QuantumNumbers(n, f.l), Omega, hbar)[0] for n in range(n_values[-1] + 1)]
    coeffs = [overlap_radial(r, f, tol=tol) for r in basis]
    errors = []
    for N in n_values:
        approx = sum(c * r(grid) for c, r in zip(coeffs[:N + 1], basis[:N + 1]))
        errors.append(float(np.max(np.abs(target - approx))))
    return errors

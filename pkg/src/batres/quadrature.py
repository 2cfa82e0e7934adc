"""Quadrature engines for radial and contour integrals.

Three tools live here:

* :func:`gauss_laguerre_rule` builds the rule for the weight
  ``z**alpha * exp(-z)`` on ``(0, inf)``.
* :func:`integrate_ray` integrates along a rotated ray
  ``rho = exp(i*theta) * s`` with adaptive Gauss-Legendre panels and an
  optional Gaussian regulator ``exp(-eta * s**2)``.  A ladder of regulator
  values can be extrapolated to ``eta -> 0+``.
* :func:`contour_integral_circle` applies the trapezoid rule on a circle.

Ray convention: a ray with angle ``theta`` is parametrized as
``rho = exp(+1j * theta) * s``, ``s >= 0``.  With ``theta = pi/4`` the
Fresnel factor ``exp(1j * rho**2)`` becomes ``exp(-s**2)``.
"""

import math
from dataclasses import dataclass
from typing import Optional, Tuple, Union

import numpy as np
from scipy.linalg import eigh_tridiagonal
from scipy.special import logsumexp

from .errors import ConvergenceFailure, NonConvergent


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss-Laguerre rule for the weight ``z**alpha * exp(-z)``.

    Attributes
    ----------
    nodes : ndarray
        Strictly increasing positive nodes.
    weights : ndarray
        Weights, normalized so that ``sum(weights) == Gamma(alpha + 1)``;
        thus ``sum(weights * nodes**k) == Gamma(alpha + k + 1)`` for
        ``k <= 2n - 1``.  Large-node weights underflow to zero.
    alpha : float
    log_weights : ndarray
        Natural log of the weights, free of underflow.
    """

    nodes: np.ndarray
    weights: np.ndarray
    alpha: float
    log_weights: np.ndarray

    @property
    def scaled_weights(self):
        """``weights * exp(nodes)``, for integrands that carry ``exp(-z)`` themselves."""
        return np.exp(self.log_weights + self.nodes)

    def integrate(self, f):
        """Approximate ``int_0^inf z**alpha exp(-z) f(z) dz``."""
        return np.sum(self.weights * f(self.nodes))


def _laguerre_pair(n, alpha, x):
    """Scaled values of (L_n, L_{n-1}) at x and the log of the common scale."""
    l0 = np.ones_like(x)
    l1 = 1.0 + alpha - x
    log_scale = np.zeros_like(x)
    if n == 1:
        return l1, l0, log_scale
    for k in range(1, n):
        l2 = ((2 * k + 1 + alpha - x) * l1 - (k + alpha) * l0) / (k + 1)
        l0, l1 = l1, l2
        big = np.abs(l1) > 1e150
        if np.any(big):
            l0 = np.where(big, l0 * 1e-150, l0)
            l1 = np.where(big, l1 * 1e-150, l1)
            log_scale = log_scale + np.where(big, 150.0 * math.log(10.0), 0.0)
    return l1, l0, log_scale


def _christoffel_log_weights(n, alpha, x):
    """``-log sum_{k<n} p_k(x)**2`` for orthonormal Laguerre ``p_k``."""
    pm = np.zeros_like(x)
    p = np.full_like(x, math.exp(-0.5 * math.lgamma(alpha + 1.0)))
    total = p * p
    log_scale = np.zeros_like(x)
    for k in range(n - 1):
        pn = ((2 * k + 1 + alpha - x) * p - math.sqrt(k * (k + alpha)) * pm) / math.sqrt((k + 1) * (k + 1 + alpha))
        pm, p = p, pn
        total = total + p * p
        big = total > 1e200
        if np.any(big):
            f = np.where(big, 1e-100, 1.0)
            pm, p, total = pm * f, p * f, total * f * f
            log_scale = log_scale + np.where(big, 200.0 * math.log(10.0), 0.0)
    return -np.log(total) - log_scale


def gauss_laguerre_rule(n_points, alpha=0.0):
    """Gauss-Laguerre nodes and weights for ``z**alpha * exp(-z)``.

    Parameters
    ----------
    n_points : int
        Number of nodes, ``>= 1``.
    alpha : float
        Weight exponent, ``> -1``.

    Returns
    -------
    QuadratureRule
        Exact for polynomials of degree ``<= 2 * n_points - 1``.

    Raises
    ------
    ConvergenceFailure
        If Newton polishing of the nodes does not converge.

    Notes
    -----
    Initial nodes are eigenvalues of the symmetric Jacobi matrix
    (Golub-Welsch); they are then polished by Newton's method on the
    recurrence value of ``L_n^alpha``.  Weights are Christoffel numbers
    ``w_i = 1 / sum_{k<n} p_k(x_i)**2`` with ``p_k`` the orthonormal
    Laguerre polynomials, summed with rescaling and kept in logs.  This is
    far less sensitive to node error than the ``L_{n-1}(x_i)**2`` formula.
    """
    n = int(n_points)
    if n < 1:
        raise ValueError("n_points must be >= 1")
    alpha = float(alpha)
    if not alpha > -1.0:
        raise ValueError("alpha must be > -1")
    k = np.arange(n, dtype=float)
    diag = 2.0 * k + alpha + 1.0
    off = np.sqrt(k[1:] * (k[1:] + alpha))
    if n == 1:
        x = diag.copy()
    else:
        x = eigh_tridiagonal(diag, off, eigvals_only=True)
    # Newton stops at the round-off floor of the recurrence (about 1e-12
    # relative for the smallest node at n = 200); two extra steps follow.
    converged = False
    extra = 0
    for _ in range(100):
        ln, lm, _scale = _laguerre_pair(n, alpha, x)
        dln = (n * ln - (n + alpha) * lm) / x
        dx = ln / dln
        x = x - dx
        if converged or np.all(np.abs(dx) <= 1e-11 * x):
            converged = True
            extra += 1
            if extra == 3:
                break
    if not converged:
        raise ConvergenceFailure(f"Gauss-Laguerre nodes did not converge (n={n}, alpha={alpha})")
    if np.any(np.diff(x) <= 0) or np.any(x <= 0):
        raise ConvergenceFailure("Gauss-Laguerre nodes are not strictly increasing")
    log_w = _christoffel_log_weights(n, alpha, x)
    log_w = log_w + (math.lgamma(alpha + 1.0) - logsumexp(log_w))
    return QuadratureRule(nodes=x, weights=np.exp(log_w), alpha=alpha, log_weights=log_w)


@dataclass(frozen=True)
class RayContour:
    """Rotated ray ``rho = exp(1j * theta) * s``, ``0 <= s <= rmax``.

    Attributes
    ----------
    theta : float
        Rotation angle, ``|theta| < pi/2``.
    regulator_eta : float
        Gaussian regulator ``exp(-eta * s**2)``; 0 for none.
    rmax : float or None
        Hard upper limit on ``s``.  ``None`` lets the integrator find the
        point where the integrand has decayed.
    eta_ladder : tuple of float, optional
        When given, the integral is evaluated at every regulator value in
        the ladder and extrapolated to ``eta -> 0+``.
    extrapolation_pole : complex, optional
        If the regulated integral is a polynomial in ``1/(eta - p)``, pass
        ``p``; extrapolation then runs in that variable instead of ``eta``.
    panel : float
        Panel width of the composite rule.
    """

    theta: float = 0.0
    regulator_eta: float = 0.0
    rmax: Optional[float] = None
    eta_ladder: Optional[Tuple[float, ...]] = None
    extrapolation_pole: Optional[complex] = None
    panel: float = 0.5

    def __post_init__(self):
        if not abs(self.theta) < math.pi / 2:
            raise ValueError("ray angle must satisfy |theta| < pi/2")
        if self.regulator_eta < 0:
            raise ValueError("regulator_eta must be >= 0")
        if self.rmax is not None and not self.rmax > 0:
            raise ValueError("rmax must be positive")
        if self.eta_ladder is not None and min(self.eta_ladder) <= 0:
            raise ValueError("ladder regulators must be positive")


@dataclass(frozen=True)
class CircleContour:
    """Circle ``|z - center| = radius`` traversed ``"ccw"`` or ``"cw"``."""

    center: complex
    radius: float
    orientation: str = "ccw"
    nodes: int = 256

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError("radius must be positive")
        if self.orientation not in ("cw", "ccw"):
            raise ValueError("orientation must be 'cw' or 'ccw'")
        if self.nodes < 16:
            raise ValueError("a circle needs at least 16 nodes")


ContourSpec = Union[RayContour, CircleContour]

_GL_X, _GL_W = np.polynomial.legendre.leggauss(20)
_SCAN_LIMIT = 4000  # panels scanned when rmax is None
_MAX_DEPTH = 40


def _panel_values(g, a, b):
    """20-point Gauss-Legendre values on each panel [a_i, b_i]."""
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    s = mid[:, None] + half[:, None] * _GL_X[None, :]
    vals = np.asarray(g(s.ravel()), dtype=np.complex128).reshape(s.shape)
    return half * (vals @ _GL_W)


def _adaptive(g, a, b, tol):
    """Adaptive composite Gauss-Legendre over the panels (a_i, b_i)."""
    coarse = _panel_values(g, a, b)
    n0 = max(a.size, 1)
    total = 0.0 + 0.0j
    err = 0.0
    depth = 0
    while a.size:
        m = 0.5 * (a + b)
        left = _panel_values(g, a, m)
        right = _panel_values(g, m, b)
        fine = left + right
        diff = np.abs(fine - coarse)
        ok = diff <= np.maximum(tol / n0, 4e-15 * np.abs(fine))
        total += np.sum(fine[ok])
        err += float(np.sum(diff[ok]))
        if np.all(ok):
            break
        depth += 1
        if depth > _MAX_DEPTH:
            raise NonConvergent("panel refinement stalled above tolerance")
        bad = ~ok
        a = np.concatenate([a[bad], m[bad]])
        b = np.concatenate([m[bad], b[bad]])
        coarse = np.concatenate([left[bad], right[bad]])
    return total, err


def _find_cutoff(g, panel, rmax, tol):
    """Upper limit beyond which |g| has decayed below 1e-4 * tol for good.

    Panel edges are scanned in growing chunks so that the integrand is
    never evaluated far beyond the point where it has died out.
    """
    limit = rmax if rmax is not None else panel * _SCAN_LIMIT
    n = max(int(math.ceil(limit / panel)), 1)
    peak_val = -1.0
    run = 0
    start = 0
    chunk = 32
    while start < n:
        stop = min(start + chunk, n)
        s = panel * np.arange(start + 1, stop + 1, dtype=float)
        s[-1] = min(s[-1], limit)
        mags = np.abs(np.asarray(g(s), dtype=np.complex128))
        if not np.all(np.isfinite(mags)):
            raise NonConvergent("integrand is not finite along the ray")
        for i, m in enumerate(mags):
            if m > peak_val:
                peak_val = m
                run = 0
            run = run + 1 if m <= 1e-4 * tol else 0
            if run == 4:
                return s[i]
        start = stop
        chunk *= 2
    if rmax is not None:
        return limit
    raise NonConvergent("integrand does not decay along the ray")


def _ray_single(f, theta, eta, rmax, panel, tol):
    phase = complex(math.cos(theta), math.sin(theta))

    def g(s):
        s = np.asarray(s, dtype=float)
        out = np.asarray(f(phase * s), dtype=np.complex128) * phase
        if eta > 0:
            out = out * np.exp(-eta * s * s)
        return out

    cutoff = _find_cutoff(g, panel, rmax, tol)
    edges = np.arange(0.0, cutoff, panel)
    a = edges
    b = np.append(edges[1:], cutoff)
    return _adaptive(g, a, b, tol)


def neville_extrapolate(x, y, x0):
    """Evaluate the interpolating polynomial through (x, y) at x0.

    Returns the best diagonal Neville estimate and its error estimate.
    The estimate kept is the one whose change from the previous order is
    smallest, which guards against the round-off growth of high orders.
    """
    x = np.asarray(x, dtype=np.complex128)
    p = np.asarray(y, dtype=np.complex128).copy()
    n = len(x)
    estimates = [p[0]]
    for m in range(1, n):
        for i in range(n - m):
            p[i] = ((x0 - x[i + m]) * p[i] + (x[i] - x0) * p[i + 1]) / (x[i] - x[i + m])
        estimates.append(p[0])
    best, best_err = estimates[-1], math.inf
    for k in range(2, len(estimates)):
        d = abs(estimates[k] - estimates[k - 1])
        if d < best_err:
            best, best_err = estimates[k], d
    return complex(best), float(best_err)


def integrate_ray(f, spec=None, tol=1e-10, full_output=False):
    """Integrate ``f`` along a rotated ray.

    Computes ``int_0^smax f(e^{i theta} s) e^{i theta} e^{-eta s^2} ds``.

    Parameters
    ----------
    f : callable
        Vectorized complex function of a complex array.
    spec : RayContour, optional
        Defaults to the real axis without regulator.
    tol : float
        Target absolute error.
    full_output : bool
        Also return the error estimate.

    Returns
    -------
    complex, or (complex, float) when ``full_output``.

    Raises
    ------
    NonConvergent
        If the integrand does not decay or panel refinement stalls.

    Notes
    -----
    With an ``eta_ladder`` the value at ``eta -> 0+`` is obtained by
    Neville extrapolation, in ``eta`` or, when ``extrapolation_pole`` is
    set, in ``w = 1/(eta - pole)``.
    """
    spec = spec or RayContour()
    if not isinstance(spec, RayContour):
        raise TypeError("integrate_ray needs a RayContour")
    if spec.eta_ladder is None:
        val, err = _ray_single(f, spec.theta, spec.regulator_eta, spec.rmax, spec.panel, tol)
        if err > tol:
            raise NonConvergent(f"error estimate {err:.3e} above tolerance {tol:.1e}")
        return (val, err) if full_output else val
    etas = np.asarray(spec.eta_ladder, dtype=float)
    vals = [_ray_single(f, spec.theta, float(e), spec.rmax, spec.panel, tol * 1e-3)[0]
            for e in etas]
    if spec.extrapolation_pole is None:
        val, err = neville_extrapolate(etas, vals, 0.0)
    else:
        p = complex(spec.extrapolation_pole)
        val, err = neville_extrapolate(1.0 / (etas - p), vals, -1.0 / p)
    return (val, err) if full_output else val


def default_eta_ladder(scale=1.0, points=12):
    """Geometric regulator ladder on ``[0.3, 2] * scale``, largest first."""
    return tuple(float(v) for v in np.geomspace(2.0, 0.3, points) * scale)


def contour_integral_circle(f, spec, tol=1e-12, max_nodes=1 << 16, full_output=False):
    """Trapezoid rule for ``oint f(z) dz`` on a circle.

    Node count starts at ``spec.nodes`` and doubles until two successive
    values agree to ``tol * max(1, |value|)``.  The 1/(2 pi i) factor is
    left to the caller; clockwise orientation negates the value.

    Parameters
    ----------
    f : callable
        Vectorized complex function.
    spec : CircleContour
    tol : float
    max_nodes : int
    full_output : bool
        Also return the final node count.
    """
    if not isinstance(spec, CircleContour):
        raise TypeError("contour_integral_circle needs a CircleContour")

    def trap(n):
        phi = 2.0 * math.pi * np.arange(n) / n
        e = np.exp(1j * phi)
        z = spec.center + spec.radius * e
        vals = np.asarray(f(z), dtype=np.complex128)
        return complex(np.sum(vals * 1j * spec.radius * e) * (2.0 * math.pi / n))

    n = spec.nodes
    prev = trap(n)
    while True:
        n *= 2
        cur = trap(n)
        if abs(cur - prev) <= tol * max(1.0, abs(cur)) or n >= max_nodes:
            break
        prev = cur
    if spec.orientation == "cw":
        cur = -cur
    return (cur, n) if full_output else cur

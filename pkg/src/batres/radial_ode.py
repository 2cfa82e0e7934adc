"""Finite-difference residuals of radial eigen-equations.

All radial operators in this package have the form

    H f = -(hbar**2 / 2) [f'' + f'/rho - m2 f / rho**2] + V(rho) f

with ``m2 = l**2`` for angular momentum ``l`` (elliptic coordinates) and
``m2 = -nu**2`` for a boost label ``nu`` (hyperbolic coordinates).
Central differences make the residual ``H f - E f`` of an exact
eigenfunction an O(h**2) quantity, so halving ``h`` should divide it by
four.
"""

import math

import numpy as np


def radial_residual(f, m2, potential, energy, rho, h, hbar=1.0):
    """Central-difference residual ``H f - E f`` at the points ``rho``.

    Returns
    -------
    residual, values : ndarray
        The residual and ``f(rho)``.
    """
    rho = np.asarray(rho, dtype=float)
    f0 = np.asarray(f(rho), dtype=np.complex128)
    fp = np.asarray(f(rho + h), dtype=np.complex128)
    fm = np.asarray(f(rho - h), dtype=np.complex128)
    d2 = (fp - 2.0 * f0 + fm) / (h * h)
    d1 = (fp - fm) / (2.0 * h)
    hf = -0.5 * hbar * hbar * (d2 + d1 / rho - m2 * f0 / (rho * rho)) + potential(rho) * f0
    return hf - energy * f0, f0


def relative_residual(f, m2, potential, energy, rho, h, hbar=1.0):
    """``max|H f - E f| / max|E f|`` (``max|f|`` when ``E == 0``)."""
    res, f0 = radial_residual(f, m2, potential, energy, rho, h, hbar)
    scale = abs(energy) if energy != 0 else 1.0
    return float(np.max(np.abs(res)) / (scale * np.max(np.abs(f0))))


def observed_order(f, m2, potential, energy, rho, h=1e-2, hbar=1.0):
    """Convergence order ``log2(r(h) / r(h/2))`` of the relative residual."""
    r1 = relative_residual(f, m2, potential, energy, rho, h, hbar)
    r2 = relative_residual(f, m2, potential, energy, rho, 0.5 * h, hbar)
    return math.log2(r1 / r2), r1, r2

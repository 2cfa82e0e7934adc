"""Complex special functions: Gamma, 1F1, Tricomi U, Laguerre and 2F1.

Every function accepts a scalar or an array for its last argument and
returns the same shape (``complex`` for scalars).  Parameters are screened
here; the numerical work happens in the kernel backend chosen by
:mod:`batres._backend`.

Branch convention: complex powers ``z**w`` use the principal logarithm,
arg in (-pi, pi].

Notes
-----
1F1 is summed by its Maclaurin series for ``|z| <= 2`` after Kummer's
transform ``M(a, b, z) = e^z M(b - a, b, -z)`` has moved ``z`` into the
right half plane.  Beyond that radius the series is no longer safe in
double precision (terms grow like ``e^|z|`` while the sum stays of order
one on the imaginary axis), so the value is carried outward by Taylor
stepping of Kummer's equation ``z w'' + (b - z) w' - a w = 0`` along the
ray from the origin.  Polynomial cases (``a`` or ``b - a`` a nonpositive
integer) are summed exactly.
"""

import numpy as np

from . import _backend
from .errors import (
    ConvergenceFailure,
    DivergentAtUnitArgument,
    DomainError,
    ParameterPole,
    PoleAtNonpositiveInteger,
    SeriesDomain,
)

TRICOMI_INTEGER_SHIFT = 1e-6
SERIES_MAX_TERMS = 1_000_000


def _nonpos_int(x):
    """Return n when x == -n exactly for an integer n >= 0, else None."""
    x = complex(x)
    if x.imag == 0.0 and x.real <= 0.0 and float(x.real).is_integer():
        return int(-x.real)
    return None


def _is_int(x):
    x = complex(x)
    return x.imag == 0.0 and float(x.real).is_integer()


def _kern(backend):
    return _backend.get_kernels(backend)


def _vectorize(z, array_fn, scalar_fn):
    if np.ndim(z) == 0:
        return scalar_fn(complex(z))
    arr = np.asarray(z, dtype=np.complex128)
    return array_fn(arr.ravel()).reshape(arr.shape)


def _check_finite(value, what):
    bad = ~np.isfinite(value)
    if np.any(bad):
        raise ConvergenceFailure(f"{what} did not converge")
    return value


def gamma_complex(z, backend=None):
    """Gamma function of a complex argument.

    Parameters
    ----------
    z : complex or array_like
        Argument.  Must not be exactly a nonpositive integer.
    backend : {"cython", "python"}, optional
        Kernel backend; the active one by default.

    Returns
    -------
    complex or ndarray

    Raises
    ------
    PoleAtNonpositiveInteger
        If any ``z`` sits exactly on a pole.

    Notes
    -----
    Lanczos approximation (g = 7, nine terms) for ``Re z >= 1/2`` and the
    reflection formula below.  Relative accuracy is about 1e-13 on
    ``|z| < 30``.
    """
    for v in np.atleast_1d(np.asarray(z, dtype=np.complex128)).ravel():
        n = _nonpos_int(v)
        if n is not None:
            raise PoleAtNonpositiveInteger(-n)
    k = _kern(backend)
    return _vectorize(z, k.gamma_array, k.cgamma)


def rgamma(z, backend=None):
    """Reciprocal Gamma function, entire, exactly 0 at the poles of Gamma."""
    k = _kern(backend)
    return _vectorize(z, k.rgamma_array, k.crgamma)


def hyp1f1(a, b, z, backend=None):
    """Kummer's confluent hypergeometric function M(a, b, z).

    Parameters
    ----------
    a, b : complex
        Parameters; ``b`` must not be a nonpositive integer.
    z : complex or array_like
    backend : {"cython", "python"}, optional

    Returns
    -------
    complex or ndarray

    Raises
    ------
    ParameterPole
        If ``b`` is in {0, -1, -2, ...}.
    ConvergenceFailure
        If a series does not settle (far outside the tested domain).

    Examples
    --------
    >>> hyp1f1(-1, 2, 3.0)
    (-0.5+0j)
    """
    if _nonpos_int(b) is not None:
        raise ParameterPole(f"1F1 lower parameter b = {complex(b)} is a nonpositive integer")
    k = _kern(backend)
    a = complex(a)
    b = complex(b)
    val = _vectorize(z, lambda arr: k.hyp1f1_array(a, b, arr), lambda s: k.chyp1f1(a, b, s))
    return _check_finite(val, "1F1")


def laguerre(n, alpha, z, backend=None):
    """Generalized Laguerre polynomial L_n^alpha(z) by three-term recurrence."""
    n = int(n)
    if n < 0:
        raise DomainError("Laguerre degree must be >= 0")
    k = _kern(backend)
    alpha = complex(alpha)
    return _vectorize(z, lambda arr: k.laguerre_array(n, alpha, arr),
                      lambda s: k.claguerre(n, alpha, s))


def _cpow(z, w):
    """Principal-branch z**w, elementwise."""
    z = np.asarray(z, dtype=np.complex128)
    return np.exp(w * np.log(z))


def _tricomi_two_term(a, c, z, backend):
    g1 = gamma_complex(1.0 - c, backend)
    g2 = gamma_complex(c - 1.0, backend)
    t1 = g1 * rgamma(a - c + 1.0, backend) * hyp1f1(a, c, z, backend)
    t2 = g2 * rgamma(a, backend) * _cpow(z, 1.0 - c) * hyp1f1(a - c + 1.0, 2.0 - c, z, backend)
    return t1 + t2


def tricomi_u(a, c, z, backend=None):
    """Tricomi's confluent hypergeometric function U(a, c, z).

    Parameters
    ----------
    a, c : complex
    z : complex or array_like
        Must be nonzero unless the function is a polynomial.
    backend : {"cython", "python"}, optional

    Returns
    -------
    complex or ndarray

    Raises
    ------
    DomainError
        At ``z = 0`` when U is not a polynomial.

    Notes
    -----
    For ``a = -n`` the exact polynomial ``(-1)^n n! L_n^{c-1}(z)`` is
    returned, and when ``1 + a - c = -n`` the reflection
    ``U(a, c, z) = z^{1-c} U(1 + a - c, 2 - c, z)`` reduces to it.
    Otherwise the two-term combination of 1F1 values is used; for integer
    ``c`` it is singular, and the average of its values at
    ``c +- 1e-6`` stands in for the limit (relative accuracy about 1e-9
    there).
    """
    a = complex(a)
    c = complex(c)
    n = _nonpos_int(a)
    if n is not None:
        sign = -1.0 if n % 2 else 1.0
        fact = float(np.prod(np.arange(1, n + 1, dtype=float)))
        return sign * fact * laguerre(n, c - 1.0, z, backend)
    m = _nonpos_int(1.0 + a - c)
    zs = np.asarray(z, dtype=np.complex128)
    if np.any(zs == 0):
        raise DomainError("Tricomi U is singular at z = 0 for non-polynomial parameters")
    if m is not None:
        sign = -1.0 if m % 2 else 1.0
        fact = float(np.prod(np.arange(1, m + 1, dtype=float)))
        val = _cpow(zs, 1.0 - c) * sign * fact * laguerre(m, 1.0 - c, zs, backend)
    elif _is_int(c):
        d = TRICOMI_INTEGER_SHIFT
        val = 0.5 * (_tricomi_two_term(a, c + d, zs, backend)
                     + _tricomi_two_term(a, c - d, zs, backend))
    else:
        val = _tricomi_two_term(a, c, zs, backend)
    if np.ndim(z) == 0:
        return complex(val)
    return val


def gauss_2f1_at_1(alpha, beta, gamma_p, backend=None):
    """Gauss's closed form of 2F1(alpha, beta; gamma; 1).

    Returns ``Gamma(c) Gamma(c - a - b) / (Gamma(c - a) Gamma(c - b))``.

    Raises
    ------
    DivergentAtUnitArgument
        If the series at unit argument diverges, i.e. ``Re(c - a - b) <= 0``
        for a non-terminating series, or ``c - a - b`` is a nonpositive
        integer.
    """
    a = complex(alpha)
    b = complex(beta)
    c = complex(gamma_p)
    s = c - a - b
    terminating = _nonpos_int(a) is not None or _nonpos_int(b) is not None
    if _nonpos_int(s) is not None or (not terminating and s.real <= 0.0):
        raise DivergentAtUnitArgument(
            f"2F1({a}, {b}; {c}; 1) diverges: c - a - b = {s}")
    if _nonpos_int(c) is not None:
        raise ParameterPole("2F1 lower parameter is a nonpositive integer")
    return complex(gamma_complex(c, backend) * gamma_complex(s, backend)
                   * rgamma(c - a, backend) * rgamma(c - b, backend))


def hyp2f1_series(a, b, c, x, backend=None, max_terms=SERIES_MAX_TERMS):
    """Gauss hypergeometric series 2F1(a, b; c; x) for ``|x| < 1``.

    Raises
    ------
    SeriesDomain
        If ``|x| >= 1``.
    ConvergenceFailure
        If ``max_terms`` terms do not reach round-off.
    """
    x = complex(x)
    if abs(x) >= 1.0:
        raise SeriesDomain(f"2F1 series needs |x| < 1, got |x| = {abs(x)}")
    if _nonpos_int(c) is not None:
        raise ParameterPole("2F1 lower parameter is a nonpositive integer")
    val, ok = _kern(backend).chyp2f1(a, b, c, x, max_terms)
    if not ok:
        raise ConvergenceFailure("2F1 series did not converge")
    return val

"""Pure-Python special-function kernels.

This module is the reference implementation of the hot kernels and the
fallback used when the compiled extension :mod:`batres._kernels` is not
available.  The compiled module mirrors every arithmetic step below (same
operation order, same complex division formula, same libm calls), so both
backends return bit-identical results on finite inputs.

Only ``+ - * /`` on Python complex numbers and real ``math`` functions are
used; ``cmath`` and ``abs`` are avoided on purpose because their C
counterparts differ in the last bits.

No argument validation happens here.  Poles and parameter errors are
screened by :mod:`batres.special_functions`.
"""

import math

import numpy as np

BACKEND = "python"

_PI = math.pi
_SQRT_2PI = 2.5066282746310002
# Lanczos approximation with g = 7 and nine coefficients
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
# 1F1: Maclaurin radius and the Taylor step cap used beyond it
_R0 = 2.0
_HMAX = 2.0
_MAX_TERMS = 100000
_NAN = complex(math.nan, math.nan)


def _cabs(z):
    return math.sqrt(z.real * z.real + z.imag * z.imag)


def _cexp(z):
    e = math.exp(z.real)
    return complex(e * math.cos(z.imag), e * math.sin(z.imag))


def _clog(z):
    return complex(math.log(_cabs(z)), math.atan2(z.imag, z.real))


def _csinpi(z):
    # sin(pi*z) with the real part reduced first so that zeros are exact
    r = math.floor(z.real + 0.5)
    x = _PI * (z.real - r)
    y = _PI * z.imag
    s = complex(math.sin(x) * math.cosh(y), math.cos(x) * math.sinh(y))
    if math.fmod(r, 2.0) != 0.0:
        return -s
    return s


def _nonpos_int(a):
    """Return n if a == -n for an integer n >= 0, else -1."""
    if a.imag != 0.0 or a.real > 0.0:
        return -1
    if a.real != math.floor(a.real):
        return -1
    return int(-a.real)


def cgamma(z):
    z = complex(z)
    if z.real < 0.5:
        return _PI / (_csinpi(z) * cgamma(1.0 - z))
    z = z - 1.0
    x = complex(_LANCZOS[0], 0.0)
    for i in range(1, 9):
        x = x + _LANCZOS[i] / (z + float(i))
    t = z + 7.5
    return _SQRT_2PI * _cexp((z + 0.5) * _clog(t) - t) * x


def crgamma(z):
    z = complex(z)
    if z.real < 0.5:
        return _csinpi(z) * cgamma(1.0 - z) / _PI
    return 1.0 / cgamma(z)


def _poly(a, b, z, n):
    term = complex(1.0, 0.0)
    s = complex(1.0, 0.0)
    for k in range(n):
        term = term * (a + float(k)) * z / ((b + float(k)) * (k + 1.0))
        s = s + term
    return s


def _maclaurin(a, b, z):
    term = complex(1.0, 0.0)
    s = complex(1.0, 0.0)
    small = 0
    k = 0
    while k < _MAX_TERMS:
        term = term * (a + float(k)) * z / ((b + float(k)) * (k + 1.0))
        s = s + term
        k += 1
        if _cabs(term) < 1e-16 * _cabs(s):
            small += 1
            if small == 3:
                return s
        else:
            small = 0
    return _NAN


def _taylor_step(a, b, zeta, f, fp, t):
    # local series of Kummer's equation about zeta, scaled by powers of t
    d0 = f
    d1 = fp * t
    sf = d0 + d1
    sfp = d1
    tt = t * t
    small = 0
    k = 0
    while k < 1000:
        d2 = ((a + float(k)) * d0 * tt
              - (k + 1.0) * (b + float(k) - zeta) * d1 * t) / (zeta * ((k + 2.0) * (k + 1.0)))
        sf = sf + d2
        sfp = sfp + (k + 2.0) * d2
        d0 = d1
        d1 = d2
        k += 1
        if (k + 2.0) * _cabs(d2) < 1e-17 * (_cabs(sf) + _cabs(sfp)):
            small += 1
            if small == 3:
                return sf, sfp / t
        else:
            small = 0
    return _NAN, _NAN


def _continue(a, b, z):
    r = _cabs(z)
    u = z / r
    pos = _R0
    zeta = u * pos
    f = _maclaurin(a, b, zeta)
    fp = _maclaurin(a + 1.0, b + 1.0, zeta) * a / b
    while pos < r:
        h = 0.5 * pos
        if h > _HMAX:
            h = _HMAX
        if h > r - pos:
            h = r - pos
        f, fp = _taylor_step(a, b, zeta, f, fp, u * h)
        pos = pos + h
        zeta = u * pos
    return f


def _hyp_right(a, b, z):
    if _cabs(z) <= _R0:
        return _maclaurin(a, b, z)
    return _continue(a, b, z)


def chyp1f1(a, b, z):
    a = complex(a)
    b = complex(b)
    z = complex(z)
    if z.real == 0.0 and z.imag == 0.0:
        return complex(1.0, 0.0)
    n = _nonpos_int(a)
    if n >= 0:
        return _poly(a, b, z, n)
    m = _nonpos_int(b - a)
    if m >= 0:
        return _cexp(z) * _poly(b - a, b, -z, m)
    if z.real < 0.0:
        return _cexp(z) * _hyp_right(b - a, b, -z)
    return _hyp_right(a, b, z)


def claguerre(n, alpha, z):
    alpha = complex(alpha)
    z = complex(z)
    if n == 0:
        return complex(1.0, 0.0)
    l0 = complex(1.0, 0.0)
    l1 = 1.0 + alpha - z
    for k in range(1, n):
        l2 = ((2.0 * k + 1.0 + alpha - z) * l1 - (k + alpha) * l0) / (k + 1.0)
        l0 = l1
        l1 = l2
    return l1


def chyp2f1(a, b, c, x, max_terms):
    """Gauss series; returns (value, converged)."""
    a = complex(a)
    b = complex(b)
    c = complex(c)
    x = complex(x)
    term = complex(1.0, 0.0)
    s = complex(1.0, 0.0)
    small = 0
    for k in range(max_terms):
        term = term * (a + float(k)) * (b + float(k)) * x / ((c + float(k)) * (k + 1.0))
        s = s + term
        if term.real == 0.0 and term.imag == 0.0:
            return s, True
        if _cabs(term) < 1e-16 * _cabs(s):
            small += 1
            if small == 3:
                return s, True
        else:
            small = 0
    return s, False


def gamma_array(z):
    z = np.ascontiguousarray(z, dtype=np.complex128).ravel()
    return np.array([cgamma(v) for v in z.tolist()], dtype=np.complex128)


def rgamma_array(z):
    z = np.ascontiguousarray(z, dtype=np.complex128).ravel()
    return np.array([crgamma(v) for v in z.tolist()], dtype=np.complex128)


def hyp1f1_array(a, b, z):
    z = np.ascontiguousarray(z, dtype=np.complex128).ravel()
    a = complex(a)
    b = complex(b)
    return np.array([chyp1f1(a, b, v) for v in z.tolist()], dtype=np.complex128)


def laguerre_array(n, alpha, z):
    z = np.ascontiguousarray(z, dtype=np.complex128).ravel()
    alpha = complex(alpha)
    return np.array([claguerre(n, alpha, v) for v in z.tolist()], dtype=np.complex128)

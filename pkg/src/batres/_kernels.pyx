# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled special-function kernels.

Line-by-line mirror of :mod:`batres._kernels_py`.  Complex division is done
by :func:`cdiv`, a copy of CPython's complex quotient, instead of the C
compiler's ``/`` so that both backends agree bit for bit.  The extension is
built with ``-ffp-contract=off`` to keep the compiler from fusing multiply
and add.
"""

import numpy as np
cimport numpy as cnp

from libc.math cimport atan2, cos, cosh, exp, fabs, floor, fmod, log, sin, sinh, sqrt, NAN

cnp.import_array()

ctypedef double complex dc

BACKEND = "cython"

cdef double _PI = 3.141592653589793
cdef double _SQRT_2PI = 2.5066282746310002
cdef double[9] _LANCZOS
_LANCZOS[:] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
]
cdef double _R0 = 2.0
cdef double _HMAX = 2.0
cdef long _MAX_TERMS = 100000


cdef inline dc mk(double r, double i) noexcept nogil:
    cdef dc z
    z.real = r
    z.imag = i
    return z


cdef inline dc cdiv(dc a, dc b) noexcept nogil:
    cdef double ar = a.real, ai = a.imag, br = b.real, bi = b.imag
    cdef double abs_br = fabs(br), abs_bi = fabs(bi), ratio, denom
    if abs_br >= abs_bi:
        if abs_br == 0.0:
            return mk(NAN, NAN)
        ratio = bi / br
        denom = br + bi * ratio
        return mk((ar + ai * ratio) / denom, (ai - ar * ratio) / denom)
    elif abs_bi >= abs_br:
        ratio = br / bi
        denom = br * ratio + bi
        return mk((ar * ratio + ai) / denom, (ai * ratio - ar) / denom)
    return mk(NAN, NAN)


cdef inline dc cdiv_r(dc a, double b) noexcept nogil:
    return cdiv(a, mk(b, 0.0))


cdef inline double cabs_(dc z) noexcept nogil:
    return sqrt(z.real * z.real + z.imag * z.imag)


cdef inline dc cexp_(dc z) noexcept nogil:
    cdef double e = exp(z.real)
    return mk(e * cos(z.imag), e * sin(z.imag))


cdef inline dc clog_(dc z) noexcept nogil:
    return mk(log(cabs_(z)), atan2(z.imag, z.real))


cdef inline dc csinpi(dc z) noexcept nogil:
    cdef double r = floor(z.real + 0.5)
    cdef double x = _PI * (z.real - r)
    cdef double y = _PI * z.imag
    cdef dc s = mk(sin(x) * cosh(y), cos(x) * sinh(y))
    if fmod(r, 2.0) != 0.0:
        return -s
    return s


cdef inline long nonpos_int(dc a) noexcept nogil:
    if a.imag != 0.0 or a.real > 0.0:
        return -1
    if a.real != floor(a.real):
        return -1
    return <long>(-a.real)


cdef dc gamma_c(dc z) noexcept nogil:
    cdef dc x, t
    cdef int i
    if z.real < 0.5:
        return cdiv(mk(_PI, 0.0), csinpi(z) * gamma_c(1.0 - z))
    z = z - 1.0
    x = mk(_LANCZOS[0], 0.0)
    for i in range(1, 9):
        x = x + cdiv(mk(_LANCZOS[i], 0.0), z + <double>i)
    t = z + 7.5
    return _SQRT_2PI * cexp_((z + 0.5) * clog_(t) - t) * x


cdef dc rgamma_c(dc z) noexcept nogil:
    if z.real < 0.5:
        return cdiv_r(csinpi(z) * gamma_c(1.0 - z), _PI)
    return cdiv(mk(1.0, 0.0), gamma_c(z))


cdef dc poly_c(dc a, dc b, dc z, long n) noexcept nogil:
    cdef dc term = mk(1.0, 0.0)
    cdef dc s = mk(1.0, 0.0)
    cdef long k
    for k in range(n):
        term = cdiv(term * (a + <double>k) * z, (b + <double>k) * (k + 1.0))
        s = s + term
    return s


cdef dc maclaurin_c(dc a, dc b, dc z) noexcept nogil:
    cdef dc term = mk(1.0, 0.0)
    cdef dc s = mk(1.0, 0.0)
    cdef int small = 0
    cdef long k = 0
    while k < _MAX_TERMS:
        term = cdiv(term * (a + <double>k) * z, (b + <double>k) * (k + 1.0))
        s = s + term
        k += 1
        if cabs_(term) < 1e-16 * cabs_(s):
            small += 1
            if small == 3:
                return s
        else:
            small = 0
    return mk(NAN, NAN)


cdef int taylor_step_c(dc a, dc b, dc zeta, dc* f, dc* fp, dc t) noexcept nogil:
    cdef dc d0 = f[0]
    cdef dc d1 = fp[0] * t
    cdef dc sf = d0 + d1
    cdef dc sfp = d1
    cdef dc tt = t * t
    cdef dc d2
    cdef int small = 0
    cdef long k = 0
    while k < 1000:
        d2 = cdiv((a + <double>k) * d0 * tt
                  - (k + 1.0) * (b + <double>k - zeta) * d1 * t,
                  zeta * ((k + 2.0) * (k + 1.0)))
        sf = sf + d2
        sfp = sfp + (k + 2.0) * d2
        d0 = d1
        d1 = d2
        k += 1
        if (k + 2.0) * cabs_(d2) < 1e-17 * (cabs_(sf) + cabs_(sfp)):
            small += 1
            if small == 3:
                f[0] = sf
                fp[0] = cdiv(sfp, t)
                return 0
        else:
            small = 0
    f[0] = mk(NAN, NAN)
    fp[0] = mk(NAN, NAN)
    return 1


cdef dc continue_c(dc a, dc b, dc z) noexcept nogil:
    cdef double r = cabs_(z)
    cdef dc u = cdiv_r(z, r)
    cdef double pos = _R0
    cdef double h
    cdef dc zeta = u * pos
    cdef dc f = maclaurin_c(a, b, zeta)
    cdef dc fp = cdiv(maclaurin_c(a + 1.0, b + 1.0, zeta) * a, b)
    while pos < r:
        h = 0.5 * pos
        if h > _HMAX:
            h = _HMAX
        if h > r - pos:
            h = r - pos
        taylor_step_c(a, b, zeta, &f, &fp, u * h)
        pos = pos + h
        zeta = u * pos
    return f


cdef inline dc hyp_right_c(dc a, dc b, dc z) noexcept nogil:
    if cabs_(z) <= _R0:
        return maclaurin_c(a, b, z)
    return continue_c(a, b, z)


cdef dc hyp1f1_c(dc a, dc b, dc z) noexcept nogil:
    cdef long n, m
    if z.real == 0.0 and z.imag == 0.0:
        return mk(1.0, 0.0)
    n = nonpos_int(a)
    if n >= 0:
        return poly_c(a, b, z, n)
    m = nonpos_int(b - a)
    if m >= 0:
        return cexp_(z) * poly_c(b - a, b, -z, m)
    if z.real < 0.0:
        return cexp_(z) * hyp_right_c(b - a, b, -z)
    return hyp_right_c(a, b, z)


cdef dc laguerre_c(long n, dc alpha, dc z) noexcept nogil:
    cdef dc l0, l1, l2
    cdef long k
    if n == 0:
        return mk(1.0, 0.0)
    l0 = mk(1.0, 0.0)
    l1 = 1.0 + alpha - z
    for k in range(1, n):
        l2 = cdiv_r((2.0 * k + 1.0 + alpha - z) * l1 - (k + alpha) * l0, k + 1.0)
        l0 = l1
        l1 = l2
    return l1


def cgamma(z):
    return complex(gamma_c(complex(z)))


def crgamma(z):
    return complex(rgamma_c(complex(z)))


def chyp1f1(a, b, z):
    return complex(hyp1f1_c(complex(a), complex(b), complex(z)))


def claguerre(long n, alpha, z):
    return complex(laguerre_c(n, complex(alpha), complex(z)))


def chyp2f1(a, b, c, x, long max_terms):
    """Gauss series; returns (value, converged)."""
    cdef dc aa = complex(a), bb = complex(b), cc = complex(c), xx = complex(x)
    cdef dc term = mk(1.0, 0.0)
    cdef dc s = mk(1.0, 0.0)
    cdef int small = 0
    cdef long k
    with nogil:
        for k in range(max_terms):
            term = cdiv(term * (aa + <double>k) * (bb + <double>k) * xx,
                        (cc + <double>k) * (k + 1.0))
            s = s + term
            if term.real == 0.0 and term.imag == 0.0:
                small = 3
                break
            if cabs_(term) < 1e-16 * cabs_(s):
                small += 1
                if small == 3:
                    break
            else:
                small = 0
    return complex(s), small == 3


def gamma_array(z):
    cdef dc[::1] zz = np.ascontiguousarray(z, dtype=np.complex128).ravel()
    cdef Py_ssize_t i, n = zz.shape[0]
    out = np.empty(n, dtype=np.complex128)
    cdef dc[::1] o = out
    with nogil:
        for i in range(n):
            o[i] = gamma_c(zz[i])
    return out


def rgamma_array(z):
    cdef dc[::1] zz = np.ascontiguousarray(z, dtype=np.complex128).ravel()
    cdef Py_ssize_t i, n = zz.shape[0]
    out = np.empty(n, dtype=np.complex128)
    cdef dc[::1] o = out
    with nogil:
        for i in range(n):
            o[i] = rgamma_c(zz[i])
    return out


def hyp1f1_array(a, b, z):
    cdef dc[::1] zz = np.ascontiguousarray(z, dtype=np.complex128).ravel()
    cdef dc aa = complex(a), bb = complex(b)
    cdef Py_ssize_t i, n = zz.shape[0]
    out = np.empty(n, dtype=np.complex128)
    cdef dc[::1] o = out
    with nogil:
        for i in range(n):
            o[i] = hyp1f1_c(aa, bb, zz[i])
    return out


def laguerre_array(long deg, alpha, z):
    cdef dc[::1] zz = np.ascontiguousarray(z, dtype=np.complex128).ravel()
    cdef dc al = complex(alpha)
    cdef Py_ssize_t i, n = zz.shape[0]
    out = np.empty(n, dtype=np.complex128)
    cdef dc[::1] o = out
    with nogil:
        for i in range(n):
            o[i] = laguerre_c(deg, al, zz[i])
    return out

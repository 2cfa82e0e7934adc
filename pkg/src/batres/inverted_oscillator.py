"""Resonance states of the 2D inverted oscillator by complex scaling.

The dilation ``V_lam f(rho) = exp(-i lam) f(exp(-i lam) rho)`` maps the
oscillator with frequency ``gamma`` onto the barrier
``-(hbar^2/2) Laplacian - gamma^2 rho^2 / 2`` when ``lam = -+pi/4``:

    u+_nl(rho) = e^{+i pi/4} R_nl(e^{+i pi/4} rho),   eigenvalue +i hbar gamma (|l| + 2n + 1)
    u-_nl(rho) = e^{-i pi/4} R_nl(e^{-i pi/4} rho),   eigenvalue -i hbar gamma (|l| + 2n + 1)

Principal branches ``sqrt(+-i) = exp(+-i pi/4)`` are used throughout.
Neither family is square integrable, but they are bi-orthonormal:
``int conj~u+_n u-_m rho drho = delta_nm``, where ``conj~`` is the
analytic conjugation of :mod:`batres.oscillator_basis`.  Along the ray
``rho = e^{+i pi/4} s`` this integral is exactly the oscillator overlap
``int R_n(s) R_m(s) s ds``.
"""

import math
from dataclasses import dataclass

import numpy as np

from .oscillator_basis import QuantumNumbers, RadialFunction, ho_radial, laguerre_overlap
from .quadrature import RayContour, default_eta_ladder, gauss_laguerre_rule, integrate_ray

PLUS = +1
MINUS = -1
BIORTHO_THETA = math.pi / 4


def _sign(sign):
    if sign in (1, "+", "plus"):
        return PLUS
    if sign in (-1, "-", "minus"):
        return MINUS
    raise ValueError(f"sign must be plus or minus, got {sign!r}")


def scale_function(f, lam):
    """Complex dilation ``g(rho) = exp(-i lam) f(exp(-i lam) rho)``."""
    lam = float(lam)
    phase = complex(math.cos(lam), -math.sin(lam))
    ev = f.evaluate
    return RadialFunction(
        evaluate=lambda r: phase * ev(phase * r),
        family=f.family if lam == 0 else "generic",
        l=f.l,
        labels=dict(f.labels, scaling=lam + f.labels.get("scaling", 0.0)),
        params=f.params,
        omega_ho=f.omega_ho,
    )


@dataclass(frozen=True, eq=False)
class ResonanceState:
    """A resonance eigenfunction ``u+-_nl`` with its complex eigenvalue."""

    qn: QuantumNumbers
    sign: int
    radial: RadialFunction
    eigenvalue: complex


def resonance_eigenvalue(qn, sign, params):
    """``sign * i * hbar * gamma * (|l| + 2n + 1)``."""
    s = _sign(sign)
    return complex(0.0, s * params.hbar * params.gamma * (abs(qn.l) + 2 * qn.n + 1))


def resonance_state(qn, sign, params):
    """Construct ``u+_nl`` (sign plus) or ``u-_nl`` (sign minus).

    Examples
    --------
    >>> from batres.params_transforms import PhysicalParams
    >>> st = resonance_state(QuantumNumbers(0, 0), "+", PhysicalParams(1.0, 1.0))
    >>> st.eigenvalue
    1j
    """
    s = _sign(sign)
    ho, _ = ho_radial(qn, params.gamma, params.hbar)
    scaled = scale_function(ho, -s * math.pi / 4)
    radial = RadialFunction(
        evaluate=scaled.evaluate,
        family="iho_plus" if s == PLUS else "iho_minus",
        l=qn.l,
        labels={"n": qn.n, "l": qn.l, "sign": s},
        params=params,
    )
    return ResonanceState(qn, s, radial, resonance_eigenvalue(qn, s, params))


def iho_potential(params):
    """Barrier potential ``-gamma^2 rho^2 / 2`` of the inverted oscillator."""
    g2 = params.gamma ** 2
    return lambda rho: -0.5 * g2 * rho * rho


def biortho_pairing(f, g, params, rule=None):
    """``int conj~f g rho drho`` on the ray ``theta = pi/4`` by Gauss-Laguerre.

    Suited to ``f = u+`` and ``g = u-`` (both decay along that ray).
    """
    rule = rule or gauss_laguerre_rule(200, 0.0)
    return laguerre_overlap(f, g, rule, params.gamma / params.hbar, BIORTHO_THETA)


def biortho_gram(n_max, l, params, method="rotated", n_points=200, tol=1e-12):
    """Bi-orthogonality matrix ``G[n][m] = int conj~u+_{nl} u-_{ml} rho drho``.

    Parameters
    ----------
    n_max : int
    l : int
    params : PhysicalParams
    method : {"rotated", "regularized"}
        ``"rotated"`` integrates on the ray ``rho = e^{i pi/4} s`` with a
        Gauss-Laguerre rule.  ``"regularized"`` stays on the real axis,
        multiplies by ``exp(-eta rho^2)`` for a ladder of ``eta`` values
        and extrapolates to ``eta -> 0+`` in the variable
        ``1/(eta - i gamma/hbar)``, in which the regulated integral is a
        polynomial.
    n_points : int
        Gauss-Laguerre points of the rotated route.
    tol : float
        Absolute tolerance of the regularized route's quadrature.

    Returns
    -------
    ndarray, shape (n_max + 1, n_max + 1)
    """
    plus = [resonance_state(QuantumNumbers(n, l), PLUS, params).radial for n in range(n_max + 1)]
    minus = [resonance_state(QuantumNumbers(n, l), MINUS, params).radial for n in range(n_max + 1)]
    g = np.empty((n_max + 1, n_max + 1), dtype=np.complex128)
    if method == "rotated":
        rule = gauss_laguerre_rule(n_points, 0.0)
        for i, fp in enumerate(plus):
            for j, fm in enumerate(minus):
                g[i, j] = biortho_pairing(fp, fm, params, rule)
        return g
    if method != "regularized":
        raise ValueError(f"unknown method {method!r}")
    beta = params.gamma / params.hbar
    spec = RayContour(theta=0.0, eta_ladder=default_eta_ladder(beta),
                      extrapolation_pole=1j * beta, panel=0.25 / math.sqrt(beta))
    for i, fp in enumerate(plus):
        for j, fm in enumerate(minus):
            fpe, fme = fp.evaluate, fm.evaluate

            def integrand(rho, fpe=fpe, fme=fme):
                return np.conj(fpe(np.conj(rho))) * fme(rho) * rho

            g[i, j] = integrate_ray(integrand, spec, tol=tol)
    return g


def truncated_norm(state, R, tol=1e-10):
    """``int_0^R |u(rho)|^2 rho drho`` on the real axis."""
    ev = state.radial.evaluate
    return integrate_ray(lambda r: np.abs(ev(r)) ** 2 * r, RayContour(rmax=float(R)), tol=tol).real

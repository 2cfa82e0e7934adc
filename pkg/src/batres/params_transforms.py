"""Physical parameters and the classical canonical transformations.

Four phase-space coordinate systems describe the damped-oscillator pair:

``bateman``     (x, y, p_x, p_y), the original doubled-oscillator variables
``mode``        (x1, x2, p1, p2), rotating-mode variables
``uv``          (u1, u2, v1, v2), the inverted-oscillator variables
``hyperbolic``  (y1, y2, w1, w2), light-cone combinations of x and y

Every map is linear, so each is stored as a 4x4 matrix acting on the
coordinate vector ordered as (q1, q2, p1, p2).  The symplectic form in
that ordering is ``[[0, I], [-I, 0]]``.
"""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import NonPositive, OverdampedRegime, UnsupportedPath


class Representation(str, Enum):
    """Closed set of phase-space representation tags."""

    BATEMAN = "bateman"
    MODE = "mode"
    UV = "uv"
    HYPERBOLIC = "hyperbolic"


COORD_NAMES = {
    Representation.BATEMAN: ("x", "y", "p_x", "p_y"),
    Representation.MODE: ("x1", "x2", "p1", "p2"),
    Representation.UV: ("u1", "u2", "v1", "v2"),
    Representation.HYPERBOLIC: ("y1", "y2", "w1", "w2"),
}

SYMPLECTIC_FORM = np.block([[np.zeros((2, 2)), np.eye(2)], [-np.eye(2), np.zeros((2, 2))]])


@dataclass(frozen=True)
class PhysicalParams:
    """Damping ``gamma``, rotation frequency ``omega`` and ``hbar``.

    Use :func:`make_params` (from kappa) or :meth:`from_omega`; both
    enforce positivity and the underdamped condition.
    """

    gamma: float
    omega: float
    hbar: float = 1.0

    def __post_init__(self):
        for name in ("gamma", "omega", "hbar"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise NonPositive(f"{name} must be a finite positive number, got {v}")

    @property
    def kappa(self):
        """Spring constant ``omega**2 + gamma**2``."""
        return self.omega ** 2 + self.gamma ** 2

    @classmethod
    def from_omega(cls, gamma, omega, hbar=1.0):
        """Build parameters directly from ``omega``."""
        return cls(float(gamma), float(omega), float(hbar))


def make_params(gamma, kappa, hbar=1.0):
    """Parameters from damping ``gamma`` and spring constant ``kappa``.

    Raises
    ------
    NonPositive
        If ``gamma <= 0`` or ``hbar <= 0``.
    OverdampedRegime
        If ``kappa <= gamma**2``.

    Examples
    --------
    >>> make_params(0.5, 4.25).omega
    2.0
    """
    gamma = float(gamma)
    kappa = float(kappa)
    hbar = float(hbar)
    if not gamma > 0:
        raise NonPositive(f"gamma must be positive, got {gamma}")
    if not hbar > 0:
        raise NonPositive(f"hbar must be positive, got {hbar}")
    if not kappa > gamma * gamma:
        raise OverdampedRegime(f"kappa = {kappa} <= gamma**2 = {gamma * gamma}: not underdamped")
    return PhysicalParams(gamma, math.sqrt(kappa - gamma * gamma), hbar)


@dataclass(frozen=True)
class PhasePoint:
    """Four phase-space coordinates tagged by their representation."""

    rep: Representation
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "rep", Representation(self.rep))
        c = tuple(float(v) for v in self.coords)
        if len(c) != 4:
            raise ValueError("a phase point has exactly four coordinates")
        object.__setattr__(self, "coords", c)

    def as_array(self):
        return np.array(self.coords)

    def named(self):
        """Coordinates as a name -> value mapping."""
        return dict(zip(COORD_NAMES[self.rep], self.coords))


def _bateman_to_mode(params):
    # x1 = p_y/sqrt(w), x2 = -sqrt(w) x, p1 = -sqrt(w) y, p2 = -p_x/sqrt(w)
    r = math.sqrt(params.omega)
    m = np.zeros((4, 4))
    m[0, 3] = 1.0 / r
    m[1, 0] = -r
    m[2, 1] = -r
    m[3, 2] = -1.0 / r
    return m


def _mode_to_uv(params):
    # x = (g u - v)/sqrt(2g), p = (g u + v)/sqrt(2g), applied to each mode
    g = params.gamma
    inv = np.zeros((4, 4))
    s = math.sqrt(2.0 * g)
    for i in range(2):
        inv[i, i] = g / s
        inv[i, 2 + i] = -1.0 / s
        inv[2 + i, i] = g / s
        inv[2 + i, 2 + i] = 1.0 / s
    return np.linalg.inv(inv)


def _bateman_to_hyperbolic(params):
    c = 1.0 / math.sqrt(2.0)
    m = np.zeros((4, 4))
    m[0, 0] = m[0, 1] = c
    m[1, 0] = c
    m[1, 1] = -c
    m[2, 2] = m[2, 3] = c
    m[3, 2] = c
    m[3, 3] = -c
    return m


def jacobian(source, target, params):
    """Matrix of the linear map from ``source`` to ``target`` coordinates.

    Raises
    ------
    UnsupportedPath
        If either tag is not a known representation.
    """
    try:
        source = Representation(source)
        target = Representation(target)
    except ValueError as exc:
        raise UnsupportedPath(str(exc)) from None
    to_bateman = {
        Representation.BATEMAN: np.eye(4),
        Representation.MODE: np.linalg.inv(_bateman_to_mode(params)),
        Representation.UV: np.linalg.inv(_mode_to_uv(params) @ _bateman_to_mode(params)),
        Representation.HYPERBOLIC: np.linalg.inv(_bateman_to_hyperbolic(params)),
    }
    from_bateman = {
        Representation.BATEMAN: np.eye(4),
        Representation.MODE: _bateman_to_mode(params),
        Representation.UV: _mode_to_uv(params) @ _bateman_to_mode(params),
        Representation.HYPERBOLIC: _bateman_to_hyperbolic(params),
    }
    if source == target:
        return np.eye(4)
    return from_bateman[target] @ to_bateman[source]


def transform(point, target, params):
    """Map ``point`` into the ``target`` representation.

    Examples
    --------
    >>> p = make_params(0.5, 4.25)
    >>> transform(PhasePoint("bateman", (1, 0, 0, 0)), "mode", p).coords[1]
    -1.4142135623730951
    """
    try:
        target = Representation(target)
    except ValueError:
        raise UnsupportedPath(f"no transform chain reaches {target!r}") from None
    if point.rep == target:
        return point
    m = jacobian(point.rep, target, params)
    return PhasePoint(target, tuple(m @ point.as_array()))


def classical_hamiltonian(point, params):
    """Classical Hamiltonian in the formula native to ``point.rep``."""
    g = params.gamma
    w = params.omega
    a, b, c, d = point.coords
    rep = point.rep
    if rep == Representation.BATEMAN:
        x, y, px, py = a, b, c, d
        return px * py - g * (x * px - y * py) + w * w * x * y
    if rep == Representation.MODE:
        x1, x2, p1, p2 = a, b, c, d
        return w * (p1 * x2 - p2 * x1) - g * (x1 * p1 + x2 * p2)
    if rep == Representation.UV:
        u1, u2, v1, v2 = a, b, c, d
        return w * (v1 * u2 - v2 * u1) + 0.5 * (v1 * v1 + v2 * v2 - g * g * (u1 * u1 + u2 * u2))
    y1, y2, w1, w2 = a, b, c, d
    return 0.5 * (w1 * w1 - w2 * w2) - g * (y1 * w2 + y2 * w1) + 0.5 * w * w * (y1 * y1 - y2 * y2)


def symplectic_defect(matrix):
    """Max-norm of ``J^T Omega J - Omega`` for a 4x4 Jacobian ``J``."""
    m = np.asarray(matrix, dtype=float)
    return float(np.max(np.abs(m.T @ SYMPLECTIC_FORM @ m - SYMPLECTIC_FORM)))

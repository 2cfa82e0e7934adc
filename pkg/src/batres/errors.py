"""Exception hierarchy shared by every batres module."""


class BatresError(Exception):
    """Base class for all library errors."""


class OverdampedRegime(BatresError, ValueError):
    """Raised when kappa <= gamma**2 (only the underdamped regime is supported)."""


class NonPositive(BatresError, ValueError):
    """Raised when a parameter that must be strictly positive is not."""


class UnsupportedPath(BatresError, ValueError):
    """Raised when no transform chain connects two representation tags."""


class PoleAtNonpositiveInteger(BatresError, ValueError):
    """Raised when the Gamma function is evaluated exactly at one of its poles.

    Attributes
    ----------
    index : int
        The nonpositive integer at which the pole sits.
    """

    def __init__(self, index):
        self.index = int(index)
        super().__init__(f"Gamma has a pole at z = {self.index}")


class ParameterPole(BatresError, ValueError):
    """Raised when the lower parameter of 1F1 is a nonpositive integer."""


class DomainError(BatresError, ValueError):
    """Raised for arguments outside the domain of a special function."""


class DivergentAtUnitArgument(BatresError, ArithmeticError):
    """Raised when 2F1 at unit argument diverges (Re(c - a - b) <= 0)."""


class SeriesDomain(BatresError, ValueError):
    """Raised when a hypergeometric series is requested outside its disc."""


class ConvergenceFailure(BatresError, ArithmeticError):
    """Raised when an iterative kernel fails to converge."""


class NonConvergent(BatresError, ArithmeticError):
    """Raised when an integral or expansion does not settle below tolerance."""


class PoleAtResonance(BatresError, ArithmeticError):
    """Raised when a continuum label sits on a resonance pole.

    Attributes
    ----------
    n, l : int
        Labels of the pole epsilon_nl = i*gamma*hbar*(|l| + 2n + 1).
    """

    def __init__(self, n, l):
        self.n = int(n)
        self.l = int(l)
        super().__init__(f"normalization pole at resonance (n={self.n}, l={self.l})")


class NearPole(BatresError, ArithmeticError):
    """Raised when a resolvent is evaluated within 1e-9 of a pole."""


class SemigroupDomain(BatresError, ValueError):
    """Raised when a semigroup is applied for a time of the forbidden sign."""


class NegativeAngularIndex(BatresError, ValueError):
    """Raised for l < 0 in the normalizable hyperbolic family."""

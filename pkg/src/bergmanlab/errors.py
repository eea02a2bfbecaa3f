"""Exception types shared across the package."""


class BergmanLabError(Exception):
    """Base class for all package errors."""


class BadWeight(BergmanLabError):
    """Weight exponent outside the integrable range (needs alpha > -1)."""


class InvalidCount(BergmanLabError):
    """A sample/node count was not a positive integer."""


class GradientVanishes(BergmanLabError):
    """Defining-function gradient too small at a claimed boundary point."""


class NotOnBoundary(BergmanLabError):
    """Point does not lie on the zero level set within tolerance."""


class DivergenceSuspected(BergmanLabError):
    """Radial integral failed to stabilize; integrand looks non-integrable."""


class InvalidHypothesis(BergmanLabError):
    """Parameters violate the hypotheses of the estimate being checked."""


class TagMismatch(BergmanLabError):
    """A holomorphic-tagged function failed the analyticity spot check."""


class UnsupportedDomain(BergmanLabError):
    """Operation not available on this domain model."""

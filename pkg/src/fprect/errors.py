"""Exception hierarchy for the toolkit.

Every error raised by fprect derives from FprectError so callers (and the
CLI) can distinguish toolkit failures from programming errors.
"""


class FprectError(Exception):
    """Base class for all fprect errors."""


# --- space construction and axiom checking ---------------------------------

class SpaceError(FprectError):
    """Base class for errors involving space construction or queries."""


class DuplicateLabel(SpaceError):
    pass


class NegativeDistance(SpaceError):
    pass


class AsymmetricEntry(SpaceError):
    """Two conflicting distance values supplied for the same pair."""


class InvalidEntry(SpaceError):
    """Entry violating the separation axioms (self-pair nonzero, or zero
    distance between distinct points)."""


class UnresolvablePair(SpaceError):
    """A pair of points has no table entry and no fallback formula."""


class UnknownPoint(SpaceError):
    pass


class NoFiniteCoefficient(SpaceError):
    """A quadruple has zero path length but positive separation."""


class TooFewPoints(SpaceError):
    pass


class InvalidRange(SpaceError):
    pass


class InvalidParameter(FprectError):
    """Out-of-domain scalar parameter (e.g. nonpositive coefficient)."""


# --- function catalog -------------------------------------------------------

class FunctionError(FprectError):
    """Base class for function-catalog errors."""


class ArityMismatch(FunctionError):
    pass


class DomainError(FunctionError):
    """Formula evaluated outside its domain (log of nonpositive, etc.)."""


class InvalidFunctionParams(FunctionError):
    """Catalog parameters outside their documented constraints."""


# --- contraction instances ---------------------------------------------------

class MapError(FprectError):
    pass


class NotClosed(MapError):
    """Self-map image is not a point of the space."""


class VariantMismatch(FprectError):
    """Operation requires a different M-variant than the instance carries."""


class InvalidWeights(FprectError):
    """Convex-combination weights must be nonnegative with positive sum."""


class ParameterOutOfRange(FprectError):
    """Preset parameter outside the admissible open interval."""


# --- configuration ingestion -------------------------------------------------

class ParseError(FprectError):
    """Malformed configuration file; message carries field diagnostics."""

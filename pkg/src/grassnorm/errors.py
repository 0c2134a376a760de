"""Exception types raised by the geometric operations."""


class GeometryError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(GeometryError):
    """Operands live in incompatible ambient spaces or have wrong shapes."""


class DependentPoints(GeometryError):
    """Points intended to span a subspace are linearly dependent."""


class InvalidPair(GeometryError):
    """A subspace and its complement do not span the ambient space."""


class SingularFrame(GeometryError):
    """A frame matrix is not invertible at the working tolerance."""


class NotInGeneralPosition(GeometryError):
    """Subspaces meet in a way that leaves the cross-ratio undefined."""


class NonPositiveTrace(GeometryError):
    """Cross-ratio trace is outside the domain of the log distance."""


class MapUndefined(GeometryError):
    """A normalizing map failed to produce a complement at some point."""


class FramingFailure(GeometryError):
    """A displaced complement cannot be expressed in the reference frame."""


class TangentSubspace(GeometryError):
    """A subspace touches the quadric, so its polar is not a complement."""


class NotPolarAdapted(GeometryError):
    """A frame does not split orthogonally with respect to the quadric."""


class DegenerateBlock(GeometryError):
    """A restricted metric block is singular."""


class NotComplementary(GeometryError):
    """A subspace meets the chart center, so the chart is undefined."""

"""Exception hierarchy.

Every error raised for bad mathematical input derives from
:class:`DomainError`, so callers (the CLI in particular) can separate
domain failures from malformed documents.
"""


class DomainError(ValueError):
    """Input outside the domain of an operation."""


class DegreeMismatchError(DomainError):
    """Two objects carry different degree bounds ``n``."""


class ShapeError(DomainError):
    """An element does not have the structural shape an operation needs."""


class RegionMismatchError(DomainError):
    """Regions or partitions are incompatible (overlap, mismatch, not nested)."""


class UnsupportedStateError(DomainError):
    """State evaluation requested for a degree/density combination with no formula."""

"""
Exception types raised by stabverify.

Everything derives from the built-in ValueError / RuntimeError so callers
that only care about "bad input" versus "failed computation" can catch
those directly.
"""

from typing import Any, List


class PartitionError(ValueError):
    """Malformed partition, size mismatch or inadmissible orbit label."""


class NotNilpotentError(ValueError):
    """Matrix handed to a Jordan-type extraction is not square nilpotent."""


class RepresentationError(ValueError):
    """Matrix does not lie in the Lie algebra required by a construction."""


class InternalConsistencyError(RuntimeError):
    """A construction produced a state that should be impossible."""


class CatalogError(RuntimeError):
    """Catalog directory, file or record could not be loaded."""


class ScanCapExceeded(RuntimeError):
    """
    The collapse scan visited more nodes than allowed.

    Attributes:
        partial: strata discovered before the cap was hit
        nodes: number of nodes expanded
    """

    def __init__(self, message: str, partial: List[Any], nodes: int):
        super().__init__(message)
        self.partial = partial
        self.nodes = nodes


class FanOutExceeded(ValueError):
    """A relation would introduce roots of unity of order above the cap."""

from __future__ import (
    absolute_import,
    unicode_literals,
)

from typing import Optional

from dualeq.types import Failure


__all__ = (
    'AugmentationError',
    'ClassificationError',
    'DualEquivalenceError',
    'FillingError',
    'FixtureError',
    'GraphError',
    'InvolutionError',
    'ShapeError',
    'SizeBoundExceeded',
    'StatisticError',
    'UsageError',
)


class DualEquivalenceError(Exception):
    """
    Base class for every error raised by this package.
    """


class ShapeError(DualEquivalenceError, ValueError):
    """
    Error raised for malformed partitions, compositions, cells and shapes, or for shapes of mismatched size.
    """


class FillingError(DualEquivalenceError, ValueError):
    """
    Error raised when a filling is not a bijection onto `1..n` or breaks row or column strictness.
    """


class SizeBoundExceeded(DualEquivalenceError, ValueError):
    """
    Error raised when an enumeration is requested over more cells than the configured bound allows.
    """


class InvolutionError(DualEquivalenceError, ValueError):
    """
    Error raised for a color out of range, a map that is not an involution, or a violated involution precondition.
    """


class GraphError(DualEquivalenceError, ValueError):
    """
    Error raised when a signed colored graph is malformed.
    """


class AugmentationError(GraphError):
    """
    Error raised when an augmenting filling does not extend the base partition to a partition.
    """


class StatisticError(DualEquivalenceError, ValueError):
    """
    Error raised when a statistic that must be constant on an equivalence class is not.
    """


class FixtureError(DualEquivalenceError):
    """
    Error raised when a bundled fixture is missing or its content does not match the pinned digest.
    """


class UsageError(DualEquivalenceError):
    """
    Error raised for command line grammar and input errors.
    """


class ClassificationError(DualEquivalenceError):
    """
    Error raised when a component cannot be mapped onto a standard graph. The offending vertices and colors are
    carried in `failure`.
    """

    def __init__(self, message, failure=None):  # type: (str, Optional[Failure]) -> None
        super(ClassificationError, self).__init__(message)
        self.failure = failure

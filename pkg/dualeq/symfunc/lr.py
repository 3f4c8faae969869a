from __future__ import (
    absolute_import,
    unicode_literals,
)

import logging
from typing import Optional

from dualeq.error import ShapeError
from dualeq.involutions import (
    schur_expansion_from_DE,
    tableaux_family,
)
from dualeq.shapes import (
    Partition,
    SkewShape,
)
from dualeq.symfunc.qsym import SchurExpansion


__all__ = (
    'lr_coefficients',
    'lr_skew_shape',
)


_logger = logging.getLogger(__name__)


def lr_skew_shape(mu, nu, gap=0):  # type: (Partition, Partition, int) -> SkewShape
    """
    The skew shape holding `nu` in the bottom rows, pushed east past `mu` (plus `gap` extra columns), and `mu` in
    the rows above it. The two pieces share no row, column or adjacent diagonal.
    """
    if gap < 0:
        raise ShapeError('Gap must be nonnegative (got {})'.format(gap))
    shift = (mu.parts[0] if mu.parts else 0) + gap
    outer = tuple(part + shift for part in nu.parts) + mu.parts
    inner = (shift,) * len(nu) if shift else ()
    return SkewShape(Partition(outer), Partition(inner))


def lr_coefficients(mu, nu, gap=0, max_cells=None):
    # type: (Partition, Partition, int, Optional[int]) -> SchurExpansion
    """
    Expands `s_mu * s_nu` in Schur functions by counting dominant tableaux of the disjoint skew shape under `d_i`.
    """
    shape = lr_skew_shape(mu, nu, gap)
    expansion = schur_expansion_from_DE(tableaux_family(shape, max_cells=max_cells))
    _logger.debug('s_%s * s_%s has %d Schur terms', mu, nu, len(expansion.terms))
    return expansion

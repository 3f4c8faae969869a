from __future__ import (
    absolute_import,
    unicode_literals,
)

from dualeq.symfunc.qsym import (
    QPoly,
    QSymExpansion,
    SchurExpansion,
    evaluate_monomials,
    extract_schur,
    format_schur,
    schur_eval,
    schur_in_Q,
)


__all__ = (
    'QPoly',
    'QSymExpansion',
    'SchurExpansion',
    'evaluate_monomials',
    'extract_schur',
    'format_schur',
    'schur_eval',
    'schur_in_Q',
)

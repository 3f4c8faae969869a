from __future__ import (
    absolute_import,
    unicode_literals,
)


# Enumeration bounds
DEFAULT_MAX_CELLS = 14


# Dominance relations
DOMINANCE_EQUAL = 'EQUAL'
DOMINANCE_GREATER = 'GREATER_OR_EQUAL'
DOMINANCE_LESS = 'LESS_OR_EQUAL'
DOMINANCE_INCOMPARABLE = 'INCOMPARABLE'


# Failure codes
FAILURE_CODE_AXIOM = 'AXIOM'
FAILURE_CODE_NOT_COMMUTING = 'NOT_COMMUTING'
FAILURE_CODE_NOT_SINGLE_SCHUR = 'NOT_SINGLE_SCHUR'
FAILURE_CODE_NOT_SCHUR_POSITIVE = 'NOT_SCHUR_POSITIVE'
FAILURE_CODE_NOT_SYMMETRIC = 'NOT_SYMMETRIC'
FAILURE_CODE_NO_DOMINANT = 'NO_DOMINANT'
FAILURE_CODE_PROPAGATION = 'PROPAGATION_CONFLICT'
FAILURE_CODE_FIBER = 'FIBER'
FAILURE_CODE_COVER = 'COVER'


# Output formats
FORMAT_TEXT = 'text'
FORMAT_JSON = 'json'
FORMAT_DOT = 'dot'
OUTPUT_FORMATS = (FORMAT_TEXT, FORMAT_JSON, FORMAT_DOT)


# Process exit codes
EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2


# Environment
FIXTURES_ENVIRONMENT_VARIABLE = 'DEG_FIXTURES'

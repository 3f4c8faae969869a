from __future__ import (
    absolute_import,
    unicode_literals,
)

import logging
from typing import (
    AbstractSet,
    Dict,
    Iterator,
    List,
    Optional,
    Sequence,
    Tuple,
)

import attr
import six

from dualeq.constants import DEFAULT_MAX_CELLS
from dualeq.error import (
    FillingError,
    ShapeError,
    SizeBoundExceeded,
)
from dualeq.shapes import (
    Cell,
    Partition,
    Shape,
    SkewShape,
    TupleShape,
    components_of,
    conjugate,
    reading_positions,
)
from dualeq.utils import attr_is_instance


__all__ = (
    'SemistandardFilling',
    'Signature',
    'StandardFilling',
    'content_reading_word',
    'descent_set',
    'descent_signature',
    'enumerate_semistandard',
    'enumerate_standard',
    'format_filling',
    'format_signature',
    'parse_filling',
    'parse_signature',
    'row_reading_word',
    'signature_of_word',
    'standard_words',
    'substandard',
    'superstandard',
    'transpose',
)


_logger = logging.getLogger(__name__)


# Entries `+1` and `-1`; entry `i - 1` describes the pair `i, i + 1`
Signature = Tuple[int, ...]

# (component index, column, row)
_Key = Tuple[int, int, int]


def _keys(shape):  # type: (Shape) -> List[_Key]
    return [(index, cell.col, cell.row) for index, cell in reading_positions(shape)]


def _check_filling(shape, labels, strict_rows):  # type: (Shape, Tuple[int, ...], bool) -> None
    keys = _keys(shape)
    if len(keys) != len(labels):
        raise FillingError('Shape {} has {} cells but {} entries were given'.format(shape, len(keys), len(labels)))
    lookup = dict(zip(keys, labels))
    for (index, col, row), label in lookup.items():
        right = lookup.get((index, col + 1, row))
        if right is not None and (right < label or (strict_rows and right == label)):
            raise FillingError('Row {} of component {} does not increase at column {}'.format(row, index, col))
        above = lookup.get((index, col, row + 1))
        if above is not None and above <= label:
            raise FillingError('Column {} of component {} does not increase at row {}'.format(col, index, row))


def _check_standard(instance, _attribute, value):
    if sorted(value) != list(range(1, len(value) + 1)):
        raise FillingError('Entries {} are not a bijection onto 1..{}'.format(value, len(value)))
    _check_filling(instance.shape, value, strict_rows=True)


def _check_semistandard(instance, _attribute, value):
    if any(not isinstance(v, six.integer_types) or v < 1 for v in value):
        raise FillingError('Entries {} must be positive integers'.format(value))
    _check_filling(instance.shape, value, strict_rows=False)


def _as_tuple(value):
    return tuple(value)


@attr.s(frozen=True)
class StandardFilling(object):
    """
    A bijective filling of a shape or tuple of shapes with `1..n`. `labels` lists the entries in content reading
    order, so it is also the content reading word.
    """
    shape = attr.ib(validator=attr_is_instance((SkewShape, TupleShape)))  # type: Shape
    labels = attr.ib(converter=_as_tuple, validator=_check_standard)  # type: Tuple[int, ...]

    @property
    def size(self):  # type: () -> int
        return len(self.labels)

    def entries(self):  # type: () -> Dict[Tuple[int, Cell], int]
        return dict(zip(reading_positions(self.shape), self.labels))

    def entry(self, cell, index=0):  # type: (Cell, int) -> int
        return self.entries()[(index, cell)]

    def __str__(self):
        return format_filling(self)


@attr.s(frozen=True)
class SemistandardFilling(object):
    """
    A filling with positive integers, weakly increasing along rows and strictly increasing up columns.
    """
    shape = attr.ib(validator=attr_is_instance((SkewShape, TupleShape)))  # type: Shape
    labels = attr.ib(converter=_as_tuple, validator=_check_semistandard)  # type: Tuple[int, ...]

    def weight(self, m):  # type: (int) -> Tuple[int, ...]
        counts = [0] * m
        for label in self.labels:
            counts[label - 1] += 1
        return tuple(counts)

    def __str__(self):
        return format_filling(self)


def signature_of_word(word):  # type: (Sequence[int]) -> Signature
    """`+1` at `i` exactly when `i` appears to the left of `i + 1`."""
    where = [0] * (len(word) + 1)
    for position, letter in enumerate(word):
        where[letter - 1] = position
    return tuple(1 if where[i] < where[i + 1] else -1 for i in range(len(word) - 1))


def descent_set(signature):  # type: (Signature) -> AbstractSet[int]
    return frozenset(i + 1 for i, sign in enumerate(signature) if sign < 0)


def format_signature(signature):  # type: (Signature) -> six.text_type
    return ''.join('+' if sign > 0 else '-' for sign in signature)


def parse_signature(text):  # type: (six.text_type) -> Signature
    if any(char not in '+-' for char in text):
        raise FillingError('Malformed signature {!r}'.format(text))
    return tuple(1 if char == '+' else -1 for char in text)


def content_reading_word(t):  # type: (StandardFilling) -> Tuple[int, ...]
    return t.labels


def descent_signature(t):  # type: (StandardFilling) -> Signature
    return signature_of_word(t.labels)


def _from_lookup(shape, lookup, cls=StandardFilling):
    return cls(shape, tuple(lookup[key] for key in _keys(shape)))


def superstandard(p):  # type: (Partition) -> StandardFilling
    """Fills `1..n` into the rows from the bottom, left to right."""
    lookup = {}
    label = 0
    for row, length in enumerate(p.parts, 1):
        for col in range(1, length + 1):
            label += 1
            lookup[(0, col, row)] = label
    return _from_lookup(SkewShape(p), lookup)


def substandard(p):  # type: (Partition) -> StandardFilling
    """Fills `1..n` into the columns from the left, bottom to top."""
    lookup = {}
    label = 0
    for col, height in enumerate(conjugate(p).parts, 1):
        for row in range(1, height + 1):
            label += 1
            lookup[(0, col, row)] = label
    return _from_lookup(SkewShape(p), lookup)


def _check_bound(shape, max_cells):  # type: (Shape, Optional[int]) -> None
    bound = DEFAULT_MAX_CELLS if max_cells is None else max_cells
    if shape.size > bound:
        raise SizeBoundExceeded('Shape {} has {} cells, more than the bound of {}'.format(shape, shape.size, bound))


def _predecessors(shape):  # type: (Shape) -> List[List[int]]
    keys = _keys(shape)
    where = {key: position for position, key in enumerate(keys)}
    result = []
    for index, col, row in keys:
        result.append([
            where[neighbor]
            for neighbor in ((index, col - 1, row), (index, col, row - 1))
            if neighbor in where
        ])
    return result


def standard_words(shape, max_cells=None):  # type: (Shape, Optional[int]) -> List[Tuple[int, ...]]
    """
    The content reading words of all standard fillings of `shape`, in lexicographic order.
    """
    _check_bound(shape, max_cells)
    predecessors = _predecessors(shape)
    n = len(predecessors)
    labels = [0] * n
    words = []  # type: List[Tuple[int, ...]]

    def place(value):
        if value > n:
            words.append(tuple(labels))
            return
        for position in range(n):
            if labels[position] == 0 and all(labels[p] != 0 for p in predecessors[position]):
                labels[position] = value
                place(value + 1)
                labels[position] = 0

    place(1)
    words.sort()
    _logger.debug('Shape %s has %d standard fillings', shape, len(words))
    return words


def enumerate_standard(shape, max_cells=None):  # type: (Shape, Optional[int]) -> Iterator[StandardFilling]
    for word in standard_words(shape, max_cells=max_cells):
        yield StandardFilling(shape, word)


def enumerate_semistandard(shape, max_entry, max_cells=None):
    # type: (Shape, int, Optional[int]) -> Iterator[SemistandardFilling]
    """
    Yields every semistandard filling of `shape` with entries at most `max_entry`, ordered by content reading word.
    """
    if max_entry < 1:
        raise FillingError('The largest entry must be at least 1 (got {})'.format(max_entry))
    _check_bound(shape, max_cells)
    keys = _keys(shape)
    # Row by row from the bottom, so the left and lower neighbors are always filled first
    order = sorted(keys, key=lambda key: (key[0], key[2], key[1]))
    lookup = {}  # type: Dict[_Key, int]
    found = []  # type: List[Tuple[int, ...]]

    def place(step):
        if step == len(order):
            found.append(tuple(lookup[key] for key in keys))
            return
        index, col, row = order[step]
        low = max(lookup.get((index, col - 1, row), 1), lookup.get((index, col, row - 1), 0) + 1)
        for value in range(low, max_entry + 1):
            lookup[(index, col, row)] = value
            place(step + 1)
        lookup.pop((index, col, row), None)

    place(0)
    found.sort()
    for labels in found:
        yield SemistandardFilling(shape, labels)


def row_reading_word(t):  # type: (StandardFilling) -> Tuple[int, ...]
    """Reads the rows of a single-component filling from the top row down, each row left to right."""
    if isinstance(t.shape, TupleShape):
        raise FillingError('Row reading words are defined for single shapes only')
    entries = t.entries()
    ordered = sorted(entries.items(), key=lambda item: (-item[0][1].row, item[0][1].col))
    return tuple(label for _, label in ordered)


def transpose(t):  # type: (StandardFilling) -> StandardFilling
    """The conjugate filling: the entry in cell `(c, r)` moves to `(r, c)`."""
    if isinstance(t.shape, TupleShape):
        raise FillingError('Only single shapes can be transposed')
    shape = SkewShape(conjugate(t.shape.outer), conjugate(t.shape.inner))
    lookup = {(0, cell.row, cell.col): label for (_, cell), label in t.entries().items()}
    return _from_lookup(shape, lookup)


# Text notation: rows bottom to top separated by ";", inner cells as ".", tuples as "[ a | b ]"

def _format_component(index, component, lookup):
    rows = []
    for row in range(1, len(component.outer) + 1):
        tokens = []
        for col in range(1, component.outer.row(row) + 1):
            if col <= component.inner.row(row):
                tokens.append('.')
            else:
                tokens.append(six.text_type(lookup[(index, col, row)]))
        rows.append(' '.join(tokens))
    return ';'.join(rows)


def format_filling(t):  # type: (StandardFilling) -> six.text_type
    lookup = dict(zip(_keys(t.shape), t.labels))
    rendered = [_format_component(index, c, lookup) for index, c in enumerate(components_of(t.shape))]
    if isinstance(t.shape, TupleShape):
        return '[ {} ]'.format(' | '.join(rendered))
    return rendered[0]


def _parse_component(index, text, lookup):  # type: (int, six.text_type, Dict[_Key, int]) -> SkewShape
    if not text.strip():
        return SkewShape(Partition(()))
    outer = []
    inner = []
    for row, row_text in enumerate(text.split(';'), 1):
        tokens = row_text.split()
        if not tokens:
            raise FillingError('Row {} of {!r} is empty'.format(row, text))
        dots = 0
        while dots < len(tokens) and tokens[dots] == '.':
            dots += 1
        for col, token in enumerate(tokens[dots:], dots + 1):
            try:
                lookup[(index, col, row)] = int(token)
            except ValueError:
                raise FillingError('Malformed entry {!r} in {!r}'.format(token, text))
        outer.append(len(tokens))
        inner.append(dots)
    while inner and inner[-1] == 0:
        inner.pop()
    try:
        return SkewShape(Partition(outer), Partition(inner))
    except ShapeError as e:
        raise FillingError('Rows of {!r} do not form a skew shape: {}'.format(text, e))


def parse_filling(text, standard=True):  # type: (six.text_type, bool) -> StandardFilling
    """
    Parses the tableau text notation, e.g. `1 3 4;2` or `[ 1 3;2 | . 4 ]`. With `standard=False` the result is a
    `SemistandardFilling`.
    """
    stripped = text.strip()
    lookup = {}  # type: Dict[_Key, int]
    shape = None  # type: Optional[Shape]
    if stripped.startswith('['):
        if not stripped.endswith(']'):
            raise FillingError('Malformed tuple filling {!r}'.format(text))
        pieces = stripped[1:-1].split('|')
        shape = TupleShape(tuple(_parse_component(index, piece, lookup) for index, piece in enumerate(pieces)))
    else:
        shape = _parse_component(0, stripped, lookup)
    return _from_lookup(shape, lookup, StandardFilling if standard else SemistandardFilling)

from __future__ import (
    absolute_import,
    unicode_literals,
)

import functools
import itertools
import re
from typing import (
    AbstractSet,
    Iterable,
    Iterator,
    List,
    Optional,
    Tuple,
    Union,
)

import attr
import six

from dualeq.constants import (
    DOMINANCE_EQUAL,
    DOMINANCE_GREATER,
    DOMINANCE_INCOMPARABLE,
    DOMINANCE_LESS,
)
from dualeq.error import ShapeError
from dualeq.utils import (
    attr_is_instance,
    attr_is_instance_or_instance_tuple,
    attr_is_int_sequence,
    attr_is_positive_int,
)


__all__ = (
    'Cell',
    'Composition',
    'Partition',
    'ReadingPosition',
    'Shape',
    'SkewShape',
    'TupleShape',
    'cells_of',
    'components_of',
    'composition_from_descent_set',
    'compositions',
    'conjugate',
    'content',
    'descent_set_of_composition',
    'dominance_leq',
    'dominates',
    'format_partition',
    'format_shape',
    'parse_partition',
    'parse_shape',
    'partitions',
    'reading_positions',
    'shifted_contents',
)


def _check_weakly_decreasing(_instance, attribute, value):
    for j in range(1, len(value)):
        if value[j] > value[j - 1]:
            raise ShapeError(
                "'{name}' must be weakly decreasing (got {value!r}).".format(name=attribute.name, value=value),
            )


def _as_tuple(value):
    return tuple(value)


@attr.s(frozen=True)
class Partition(object):
    """
    A weakly decreasing sequence of positive integers. The empty partition is legal.
    """
    parts = attr.ib(
        converter=_as_tuple,
        validator=[attr_is_int_sequence(minimum=1, error=ShapeError), _check_weakly_decreasing],
    )  # type: Tuple[int, ...]

    @property
    def size(self):  # type: () -> int
        return sum(self.parts)

    def __len__(self):  # type: () -> int
        return len(self.parts)

    def __iter__(self):  # type: () -> Iterator[int]
        return iter(self.parts)

    def row(self, r):  # type: (int) -> int
        """Length of row `r` (1-indexed, bottom row first); zero past the last row."""
        return self.parts[r - 1] if 0 < r <= len(self.parts) else 0

    def contains(self, other):  # type: (Partition) -> bool
        return len(other) <= len(self) and all(m <= l for m, l in zip(other.parts, self.parts))

    def __str__(self):
        return format_partition(self)


@attr.s(frozen=True)
class Composition(object):
    parts = attr.ib(
        converter=_as_tuple,
        validator=attr_is_int_sequence(minimum=1, error=ShapeError),
    )  # type: Tuple[int, ...]

    @property
    def size(self):  # type: () -> int
        return sum(self.parts)

    def __len__(self):  # type: () -> int
        return len(self.parts)

    def __iter__(self):  # type: () -> Iterator[int]
        return iter(self.parts)

    def is_partition(self):  # type: () -> bool
        return all(self.parts[j] <= self.parts[j - 1] for j in range(1, len(self.parts)))

    def to_partition(self):  # type: () -> Partition
        if not self.is_partition():
            raise ShapeError('Composition {} is not a partition'.format(self.parts))
        return Partition(self.parts)


@attr.s(frozen=True)
class Cell(object):
    """
    A cell in French coordinates: `col` counts from the left, `row` from the bottom.
    """
    col = attr.ib(validator=attr_is_positive_int(error=ShapeError))  # type: int
    row = attr.ib(validator=attr_is_positive_int(error=ShapeError))  # type: int

    @property
    def content(self):  # type: () -> int
        return self.col - self.row


def _coerce_partition(value):
    if isinstance(value, Partition):
        return value
    return Partition(value)


def _check_inner_contained(instance, _attribute, value):
    if not instance.outer.contains(value):
        raise ShapeError('Inner shape {} is not contained in outer shape {}'.format(
            format_partition(value),
            format_partition(instance.outer),
        ))


@attr.s(frozen=True)
class SkewShape(object):
    """
    The cells of `outer` that are not cells of `inner`. Two skew shapes are equal only when both partitions are, even
    if their cell sets are translates of each other.
    """
    outer = attr.ib(converter=_coerce_partition, validator=attr_is_instance(Partition))  # type: Partition
    inner = attr.ib(
        default=Partition(()),
        converter=_coerce_partition,
        validator=[attr_is_instance(Partition), _check_inner_contained],
    )  # type: Partition

    @property
    def size(self):  # type: () -> int
        return self.outer.size - self.inner.size

    @property
    def is_straight(self):  # type: () -> bool
        return not self.inner.parts

    def __contains__(self, cell):  # type: (Cell) -> bool
        return self.inner.row(cell.row) < cell.col <= self.outer.row(cell.row)

    def __str__(self):
        return format_shape(self)


def _check_components(_instance, attribute, value):
    if not value:
        raise ShapeError("'{}' must hold at least one shape".format(attribute.name))


@attr.s(frozen=True)
class TupleShape(object):
    """
    An ordered tuple of skew shapes, some possibly empty. Cells of component `i` read with shifted content
    `k * content + i`.
    """
    components = attr.ib(
        converter=_as_tuple,
        validator=[attr_is_instance_or_instance_tuple(SkewShape), _check_components],
    )  # type: Tuple[SkewShape, ...]

    @property
    def k(self):  # type: () -> int
        return len(self.components)

    @property
    def size(self):  # type: () -> int
        return sum(c.size for c in self.components)

    def __str__(self):
        return format_shape(self)


Shape = Union[SkewShape, TupleShape]

# A position in the reading order: the component index and the cell inside that component
ReadingPosition = Tuple[int, Cell]


def conjugate(p):  # type: (Partition) -> Partition
    """Transpose of the Young diagram."""
    if not p.parts:
        return p
    return Partition(tuple(sum(1 for part in p.parts if part >= j) for j in range(1, p.parts[0] + 1)))


def content(c):  # type: (Cell) -> int
    return c.col - c.row


def _prefix_sums(parts, length):
    sums = list(itertools.accumulate(parts))
    total = sums[-1] if sums else 0
    return sums + [total] * (length - len(sums))


def dominance_leq(a, b):
    # type: (Union[Composition, Partition], Union[Composition, Partition]) -> six.text_type
    """
    Compares two compositions of the same size under dominance and returns one of the `DOMINANCE_*` constants,
    reading the relation as `a` relative to `b`.
    """
    if a.size != b.size:
        raise ShapeError('Cannot compare compositions of sizes {} and {}'.format(a.size, b.size))
    length = max(len(a), len(b))
    sums_a = _prefix_sums(a.parts, length)
    sums_b = _prefix_sums(b.parts, length)
    greater = all(x >= y for x, y in zip(sums_a, sums_b))
    less = all(x <= y for x, y in zip(sums_a, sums_b))
    if greater and less:
        return DOMINANCE_EQUAL
    if greater:
        return DOMINANCE_GREATER
    if less:
        return DOMINANCE_LESS
    return DOMINANCE_INCOMPARABLE


def dominates(a, b):  # type: (Union[Composition, Partition], Union[Composition, Partition]) -> bool
    return dominance_leq(a, b) in (DOMINANCE_GREATER, DOMINANCE_EQUAL)


def composition_from_descent_set(descents, n):  # type: (Iterable[int], int) -> Composition
    """
    The composition of `n` whose partial sums are the elements of `descents` followed by `n`.
    """
    ordered = sorted(set(descents))
    for d in ordered:
        if not 1 <= d <= n - 1:
            raise ShapeError('Descent {} is outside 1..{}'.format(d, n - 1))
    if n == 0:
        return Composition(())
    breaks = [0] + ordered + [n]
    return Composition(tuple(breaks[j + 1] - breaks[j] for j in range(len(breaks) - 1)))


def descent_set_of_composition(alpha):  # type: (Composition) -> AbstractSet[int]
    return frozenset(itertools.accumulate(alpha.parts[:-1]))


def partitions(n, maximum=None):  # type: (int, Optional[int]) -> Iterator[Partition]
    """
    Yields the partitions of `n` in descending lexicographic order, which is a linear extension of dominance.
    """
    if maximum is None:
        maximum = n
    if n == 0:
        yield Partition(())
        return
    for first in range(min(n, maximum), 0, -1):
        for rest in partitions(n - first, first):
            yield Partition((first,) + rest.parts)


def compositions(n):  # type: (int) -> Iterator[Composition]
    for k in range(n):
        for breaks in itertools.combinations(range(1, n), k):
            yield composition_from_descent_set(breaks, n)


def components_of(shape):  # type: (Shape) -> Tuple[SkewShape, ...]
    """A skew shape reads as a one-component tuple."""
    if isinstance(shape, TupleShape):
        return shape.components
    return (shape,)


def _component_cells(component):  # type: (SkewShape) -> List[Cell]
    return [
        Cell(col, row)
        for row in range(1, len(component.outer) + 1)
        for col in range(component.inner.row(row) + 1, component.outer.row(row) + 1)
    ]


@functools.lru_cache(maxsize=None)
def reading_positions(shape):  # type: (Shape) -> Tuple[ReadingPosition, ...]
    """
    All positions of the shape in content reading order: increasing shifted content, ties broken by increasing row.
    """
    parts = components_of(shape)
    k = len(parts)
    keyed = []
    for index, component in enumerate(parts):
        for cell in _component_cells(component):
            keyed.append(((k * cell.content + index, cell.row), (index, cell)))
    keyed.sort(key=lambda item: item[0])
    return tuple(position for _, position in keyed)


@functools.lru_cache(maxsize=None)
def shifted_contents(shape):  # type: (Shape) -> Tuple[int, ...]
    """Shifted contents of the reading positions, in reading order."""
    k = len(components_of(shape))
    return tuple(k * cell.content + index for index, cell in reading_positions(shape))


def cells_of(shape):  # type: (SkewShape) -> List[Cell]
    return [cell for _, cell in reading_positions(shape)]


# Text notation

_PARTITION_RE = re.compile(r'^(\(\s*(\d+(\s*,\s*\d+)*)?\s*\)|\d+(\s*,\s*\d+)*)$')


def parse_partition(text):  # type: (six.text_type) -> Partition
    """Parses `3,2`, `(3,2)` or `()`."""
    stripped = text.strip()
    if not _PARTITION_RE.match(stripped):
        raise ShapeError('Malformed partition {!r}'.format(text))
    numbers = [int(t) for t in re.findall(r'\d+', stripped)]
    if any(n == 0 for n in numbers):
        raise ShapeError('Partition {!r} has a zero part'.format(text))
    return Partition(tuple(numbers))


def _parse_skew(text):  # type: (six.text_type) -> SkewShape
    pieces = text.split('/')
    if len(pieces) > 2:
        raise ShapeError('Malformed skew shape {!r}'.format(text))
    outer = parse_partition(pieces[0])
    inner = parse_partition(pieces[1]) if len(pieces) == 2 else Partition(())
    return SkewShape(outer, inner)


def _split_top_level(text):  # type: (six.text_type) -> List[six.text_type]
    items = []
    depth = 0
    current = []  # type: List[six.text_type]
    for char in text:
        if char == '(':
            depth += 1
        elif char == ')':
            depth -= 1
            if depth < 0:
                raise ShapeError('Unbalanced parentheses in {!r}'.format(text))
        if char == ',' and depth == 0:
            items.append(''.join(current))
            current = []
        else:
            current.append(char)
    if depth != 0:
        raise ShapeError('Unbalanced parentheses in {!r}'.format(text))
    items.append(''.join(current))
    return [item.strip() for item in items]


def parse_shape(text):  # type: (six.text_type) -> Shape
    """
    Parses a partition (`3,2`), a skew shape (`5,4,4,1/3,2,2`) or a tuple of shapes (`((3,2),(),(2,2,1)/(1))`).
    Partitions parse as straight skew shapes.
    """
    stripped = text.strip()
    if re.match(r'^\(\s*\(', stripped):
        if not stripped.endswith(')'):
            raise ShapeError('Malformed tuple shape {!r}'.format(text))
        items = _split_top_level(stripped[1:-1])
        if items and items[-1] == '':
            items = items[:-1]
        if not items:
            raise ShapeError('Tuple shape {!r} has no components'.format(text))
        return TupleShape(tuple(_parse_skew(item) for item in items))
    return _parse_skew(stripped)


def format_partition(p, parenthesize=False):  # type: (Partition, bool) -> six.text_type
    if not p.parts:
        return '()'
    body = ','.join(six.text_type(part) for part in p.parts)
    return '({})'.format(body) if parenthesize else body


def format_shape(shape):  # type: (Shape) -> six.text_type
    if isinstance(shape, TupleShape):
        return '({})'.format(','.join(
            format_partition(c.outer, True) + ('/' + format_partition(c.inner, True) if c.inner.parts else '')
            for c in shape.components
        ))
    if shape.inner.parts:
        return '{}/{}'.format(format_partition(shape.outer), format_partition(shape.inner))
    return format_partition(shape.outer)

from __future__ import (
    absolute_import,
    unicode_literals,
)

import collections
import functools
import itertools
import logging
from typing import (
    AbstractSet,
    Dict,
    Iterable,
    List,
    Sequence,
    Tuple,
)

import attr
import six

from dualeq.error import (
    InvolutionError,
    ShapeError,
    StatisticError,
)
from dualeq.involutions import (
    EquivalenceClass,
    Word,
    classes,
    format_word,
    inversion_number,
    twisted_d,
    words_family,
)
from dualeq.shapes import (
    Partition,
    SkewShape,
)
from dualeq.symfunc.qsym import (
    QSymExpansion,
    SchurExpansion,
    extract_schur,
)
from dualeq.tableaux import signature_of_word


__all__ = (
    'Ribbon',
    'descent_positions',
    'foata',
    'inversion_flag_classes',
    'major_index',
    'ribbon_maj',
    'ribbon_schur_in_Q',
    'ribbon_skew_shape',
    'ribbons',
    'twisted_class_expansion',
    'twisted_classes',
)


_logger = logging.getLogger(__name__)


def _check_descents(instance, _attribute, value):
    for d in value:
        if not 1 <= d <= instance.n - 1:
            raise ShapeError('Descent {} is outside 1..{}'.format(d, instance.n - 1))


@attr.s(frozen=True)
class Ribbon(object):
    """
    A connected skew shape without a 2x2 block, given by its size and the set of `i` whose successor `i + 1` sits
    directly below it when the cells are labelled in content order.
    """
    n = attr.ib()  # type: int
    descents = attr.ib(converter=frozenset, validator=_check_descents)  # type: AbstractSet[int]

    @property
    def maj(self):  # type: () -> int
        return sum(self.descents)

    def __str__(self):
        return 'Ribbon({}, {{{}}})'.format(self.n, ','.join(six.text_type(d) for d in sorted(self.descents)))


def ribbon_maj(r):  # type: (Ribbon) -> int
    return r.maj


def ribbons(n):  # type: (int) -> List[Ribbon]
    """All ribbons with `n` cells, ordered by descent count and then lexicographically."""
    return [
        Ribbon(n, chosen)
        for size in range(n)
        for chosen in itertools.combinations(range(1, n), size)
    ]


def ribbon_skew_shape(r):  # type: (Ribbon) -> SkewShape
    """Walks east after each non-descent and south after each descent, starting in the top row."""
    if r.n < 1:
        raise ShapeError('A ribbon needs at least one cell')
    row = len(r.descents) + 1
    col = 1
    spans = {row: [col, col]}  # type: Dict[int, List[int]]
    for i in range(1, r.n):
        if i in r.descents:
            row -= 1
            spans[row] = [col, col]
        else:
            col += 1
            spans[row][1] = col
    rows = sorted(spans)
    outer = Partition(tuple(spans[row][1] for row in rows))
    inner = tuple(spans[row][0] - 1 for row in rows)
    while inner and inner[-1] == 0:
        inner = inner[:-1]
    return SkewShape(outer, Partition(inner))


def descent_positions(word):  # type: (Sequence[int]) -> AbstractSet[int]
    """Positions `j` with `word[j] > word[j + 1]`, counted from 1."""
    return frozenset(j for j in range(1, len(word)) if word[j - 1] > word[j])


def major_index(word):  # type: (Sequence[int]) -> int
    return sum(descent_positions(word))


@functools.lru_cache(maxsize=None)
def ribbon_schur_in_Q(r):  # type: (Ribbon) -> QSymExpansion
    """The ribbon Schur function: `Q_sigma(w)` summed over permutations whose descent positions are those of `r`."""
    return QSymExpansion.from_signatures(
        r.n,
        (
            signature_of_word(w)
            for w in itertools.permutations(range(1, r.n + 1))
            if descent_positions(w) == r.descents
        ),
    )


def foata(word):  # type: (Sequence[int]) -> Word
    """
    Foata's bijection. Each new letter `x` splits the image built so far into blocks, cut after every letter greater
    than `x` when the last letter is greater than `x` and after every letter smaller than `x` otherwise; each block
    moves its last letter to the front, then `x` is appended. The image has as many inversions as `word` has major
    index, and keeps the last letter and the inverse descent set.
    """
    image = []  # type: List[int]
    for x in word:
        if image:
            bigger = image[-1] > x
            blocks = []
            current = []  # type: List[int]
            for letter in image:
                current.append(letter)
                if (letter > x) == bigger:
                    blocks.append(current)
                    current = []
            image = [letter for block in blocks for letter in [block[-1]] + block[:-1]]
        image.append(x)
    return tuple(image)


def _flag(word):  # type: (Sequence[int]) -> bool
    return word[0] > word[-1]


def twisted_classes(n):  # type: (int) -> List[EquivalenceClass]
    """The classes of all permutations of `1..n` under the twisted involutions."""
    return classes(words_family(n, twisted=True))


def inversion_flag_classes(n):  # type: (int) -> Dict[Tuple[int, bool], List[Word]]
    """Permutations of `1..n` grouped by inversion number and by whether the first letter exceeds the last."""
    groups = collections.defaultdict(list)  # type: Dict[Tuple[int, bool], List[Word]]
    for w in itertools.permutations(range(1, n + 1)):
        groups[(inversion_number(w), _flag(w))].append(w)
    return dict(groups)


def _check_twisted_closed(members):  # type: (Iterable[Word]) -> None
    present = set(members)
    for w in present:
        for i in range(2, len(w)):
            if twisted_d(i, w) not in present:
                raise InvolutionError('{} leaves the class of {} through a move that is not twisted'.format(
                    format_word(twisted_d(i, w)), format_word(w),
                ))


def twisted_class_expansion(cls):  # type: (EquivalenceClass) -> SchurExpansion
    """
    The Schur expansion of a class closed under the twisted involutions: one ribbon Schur function for every ribbon
    whose major index equals the common inversion number, and which has its last possible descent exactly when the
    first letter of the words exceeds the last.
    """
    members = list(cls.members)
    if not members:
        raise InvolutionError('Cannot expand an empty class')
    _check_twisted_closed(members)
    n = len(members[0])
    statistics = set((inversion_number(w), _flag(w)) for w in members)
    if len(statistics) > 1:
        raise StatisticError('Class of {} mixes inversion numbers and end orders {}'.format(
            format_word(members[0]), sorted(statistics),
        ))
    inversions, flag = statistics.pop()
    total = SchurExpansion(n)
    for r in ribbons(n):
        if r.maj == inversions and ((n - 1) in r.descents) == flag:
            total = total + extract_schur(ribbon_schur_in_Q(r))
    _logger.debug('Twisted class of %s expands as %s', format_word(members[0]), total)
    return total

from __future__ import (
    absolute_import,
    unicode_literals,
)

import collections
import functools
import itertools
import logging
import re
from typing import (
    Any,
    Callable,
    Dict,
    Hashable,
    Iterable,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
)

import attr
import six

from dualeq.constants import (
    DOMINANCE_EQUAL,
    DOMINANCE_GREATER,
    DOMINANCE_LESS,
    FAILURE_CODE_NO_DOMINANT,
    FAILURE_CODE_NOT_COMMUTING,
    FAILURE_CODE_NOT_SCHUR_POSITIVE,
    FAILURE_CODE_NOT_SINGLE_SCHUR,
)
from dualeq.error import (
    FillingError,
    InvolutionError,
    StatisticError,
)
from dualeq.shapes import (
    Composition,
    Partition,
    Shape,
    components_of,
    composition_from_descent_set,
    conjugate,
    dominance_leq,
    shifted_contents,
)
from dualeq.symfunc.qsym import (
    QPoly,
    QSymExpansion,
    SchurExpansion,
    extract_schur,
    schur_in_Q,
)
from dualeq.tableaux import (
    StandardFilling,
    descent_set,
    descent_signature,
    enumerate_standard,
    format_filling,
    signature_of_word,
    superstandard,
)
from dualeq.types import (
    CheckReport,
    Failure,
)
from dualeq.utils import attr_is_int


__all__ = (
    'EquivalenceClass',
    'InvolutionFamily',
    'Word',
    'check_strong_dual_equivalence',
    'check_weak_dual_equivalence',
    'class_of',
    'classes',
    'combined_D',
    'combined_d_word',
    'd_on_filling',
    'dominant_elements',
    'elementary_d',
    'format_word',
    'implicit_rectification',
    'inversion_number',
    'parse_word',
    'schur_expansion_from_DE',
    'subordinate_elements',
    'tableaux_family',
    'twisted_d',
    'words_family',
)


_logger = logging.getLogger(__name__)


Word = Tuple[int, ...]
Window = Tuple[int, int]


def format_word(word):  # type: (Sequence[int]) -> six.text_type
    """`2314`, or space separated once a letter has two digits."""
    separator = '' if all(letter < 10 for letter in word) else ' '
    return separator.join(six.text_type(letter) for letter in word)


def parse_word(text):  # type: (six.text_type) -> Word
    stripped = text.strip()
    if re.match(r'^\d+$', stripped):
        word = tuple(int(char) for char in stripped)
    else:
        word = tuple(int(token) for token in re.split(r'[\s,]+', stripped) if token)
    if sorted(word) != list(range(1, len(word) + 1)):
        raise InvolutionError('{!r} is not a permutation'.format(text))
    return word


def inversion_number(word):  # type: (Sequence[int]) -> int
    return sum(1 for a, b in itertools.combinations(word, 2) if a > b)


def _check_color(i, n):
    if not 1 < i < n:
        raise InvolutionError('Color {} is outside 2..{}'.format(i, n - 1))


def _three_positions(i, word):  # type: (int, Sequence[int]) -> Tuple[int, int, int]
    _check_color(i, len(word))
    where = {letter: position for position, letter in enumerate(word)}
    return where[i - 1], where[i], where[i + 1]


def elementary_d(i, word):  # type: (int, Sequence[int]) -> Word
    """
    Fixes `word` when `i` sits between `i - 1` and `i + 1`; otherwise swaps `i` with whichever of `i - 1`, `i + 1`
    lies farther from it.
    """
    below, middle, above = _three_positions(i, word)
    result = list(word)
    if min(below, above) < middle < max(below, above):
        return tuple(result)
    far = below if abs(below - middle) > abs(above - middle) else above
    result[middle], result[far] = result[far], result[middle]
    return tuple(result)


def twisted_d(i, word):  # type: (int, Sequence[int]) -> Word
    """
    Fixes `word` when `i` sits between `i - 1` and `i + 1`; otherwise cyclically rotates the three letters so that
    `i` lands on the other side of both.
    """
    below, middle, above = _three_positions(i, word)
    result = list(word)
    if min(below, above) < middle < max(below, above):
        return tuple(result)
    first, second, third = sorted((below, middle, above))
    if middle == third:
        result[first], result[second], result[third] = i, word[first], word[second]
    else:
        result[first], result[second], result[third] = word[second], word[third], i
    return tuple(result)


def d_on_filling(i, t):  # type: (int, StandardFilling) -> StandardFilling
    try:
        return StandardFilling(t.shape, elementary_d(i, t.labels))
    except FillingError as e:
        raise InvolutionError('d_{} broke standardness of {}: {}'.format(i, format_filling(t), e))


def combined_d_word(i, word, contents, k):  # type: (int, Sequence[int], Sequence[int], int) -> Word
    """
    Applies `d_i` when the shifted contents holding `i - 1, i, i + 1` spread more than `k` apart, and the twisted
    involution otherwise. `contents` lists the shifted content of every reading position.
    """
    positions = _three_positions(i, word)
    values = sorted(contents[p] for p in positions)
    if values[0] == values[1] or values[1] == values[2]:
        raise InvolutionError('Entries {}..{} of {} share a shifted content'.format(i - 1, i + 1, format_word(word)))
    if values[2] - values[0] > k:
        return elementary_d(i, word)
    return twisted_d(i, word)


def combined_D(i, t, k=None):  # type: (int, StandardFilling, Optional[int]) -> StandardFilling
    components = len(components_of(t.shape))
    if k is not None and k != components:
        raise InvolutionError('k={} does not match the {} components of {}'.format(k, components, t.shape))
    word = combined_d_word(i, t.labels, shifted_contents(t.shape), components)
    try:
        return StandardFilling(t.shape, word)
    except FillingError as e:
        raise InvolutionError('D_{} broke standardness of {}: {}'.format(i, format_filling(t), e))


def _render(element):  # type: (Any) -> six.text_type
    if isinstance(element, StandardFilling):
        return format_filling(element)
    if isinstance(element, tuple) and all(isinstance(letter, six.integer_types) for letter in element):
        return format_word(element)
    return six.text_type(element)


def _as_tuple(value):
    return tuple(value)


@attr.s
class InvolutionFamily(object):
    """
    A finite set with a descent map and involutions `phi_2 .. phi_{n-1}`. Every involution is tabulated, and
    verified to be an involution of the ground set, on construction.
    """
    ground_set = attr.ib(converter=_as_tuple)  # type: Tuple[Hashable, ...]
    n = attr.ib(validator=attr_is_int())  # type: int
    descent_map = attr.ib()  # type: Callable[[Any], Iterable[int]]
    involutions = attr.ib()  # type: Mapping[int, Callable[[Any], Any]]
    statistic = attr.ib(default=None)  # type: Optional[Callable[[Any], int]]
    render = attr.ib(default=_render)  # type: Callable[[Any], six.text_type]

    def __attrs_post_init__(self):
        self.index = {x: j for j, x in enumerate(self.ground_set)}
        if len(self.index) != len(self.ground_set):
            raise InvolutionError('The ground set has repeated elements')
        self.descents = []  # type: List[frozenset]
        for x in self.ground_set:
            found = frozenset(self.descent_map(x))
            if any(not 1 <= d <= self.n - 1 for d in found):
                raise InvolutionError('Descents {} of {} are outside 1..{}'.format(
                    sorted(found), self.render(x), self.n - 1,
                ))
            self.descents.append(found)
        self.tables = {}  # type: Dict[int, List[int]]
        for i in self.colors:
            if i not in self.involutions:
                raise InvolutionError('No involution given for color {}'.format(i))
            table = []
            for x in self.ground_set:
                image = self.involutions[i](x)
                if image not in self.index:
                    raise InvolutionError('phi_{} sends {} outside the ground set'.format(i, self.render(x)))
                table.append(self.index[image])
            for j, image in enumerate(table):
                if table[image] != j:
                    raise InvolutionError('phi_{} is not an involution at {}'.format(
                        i, self.render(self.ground_set[j]),
                    ))
            self.tables[i] = table
        _logger.debug('Built a family of %d elements with colors 2..%d', len(self.ground_set), self.n - 1)

    @property
    def colors(self):  # type: () -> range
        return range(2, self.n)

    def __len__(self):  # type: () -> int
        return len(self.ground_set)

    def apply(self, i, x):  # type: (int, Any) -> Any
        _check_color(i, self.n)
        return self.ground_set[self.tables[i][self.index[x]]]

    def descents_of(self, x):  # type: (Any) -> frozenset
        return self.descents[self.index[x]]

    def alpha(self, x):  # type: (Any) -> Composition
        return composition_from_descent_set(self.descents_of(x), self.n)

    def stat(self, x):  # type: (Any) -> int
        return self.statistic(x) if self.statistic else 0


@attr.s(frozen=True)
class EquivalenceClass(object):
    members = attr.ib(converter=_as_tuple)  # type: Tuple[Any, ...]
    window = attr.ib(default=None)  # type: Optional[Window]

    def __len__(self):  # type: () -> int
        return len(self.members)

    def __contains__(self, x):  # type: (Any) -> bool
        return x in self.members


def _window_colors(fam, window):  # type: (InvolutionFamily, Optional[Window]) -> List[int]
    if window is None:
        return list(fam.colors)
    h, i = window
    if not 2 <= h <= i <= fam.n - 1:
        raise InvolutionError('Window [{}, {}] is outside the colors 2..{}'.format(h, i, fam.n - 1))
    return list(range(h, i + 1))


def _orbit(fam, start, colors):  # type: (InvolutionFamily, int, Sequence[int]) -> List[int]
    seen = {start}
    queue = collections.deque([start])
    while queue:
        j = queue.popleft()
        for i in colors:
            image = fam.tables[i][j]
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return sorted(seen)


def _class_indices(fam, colors):  # type: (InvolutionFamily, Sequence[int]) -> List[List[int]]
    assigned = [False] * len(fam)
    result = []
    for start in range(len(fam)):
        if not assigned[start]:
            members = _orbit(fam, start, colors)
            for j in members:
                assigned[j] = True
            result.append(members)
    return result


def class_of(x, fam, window=None):  # type: (Any, InvolutionFamily, Optional[Window]) -> EquivalenceClass
    """The orbit of `x` under the involutions with colors in `window` (all colors by default)."""
    colors = _window_colors(fam, window)
    return EquivalenceClass(tuple(fam.ground_set[j] for j in _orbit(fam, fam.index[x], colors)), window)


def classes(fam, window=None):  # type: (InvolutionFamily, Optional[Window]) -> List[EquivalenceClass]
    colors = _window_colors(fam, window)
    return [
        EquivalenceClass(tuple(fam.ground_set[j] for j in members), window)
        for members in _class_indices(fam, colors)
    ]


def _windows(n):  # type: (int) -> List[Window]
    return [(h, i) for h in range(2, n) for i in range(h, min(h + 3, n - 1) + 1)]


def _restricted_signature(descents, h, i):  # type: (frozenset, int, int) -> Tuple[int, ...]
    """Descents in `h-1..i`, shifted down to start at 1, as a signature of degree `i - h + 3`."""
    return tuple(-1 if d in descents else 1 for d in range(h - 1, i + 1))


def _dominant_among(alphas):  # type: (Sequence[Composition]) -> List[int]
    return [
        j for j, a in enumerate(alphas)
        if all(dominance_leq(a, b) in (DOMINANCE_GREATER, DOMINANCE_EQUAL) for b in alphas)
    ]


def _subordinate_among(alphas):  # type: (Sequence[Composition]) -> List[int]
    return [
        j for j, a in enumerate(alphas)
        if all(dominance_leq(a, b) in (DOMINANCE_LESS, DOMINANCE_EQUAL) for b in alphas)
    ]


def _window_failure(fam, code, message, window, members, residual=None):
    witness = {
        'window': list(window),
        'class': [fam.render(fam.ground_set[j]) for j in members],
    }  # type: Dict[six.text_type, Any]
    if residual is not None:
        witness['residual'] = six.text_type(residual)
    _logger.info('%s at window %s', message, window)
    return Failure(message, pointer='window[{},{}]'.format(*window), code=code, witness=witness)


def _check_windowed_class(fam, window, members, strong):
    # type: (InvolutionFamily, Window, List[int], bool) -> Optional[Failure]
    h, i = window
    degree = i - h + 3
    signatures = [_restricted_signature(fam.descents[j], h, i) for j in members]
    f = QSymExpansion.from_signatures(degree, signatures)
    if strong or h == i:
        alphas = [composition_from_descent_set(descent_set(s), degree) for s in signatures]
        top = _dominant_among(alphas)
        if len(set(alphas[j] for j in top)) != 1 or not alphas[top[0]].is_partition():
            return _window_failure(
                fam, FAILURE_CODE_NO_DOMINANT, 'Windowed class has no dominant partition', window, members,
            )
        residual = f - schur_in_Q(alphas[top[0]].to_partition())
        if not residual.is_zero():
            return _window_failure(
                fam, FAILURE_CODE_NOT_SINGLE_SCHUR, 'Windowed class is not a single Schur function', window,
                members, residual,
            )
        return None
    expansion = extract_schur(f)
    if not expansion.is_schur_positive:
        return _window_failure(
            fam, FAILURE_CODE_NOT_SCHUR_POSITIVE, 'Windowed class is not Schur positive', window, members,
            expansion.residual if not expansion.in_schur_span else expansion,
        )
    return None


def _check_commutation(fam):  # type: (InvolutionFamily) -> List[Failure]
    failures = []
    for i, j in itertools.combinations(fam.colors, 2):
        if j - i < 3:
            continue
        phi_i, phi_j = fam.tables[i], fam.tables[j]
        for x in range(len(fam)):
            if phi_j[phi_i[x]] != phi_i[phi_j[x]]:
                element = fam.render(fam.ground_set[x])
                _logger.info('phi_%d and phi_%d do not commute at %s', i, j, element)
                failures.append(Failure(
                    'Involutions {} and {} do not commute'.format(i, j),
                    pointer='colors[{},{}]'.format(i, j),
                    code=FAILURE_CODE_NOT_COMMUTING,
                    witness={'colors': [i, j], 'element': element},
                ))
                break
    return failures


def _check_dual_equivalence(fam, strong):  # type: (InvolutionFamily, bool) -> CheckReport
    report = CheckReport()
    for window in _windows(fam.n):
        colors = list(range(window[0], window[1] + 1))
        for members in _class_indices(fam, colors):
            failure = _check_windowed_class(fam, window, members, strong)
            if failure:
                report.failures.append(failure)
                break
    report.failures.extend(_check_commutation(fam))
    _logger.debug(
        '%s check of %d elements: %s',
        'Strong' if strong else 'Weak',
        len(fam),
        'pass' if report.passed else '{} failures'.format(len(report.failures)),
    )
    return report


def check_strong_dual_equivalence(fam):  # type: (InvolutionFamily) -> CheckReport
    """
    Every class under each window of one to four consecutive colors, with its descents restricted to the window,
    must sum to a single Schur function; involutions three or more colors apart must commute.
    """
    return _check_dual_equivalence(fam, strong=True)


def check_weak_dual_equivalence(fam):  # type: (InvolutionFamily) -> CheckReport
    """
    As the strong check, but windowed classes only need to be Schur positive; one-color windows must still give a
    single Schur function.
    """
    return _check_dual_equivalence(fam, strong=False)


def _full_classes(fam):  # type: (InvolutionFamily) -> List[List[int]]
    return _class_indices(fam, list(fam.colors))


def _extreme(fam, members, pick, what):  # type: (InvolutionFamily, List[int], Callable, six.text_type) -> int
    alphas = [composition_from_descent_set(fam.descents[j], fam.n) for j in members]
    found = pick(alphas)
    if len(found) != 1:
        raise InvolutionError('Class of {} has {} {} elements; the family is not a dual equivalence'.format(
            fam.render(fam.ground_set[members[0]]), len(found), what,
        ))
    return members[found[0]]


def dominant_elements(fam):  # type: (InvolutionFamily) -> List[Tuple[Any, Partition]]
    """One element per class whose descent composition dominates all its classmates, with that composition."""
    result = []
    for members in _full_classes(fam):
        j = _extreme(fam, members, _dominant_among, 'dominant')
        alpha = fam.alpha(fam.ground_set[j])
        if not alpha.is_partition():
            raise InvolutionError('Dominant element {} has descent composition {} which is not a partition'.format(
                fam.render(fam.ground_set[j]), alpha.parts,
            ))
        result.append((fam.ground_set[j], alpha.to_partition()))
    return result


def subordinate_elements(fam):  # type: (InvolutionFamily) -> List[Tuple[Any, Partition]]
    """
    One element per class whose descent composition is dominated by all its classmates, paired with the conjugate
    of the composition of its complemented descent set.
    """
    result = []
    for members in _full_classes(fam):
        j = _extreme(fam, members, _subordinate_among, 'subordinate')
        complement = set(range(1, fam.n)) - fam.descents[j]
        beta = composition_from_descent_set(complement, fam.n)
        if not beta.is_partition():
            raise InvolutionError('Subordinate element {} does not complement to a partition'.format(
                fam.render(fam.ground_set[j]),
            ))
        result.append((fam.ground_set[j], conjugate(beta.to_partition())))
    return result


def schur_expansion_from_DE(fam):  # type: (InvolutionFamily) -> SchurExpansion
    """Sums `q^stat(T) s_alpha(T)` over the dominant elements `T`; the statistic must be constant on classes."""
    terms = {}  # type: Dict[Partition, QPoly]
    for members in _full_classes(fam):
        values = set(fam.stat(fam.ground_set[j]) for j in members)
        if len(values) > 1:
            raise StatisticError('Statistic takes values {} on the class of {}'.format(
                sorted(values), fam.render(fam.ground_set[members[0]]),
            ))
        j = _extreme(fam, members, _dominant_among, 'dominant')
        alpha = fam.alpha(fam.ground_set[j])
        if not alpha.is_partition():
            raise InvolutionError('Dominant element {} has descent composition {} which is not a partition'.format(
                fam.render(fam.ground_set[j]), alpha.parts,
            ))
        p = alpha.to_partition()
        terms[p] = terms.get(p, QPoly()) + QPoly.monomial(values.pop())
    return SchurExpansion(fam.n, terms)


def _path_colors(fam, source, target):  # type: (InvolutionFamily, int, int) -> List[int]
    parents = {source: None}  # type: Dict[int, Optional[Tuple[int, int]]]
    queue = collections.deque([source])
    while queue and target not in parents:
        j = queue.popleft()
        for i in fam.colors:
            image = fam.tables[i][j]
            if image not in parents:
                parents[image] = (j, i)
                queue.append(image)
    colors = []
    step = target
    while parents[step] is not None:
        previous, color = parents[step]  # type: ignore
        colors.append(color)
        step = previous
    return colors[::-1]


def implicit_rectification(x, fam):  # type: (Any, InvolutionFamily) -> StandardFilling
    """
    Walks from the dominant element of the class of `x` to `x`, and replays the same colors with `d_i` starting
    from the superstandard tableau of the dominant shape.
    """
    start = fam.index[x]
    members = _orbit(fam, start, list(fam.colors))
    dominant = _extreme(fam, members, _dominant_among, 'dominant')
    alpha = fam.alpha(fam.ground_set[dominant])
    if not alpha.is_partition():
        raise InvolutionError('Dominant element {} has descent composition {} which is not a partition'.format(
            fam.render(fam.ground_set[dominant]), alpha.parts,
        ))
    t = superstandard(alpha.to_partition())
    for color in _path_colors(fam, dominant, start):
        t = d_on_filling(color, t)
    return t


def words_family(n, twisted=False):  # type: (int, bool) -> InvolutionFamily
    """All permutations of `1..n` with `d_i` (or the twisted involutions), inverse descents and inversions."""
    move = twisted_d if twisted else elementary_d
    return InvolutionFamily(
        ground_set=itertools.permutations(range(1, n + 1)),
        n=n,
        descent_map=lambda w: descent_set(signature_of_word(w)),
        involutions={i: functools.partial(move, i) for i in range(2, n)},
        statistic=inversion_number,
    )


def tableaux_family(shape, max_cells=None):  # type: (Shape, Optional[int]) -> InvolutionFamily
    """The standard fillings of `shape` with `d_i`."""
    fillings = list(enumerate_standard(shape, max_cells=max_cells))
    return InvolutionFamily(
        ground_set=fillings,
        n=shape.size,
        descent_map=lambda t: descent_set(descent_signature(t)),
        involutions={i: functools.partial(d_on_filling, i) for i in range(2, shape.size)},
    )

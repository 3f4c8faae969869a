from __future__ import (
    absolute_import,
    unicode_literals,
)

import concurrent.futures
import functools
import itertools
import logging
from typing import (
    Any,
    Callable,
    Dict,
    FrozenSet,
    Iterable,
    List,
    Optional,
    Sequence,
    Tuple,
    Union,
)

import attr
import six
import sympy

from dualeq.constants import (
    FAILURE_CODE_NOT_SCHUR_POSITIVE,
    FAILURE_CODE_NOT_SYMMETRIC,
)
from dualeq.error import ShapeError
from dualeq.graphs.axioms import (
    AxiomReport,
    check_axioms,
)
from dualeq.graphs.core import (
    SignedColoredGraph,
    build_graph_from_family,
    components,
    generating_function,
)
from dualeq.involutions import (
    InvolutionFamily,
    Word,
    check_strong_dual_equivalence,
    check_weak_dual_equivalence,
    combined_D,
    elementary_d,
    format_word,
    schur_expansion_from_DE,
    twisted_d,
)
from dualeq.shapes import (
    Cell,
    Partition,
    ReadingPosition,
    Shape,
    SkewShape,
    TupleShape,
    components_of,
    format_shape,
    partitions,
    reading_positions,
    shifted_contents,
)
from dualeq.symfunc.qsym import (
    QPoly,
    QSymExpansion,
    SchurExpansion,
    extract_schur,
    monomial_symbols,
)
from dualeq.tableaux import (
    SemistandardFilling,
    StandardFilling,
    descent_set,
    descent_signature,
    enumerate_semistandard,
    enumerate_standard,
    signature_of_word,
)
from dualeq.types import (
    CheckReport,
    Failure,
)
from dualeq.utils import attr_is_int_sequence


__all__ = (
    'AttackingVector',
    'DiagonalData',
    'ShapeReport',
    'attacking_family',
    'attacking_vector_of',
    'attacking_vectors',
    'conjecture_shapes',
    'd_graph',
    'diagonal_data',
    'dinv',
    'llt_polynomial',
    'llt_semistandard_eval',
    'shifted_content',
    'sweep',
    'tuple_family',
    'verify_attacking_vectors',
    'verify_conjecture',
    'verify_two_tuple',
)


_logger = logging.getLogger(__name__)


CellPair = Tuple[ReadingPosition, ReadingPosition]


def shifted_content(c, index, k):  # type: (Cell, int, int) -> int
    if not 0 <= index < k:
        raise ShapeError('Shape index {} is outside 0..{}'.format(index, k - 1))
    return k * c.content + index


@attr.s(frozen=True)
class DiagonalData(object):
    """
    Diagonal inversions and diagonal descents of a tuple filling, as pairs `(x, y)` of reading positions with `x`
    of smaller shifted content and the larger entry.
    """
    inversions = attr.ib(converter=frozenset)  # type: FrozenSet[CellPair]
    descents = attr.ib(converter=frozenset)  # type: FrozenSet[CellPair]
    entries = attr.ib(repr=False)  # type: Dict[ReadingPosition, int]

    @property
    def dinv(self):  # type: () -> int
        return len(self.inversions)

    def inversion_entries(self):  # type: () -> List[Tuple[int, int]]
        return sorted((self.entries[x], self.entries[y]) for x, y in self.inversions)

    def descent_entries(self):  # type: () -> List[Tuple[int, int]]
        return sorted((self.entries[x], self.entries[y]) for x, y in self.descents)


def diagonal_data(t):  # type: (Union[StandardFilling, SemistandardFilling]) -> DiagonalData
    """
    A pair of positions is a diagonal inversion when its shifted contents differ by strictly between `0` and `k`, and
    a diagonal descent when they differ by exactly `k`, provided the position of smaller shifted content holds the
    strictly larger entry.
    """
    k = len(components_of(t.shape))
    positions = reading_positions(t.shape)
    contents = shifted_contents(t.shape)
    entries = dict(zip(positions, t.labels))
    inversions = []
    descents = []
    for a, b in itertools.combinations(range(len(positions)), 2):
        # Reading order sorts by shifted content, so gaps are never negative
        gap = contents[b] - contents[a]
        if gap > k:
            continue
        if t.labels[a] > t.labels[b]:
            if 0 < gap < k:
                inversions.append((positions[a], positions[b]))
            elif gap == k:
                descents.append((positions[a], positions[b]))
    return DiagonalData(inversions, descents, entries)


def dinv(t):  # type: (Union[StandardFilling, SemistandardFilling]) -> int
    return diagonal_data(t).dinv


def _as_tuple_shape(mu):  # type: (Shape) -> Shape
    if not isinstance(mu, (SkewShape, TupleShape)):
        raise ShapeError('Expected a shape or a tuple of shapes (got {!r})'.format(mu))
    return mu


def llt_polynomial(mu, max_cells=None):  # type: (Shape, Optional[int]) -> QSymExpansion
    """Sums `q^dinv(T) Q_sigma(T)` over the standard fillings `T` of `mu`."""
    fillings = list(enumerate_standard(_as_tuple_shape(mu), max_cells=max_cells))
    return QSymExpansion.from_signatures(
        mu.size,
        (descent_signature(t) for t in fillings),
        (QPoly.monomial(dinv(t)) for t in fillings),
    )


def llt_semistandard_eval(mu, m, q_value=1, max_cells=None):  # type: (Shape, int, int, Optional[int]) -> sympy.Poly
    """
    Sums `q^dinv(T) x^T` over the semistandard fillings of `mu` with entries at most `m`, with `q` set to `q_value`.
    """
    coefficients = {}  # type: Dict[Tuple[int, ...], int]
    for t in enumerate_semistandard(_as_tuple_shape(mu), m, max_cells=max_cells):
        weight = t.weight(m)
        coefficients[weight] = coefficients.get(weight, 0) + q_value ** dinv(t)
    return sympy.Poly.from_dict(coefficients or {(0,) * m: 0}, *monomial_symbols(m), domain='ZZ')


def tuple_family(mu, max_cells=None):  # type: (Shape, Optional[int]) -> InvolutionFamily
    """The standard fillings of `mu` with the combined involutions `D_i` and the statistic `dinv`."""
    fillings = list(enumerate_standard(_as_tuple_shape(mu), max_cells=max_cells))
    return InvolutionFamily(
        ground_set=fillings,
        n=mu.size,
        descent_map=lambda t: descent_set(descent_signature(t)),
        involutions={i: functools.partial(combined_D, i) for i in range(2, mu.size)},
        statistic=dinv,
    )


def d_graph(mu, max_cells=None):  # type: (Shape, Optional[int]) -> SignedColoredGraph
    """
    The graph of the combined involutions on the standard fillings of `mu`, with `dinv` as vertex statistic.
    Vertices are ordered by reading word.
    """
    graph = build_graph_from_family(tuple_family(mu, max_cells=max_cells))
    _logger.debug('D graph of %s has %d vertices', format_shape(mu), len(graph))
    return graph


@attr.s
class ShapeReport(object):
    """The outcome of verifying one shape: its failures, axiom verdicts when checked, and its Schur expansion."""
    shape = attr.ib()  # type: Shape
    check = attr.ib(factory=CheckReport)  # type: CheckReport
    axioms = attr.ib(default=None)  # type: Optional[AxiomReport]
    expansion = attr.ib(default=None)  # type: Optional[SchurExpansion]

    @property
    def passed(self):  # type: () -> bool
        return self.check.passed and (self.axioms is None or self.axioms.passed)

    def as_dict(self):  # type: () -> Dict[six.text_type, Any]
        result = {
            'shape': format_shape(self.shape),
            'passed': self.passed,
            'failures': [f.as_dict() for f in self.check.failures],
        }  # type: Dict[six.text_type, Any]
        if self.axioms is not None:
            result['axioms'] = self.axioms.as_dict()
        if self.expansion is not None:
            result['expansion'] = six.text_type(self.expansion)
        return result


def verify_two_tuple(mu, max_cells=None):  # type: (Shape, Optional[int]) -> ShapeReport
    """
    For at most two shapes the combined involutions form a strong dual equivalence: runs the strong check on the
    family and all six axioms on its graph, and on success reports the Schur expansion weighted by `dinv`.
    """
    if len(components_of(mu)) > 2:
        raise ShapeError('{} has more than two shapes'.format(format_shape(mu)))
    family = tuple_family(mu, max_cells=max_cells)
    report = ShapeReport(
        mu,
        check_strong_dual_equivalence(family),
        check_axioms(build_graph_from_family(family)),
    )
    if report.passed:
        report.expansion = schur_expansion_from_DE(family)
    else:
        _logger.warning('Shape %s fails the strong dual equivalence check', format_shape(mu))
    return report


def verify_conjecture(mu, max_cells=None):  # type: (Shape, Optional[int]) -> ShapeReport
    """
    Every component of the graph of the combined involutions must have a symmetric, Schur positive generating
    function. Failures carry the whole component.
    """
    graph = d_graph(mu, max_cells=max_cells)
    report = ShapeReport(mu)
    total = SchurExpansion(graph.N)
    for c in components(graph):
        expansion = extract_schur(generating_function(c))
        total = total + expansion
        if expansion.is_schur_positive:
            continue
        code, message = (
            (FAILURE_CODE_NOT_SYMMETRIC, 'Component is not symmetric') if not expansion.in_schur_span else
            (FAILURE_CODE_NOT_SCHUR_POSITIVE, 'Component is not Schur positive')
        )
        _logger.warning('%s in %s', message, format_shape(mu))
        report.check.failures.append(Failure(
            message,
            pointer='component',
            code=code,
            witness={
                'vertices': [v.label for v in c.vertices],
                'stat': [v.stat for v in c.vertices],
                'expansion': six.text_type(expansion),
                'residual': six.text_type(expansion.residual),
            },
        ))
    report.expansion = total
    return report


def _straight_tuples(max_size, k):  # type: (int, int) -> Iterable[Tuple[Partition, ...]]
    by_size = [list(partitions(size)) for size in range(max_size + 1)]
    for sizes in itertools.product(range(max_size + 1), repeat=k):
        if not 1 <= sum(sizes) <= max_size:
            continue
        for parts in itertools.product(*(by_size[size] for size in sizes)):
            yield parts


def _skew_shapes(max_outer):  # type: (int) -> List[SkewShape]
    found = []
    for outer_size in range(1, max_outer + 1):
        for outer in partitions(outer_size):
            for inner_size in range(1, outer_size):
                for inner in partitions(inner_size):
                    if outer.contains(inner):
                        found.append(SkewShape(outer, inner))
    return found


def conjecture_shapes(max_size, k, include_skew=False):  # type: (int, int, bool) -> List[TupleShape]
    """
    All `k`-tuples of partitions, empty ones included, of total size `1..max_size`. With `include_skew`, and only
    for `k <= 2` and `max_size <= 6`, components may also be skew shapes whose outer shape has at most `max_size`
    cells.
    """
    if max_size < 1 or k < 1:
        raise ShapeError('Sweeps need a positive size and a positive number of shapes')
    shapes = [TupleShape(tuple(SkewShape(p) for p in parts)) for parts in _straight_tuples(max_size, k)]
    if include_skew and k <= 2 and max_size <= 6:
        pool = [SkewShape(p) for size in range(max_size + 1) for p in partitions(size)] + _skew_shapes(max_size)
        for combination in itertools.product(pool, repeat=k):
            if any(not c.is_straight for c in combination) and 1 <= sum(c.size for c in combination) <= max_size:
                shapes.append(TupleShape(combination))
    _logger.debug('Sweep over %d shapes of size at most %d with k=%d', len(shapes), max_size, k)
    return shapes


def sweep(shapes, check=verify_conjecture, jobs=1):
    # type: (Sequence[Shape], Callable[[Shape], ShapeReport], int) -> List[ShapeReport]
    """
    Runs `check` on every shape, in worker processes when `jobs > 1`. Reports come back in the order of `shapes`.
    """
    if jobs <= 1:
        return [check(mu) for mu in shapes]
    with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(check, shapes))


@attr.s(frozen=True)
class AttackingVector(object):
    """
    `a[j - 1]` is the rightmost position attacked by position `j`, for `j = 1 .. n - 1`: weakly increasing, with
    `j + 1 <= a_j <= n`.
    """
    a = attr.ib(validator=attr_is_int_sequence(minimum=2, error=ShapeError))  # type: Tuple[int, ...]

    def __attrs_post_init__(self):
        n = len(self.a) + 1
        for j, value in enumerate(self.a, 1):
            if not j + 1 <= value <= n:
                raise ShapeError('Entry a_{}={} is outside {}..{}'.format(j, value, j + 1, n))
        if any(x > y for x, y in zip(self.a, self.a[1:])):
            raise ShapeError('Attacking vector {} is not weakly increasing'.format(list(self.a)))

    @property
    def n(self):  # type: () -> int
        return len(self.a) + 1

    def attacks(self, p, q):  # type: (int, int) -> bool
        """Whether position `p` attacks position `q`, both counted from 1."""
        return p < q <= self.a[p - 1]


def attacking_vectors(n):  # type: (int) -> List[AttackingVector]
    """All attacking vectors for words of length `n`; there are Catalan many."""
    if n < 2:
        raise ShapeError('Attacking vectors need n >= 2 (got {})'.format(n))
    found = []

    def extend(prefix):
        j = len(prefix) + 1
        if j == n:
            found.append(AttackingVector(tuple(prefix)))
            return
        low = max(j + 1, prefix[-1] if prefix else 0)
        for value in range(low, n + 1):
            extend(prefix + [value])

    extend([])
    return found


def attacking_vector_of(mu):  # type: (Shape) -> AttackingVector
    """Position `j` attacks every later position whose shifted content exceeds its own by at most `k`."""
    k = len(components_of(mu))
    contents = shifted_contents(mu)
    n = len(contents)
    if n < 2:
        raise ShapeError('{} has fewer than two cells'.format(format_shape(mu)))
    a = []
    for j in range(n - 1):
        reach = max(q for q in range(j, n) if contents[q] - contents[j] <= k)
        a.append(max(j + 2, reach + 1))
    return AttackingVector(tuple(a))


def _attacking_move(vector, i, word):  # type: (AttackingVector, int, Word) -> Word
    where = {letter: position for position, letter in enumerate(word, 1)}
    left = min(where[i - 1], where[i], where[i + 1])
    right = max(where[i - 1], where[i], where[i + 1])
    if vector.attacks(left, right):
        return twisted_d(i, word)
    return elementary_d(i, word)


def attacking_family(vector):  # type: (AttackingVector) -> InvolutionFamily
    """
    All permutations of `1..n`, moved by the twisted involution when the leftmost of `i - 1, i, i + 1` attacks the
    rightmost and by `d_i` otherwise.
    """
    n = vector.n
    return InvolutionFamily(
        ground_set=itertools.permutations(range(1, n + 1)),
        n=n,
        descent_map=lambda w: descent_set(signature_of_word(w)),
        involutions={i: functools.partial(_attacking_move, vector, i) for i in range(2, n)},
        render=format_word,
    )


def verify_attacking_vectors(n):  # type: (int) -> List[Tuple[AttackingVector, CheckReport]]
    """Runs the weak dual equivalence check on the family of every attacking vector for words of length `n`."""
    results = []
    for vector in attacking_vectors(n):
        report = check_weak_dual_equivalence(attacking_family(vector))
        if not report.passed:
            _logger.warning('Attacking vector %s fails the weak check', list(vector.a))
        results.append((vector, report))
    return results

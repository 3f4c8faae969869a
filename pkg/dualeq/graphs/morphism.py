from __future__ import (
    absolute_import,
    unicode_literals,
)

import collections
import logging
from typing import (
    Any,
    Dict,
    List,
    Optional,
)

import attr
import six

from dualeq.constants import (
    DOMINANCE_EQUAL,
    DOMINANCE_GREATER,
    FAILURE_CODE_AXIOM,
    FAILURE_CODE_COVER,
    FAILURE_CODE_FIBER,
    FAILURE_CODE_NO_DOMINANT,
    FAILURE_CODE_PROPAGATION,
)
from dualeq.error import ClassificationError
from dualeq.graphs.axioms import check_axioms
from dualeq.graphs.core import (
    SignedColoredGraph,
    components,
    label_index,
    restrict,
    standard_graph,
)
from dualeq.shapes import (
    Composition,
    Partition,
    composition_from_descent_set,
    dominance_leq,
)
from dualeq.symfunc.qsym import (
    QPoly,
    SchurExpansion,
)
from dualeq.tableaux import (
    descent_set,
    format_filling,
    superstandard,
)
from dualeq.types import Failure
from dualeq.utils import attr_is_instance


__all__ = (
    'Classification',
    'Morphism',
    'classify_component',
    'graph_schur_expansion',
    'is_morphism',
)


_logger = logging.getLogger(__name__)


@attr.s(frozen=True)
class Morphism(object):
    """A map of vertex ids from `source` to `target`."""
    source = attr.ib(validator=attr_is_instance(SignedColoredGraph))  # type: SignedColoredGraph
    target = attr.ib(validator=attr_is_instance(SignedColoredGraph))  # type: SignedColoredGraph
    map = attr.ib(converter=dict)  # type: Dict[int, int]

    def __call__(self, vertex_id):  # type: (int) -> int
        return self.map[vertex_id]

    def fibers(self):  # type: () -> Dict[int, List[int]]
        result = collections.defaultdict(list)  # type: Dict[int, List[int]]
        for v, image in sorted(self.map.items()):
            result[image].append(v)
        return dict(result)


@attr.s(frozen=True)
class Classification(object):
    partition = attr.ib(validator=attr_is_instance(Partition))  # type: Partition
    morphism = attr.ib(validator=attr_is_instance(Morphism))  # type: Morphism
    multiplicity = attr.ib()  # type: int

    @property
    def is_isomorphism(self):  # type: () -> bool
        return self.multiplicity == 1

    def as_dict(self):  # type: () -> Dict[six.text_type, Any]
        return {
            'partition': list(self.partition.parts),
            'multiplicity': self.multiplicity,
            'vertices': sorted(self.morphism.map),
        }


def is_morphism(phi):  # type: (Morphism) -> bool
    """
    True when `phi` is defined on every source vertex, keeps signatures in all coordinates, and sends each `i`-edge
    to an `i`-edge.
    """
    source, target = phi.source, phi.target
    if source.n != target.n or source.N != target.N:
        return False
    if set(phi.map) != set(source.ids) or not set(phi.map.values()) <= set(target.ids):
        return False
    for v in source.vertices:
        if v.sigma != target.sigma(phi(v.id)):
            return False
    for i, pairs in source.edges.items():
        for a, b in pairs:
            if not target.has_edge(phi(a), phi(b), i):
                return False
    return True


def _composition(g, vertex_id):  # type: (SignedColoredGraph, int) -> Composition
    return composition_from_descent_set(descent_set(g.sigma(vertex_id)), g.N)


def _fail(message, code, **witness):  # type: (six.text_type, six.text_type, **Any) -> ClassificationError
    _logger.info(message)
    return ClassificationError(message, Failure(message, pointer='component', code=code, witness=witness))


def _dominant_vertices(c):  # type: (SignedColoredGraph) -> List[int]
    alphas = {v: _composition(c, v) for v in c.ids}
    return [
        v for v in c.ids
        if all(dominance_leq(alphas[v], b) in (DOMINANCE_GREATER, DOMINANCE_EQUAL) for b in alphas.values())
    ]


def classify_component(c, require_iso=False, anchor=None):
    # type: (SignedColoredGraph, bool, Optional[int]) -> Classification
    """
    Maps the connected graph `c` onto the standard graph of its dominant signature. The vertex whose signature
    dominates every other one (the lowest id among them, unless `anchor` names one) goes to the superstandard
    tableau, and the map spreads along edges using the uniqueness of `i`-neighbors. Covers are reported through
    `multiplicity`; with `require_iso` a cover is an error.
    """
    if len(c) == 0:
        raise _fail('Cannot classify an empty graph', FAILURE_CODE_FIBER)
    if c.N > c.n:
        c = restrict(c, c.n, c.n)
    if len(components(c)) != 1:
        raise _fail('Component is not connected', FAILURE_CODE_FIBER, vertices=c.ids)

    axioms = check_axioms(c, (1, 2, 3))
    if not axioms.passed:
        first = axioms.results[axioms.failed_axioms[0]].failures[0]
        raise _fail(
            'Component fails axiom {}: {}'.format(axioms.failed_axioms[0], first.message),
            FAILURE_CODE_AXIOM,
            **first.witness
        )

    dominant = _dominant_vertices(c)
    if not dominant:
        raise _fail('No vertex signature dominates the component', FAILURE_CODE_NO_DOMINANT, vertices=c.ids)
    alpha = _composition(c, dominant[0])
    if not alpha.is_partition():
        raise _fail(
            'Dominant signature has composition {} which is not a partition'.format(list(alpha.parts)),
            FAILURE_CODE_NO_DOMINANT,
            vertices=dominant,
        )
    partition = alpha.to_partition()
    if anchor is None:
        anchor = dominant[0]
    elif anchor not in dominant:
        raise _fail('Vertex {} is not dominant'.format(anchor), FAILURE_CODE_NO_DOMINANT, vertices=dominant)

    target = standard_graph(partition)
    start = label_index(target)[format_filling(superstandard(partition))]
    mapping = {anchor: start}
    queue = collections.deque([anchor])
    while queue:
        v = queue.popleft()
        for i in c.colors:
            u = c.neighbor(v, i)
            if u is None:
                continue
            image = target.neighbor(mapping[v], i)
            if image is None:
                raise _fail(
                    'Vertex {} has an {}-neighbor but its image does not'.format(v, i),
                    FAILURE_CODE_PROPAGATION,
                    color=i,
                    vertices=[v, u],
                )
            if u in mapping and mapping[u] != image:
                raise _fail(
                    'Vertex {} is reached with two different images'.format(u),
                    FAILURE_CODE_PROPAGATION,
                    color=i,
                    vertices=[v, u],
                )
            if u not in mapping:
                if c.sigma(u) != target.sigma(image):
                    raise _fail(
                        'Vertex {} and its image disagree on signature'.format(u),
                        FAILURE_CODE_PROPAGATION,
                        color=i,
                        vertices=[v, u],
                    )
                mapping[u] = image
                queue.append(u)

    morphism = Morphism(c, target, mapping)
    fibers = morphism.fibers()
    if len(c) % len(target) or len(fibers) != len(target):
        raise _fail(
            'Component of {} vertices does not cover the {} vertices of the standard graph of {}'.format(
                len(c), len(target), partition,
            ),
            FAILURE_CODE_FIBER,
            partition=list(partition.parts),
        )
    multiplicity = len(c) // len(target)
    if any(len(fiber) != multiplicity for fiber in fibers.values()) or len(dominant) != multiplicity:
        raise _fail('Fibers over the standard graph of {} are uneven'.format(partition), FAILURE_CODE_FIBER)
    if require_iso and multiplicity > 1:
        raise _fail(
            'Component is a {}-fold cover of the standard graph of {}'.format(multiplicity, partition),
            FAILURE_CODE_COVER,
            partition=list(partition.parts),
            multiplicity=multiplicity,
        )
    _logger.debug('Component of %d vertices maps onto %s with multiplicity %d', len(c), partition, multiplicity)
    return Classification(partition, morphism, multiplicity)


def graph_schur_expansion(g, require_iso=False):  # type: (SignedColoredGraph, bool) -> SchurExpansion
    """
    Classifies every component and adds `q^stat * multiplicity * s_partition`. The statistic must be constant on
    components.
    """
    terms = {}  # type: Dict[Partition, QPoly]
    for c in components(g):
        values = set(v.stat or 0 for v in c.vertices)
        if len(values) > 1:
            raise _fail(
                'Statistic takes values {} on one component'.format(sorted(values)),
                FAILURE_CODE_FIBER,
                vertices=c.ids,
            )
        result = classify_component(c, require_iso=require_iso)
        terms[result.partition] = (
            terms.get(result.partition, QPoly()) + result.multiplicity * QPoly.monomial(values.pop())
        )
    return SchurExpansion(g.n, terms)

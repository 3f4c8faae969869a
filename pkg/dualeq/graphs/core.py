from __future__ import (
    absolute_import,
    unicode_literals,
)

import logging
from typing import (
    Dict,
    Iterable,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
)

import attr
import networkx as nx
import six

from dualeq.error import (
    AugmentationError,
    FillingError,
    GraphError,
    ShapeError,
)
from dualeq.involutions import (
    InvolutionFamily,
    d_on_filling,
)
from dualeq.shapes import (
    Cell,
    Partition,
    SkewShape,
    reading_positions,
)
from dualeq.symfunc.qsym import (
    QPoly,
    QSymExpansion,
)
from dualeq.tableaux import (
    Signature,
    StandardFilling,
    descent_signature,
    enumerate_standard,
    format_filling,
    parse_filling,
    transpose,
)
from dualeq.utils import (
    attr_is_int,
    attr_is_optional,
    attr_is_string,
)


__all__ = (
    'Edge',
    'SignedColoredGraph',
    'Vertex',
    'augmented_graph',
    'build_graph_from_family',
    'components',
    'conjugate_graph',
    'edge_labels',
    'generating_function',
    'label_index',
    'restrict',
    'standard_graph',
)


_logger = logging.getLogger(__name__)


Edge = Tuple[int, int]


def _as_signature(value):
    return tuple(value)


@attr.s(frozen=True)
class Vertex(object):
    id = attr.ib(validator=attr_is_int())  # type: int
    sigma = attr.ib(converter=_as_signature)  # type: Signature
    label = attr.ib(default=None, validator=attr_is_optional(attr_is_string()))  # type: Optional[six.text_type]
    stat = attr.ib(default=None, validator=attr_is_optional(attr_is_int()))  # type: Optional[int]


def _as_edges(value):
    return {int(i): tuple(sorted(tuple(sorted(pair)) for pair in pairs)) for i, pairs in value.items()}


@attr.s(frozen=True, eq=False)
class SignedColoredGraph(object):
    """
    Vertices with signatures of length `N - 1` and, for each color `2 .. n - 1`, a matching of `i`-edges. A vertex
    lies on at most one edge of each color.
    """
    n = attr.ib(validator=attr_is_int())  # type: int
    N = attr.ib(validator=attr_is_int())  # type: int
    vertices = attr.ib(converter=tuple)  # type: Tuple[Vertex, ...]
    edges = attr.ib(factory=dict, converter=_as_edges)  # type: Dict[int, Tuple[Edge, ...]]

    def __attrs_post_init__(self):
        if self.n < 0 or self.N < self.n:
            raise GraphError('Type ({}, {}) is invalid'.format(self.n, self.N))
        by_id = {}  # type: Dict[int, Vertex]
        for v in self.vertices:
            if v.id in by_id:
                raise GraphError('Vertex id {} is repeated'.format(v.id))
            if len(v.sigma) != max(self.N - 1, 0) or any(s not in (1, -1) for s in v.sigma):
                raise GraphError('Vertex {} has a signature of the wrong form'.format(v.id))
            by_id[v.id] = v
        neighbors = {}  # type: Dict[Tuple[int, int], int]
        for i, pairs in self.edges.items():
            if not 1 < i < self.n:
                raise GraphError('Color {} is outside 2..{}'.format(i, self.n - 1))
            for a, b in pairs:
                if a == b:
                    raise GraphError('{}-edge at vertex {} is a loop'.format(i, a))
                for end in (a, b):
                    if end not in by_id:
                        raise GraphError('{}-edge endpoint {} is not a vertex'.format(i, end))
                    if (end, i) in neighbors:
                        raise GraphError('Vertex {} lies on two {}-edges'.format(end, i))
                neighbors[(a, i)] = b
                neighbors[(b, i)] = a
        object.__setattr__(self, '_by_id', by_id)
        object.__setattr__(self, '_neighbors', neighbors)

    @property
    def colors(self):  # type: () -> range
        return range(2, self.n)

    @property
    def ids(self):  # type: () -> List[int]
        return [v.id for v in self.vertices]

    def vertex(self, vertex_id):  # type: (int) -> Vertex
        return self._by_id[vertex_id]  # type: ignore

    def sigma(self, vertex_id):  # type: (int) -> Signature
        return self.vertex(vertex_id).sigma

    def stat(self, vertex_id):  # type: (int) -> int
        return self.vertex(vertex_id).stat or 0

    def neighbor(self, vertex_id, i):  # type: (int, int) -> Optional[int]
        return self._neighbors.get((vertex_id, i))  # type: ignore

    def has_edge(self, a, b, i):  # type: (int, int, int) -> bool
        return self.neighbor(a, i) == b

    def __len__(self):  # type: () -> int
        return len(self.vertices)

    def to_networkx(self, colors=None):  # type: (Optional[Iterable[int]]) -> nx.MultiGraph
        """A multigraph on the vertex ids with one edge per colored edge, carrying its color in `color`."""
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.ids)
        wanted = set(self.colors if colors is None else colors)
        for i, pairs in self.edges.items():
            if i in wanted:
                graph.add_edges_from(pairs, color=i)
        return graph

    def subgraph(self, vertex_ids):  # type: (Iterable[int]) -> SignedColoredGraph
        keep = set(vertex_ids)
        return SignedColoredGraph(
            self.n,
            self.N,
            [v for v in self.vertices if v.id in keep],
            {i: [(a, b) for a, b in pairs if a in keep and b in keep] for i, pairs in self.edges.items()},
        )

    def __eq__(self, other):
        if not isinstance(other, SignedColoredGraph):
            return NotImplemented
        return (
            (self.n, self.N) == (other.n, other.N) and
            sorted(self.vertices, key=lambda v: v.id) == sorted(other.vertices, key=lambda v: v.id) and
            {i: p for i, p in self.edges.items() if p} == {i: p for i, p in other.edges.items() if p}
        )

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None  # type: ignore


def _graph_from_fillings(fillings, n, N, moves, labels=None, signatures=None):
    index = {t: j for j, t in enumerate(fillings)}
    vertices = [
        Vertex(
            j,
            signatures[j] if signatures else descent_signature(t),
            labels[j] if labels else format_filling(t),
        )
        for j, t in enumerate(fillings)
    ]
    edges = {}  # type: Dict[int, List[Edge]]
    for i in range(2, n):
        pairs = set()
        for j, t in enumerate(fillings):
            image = index[moves(i, t)]
            if image != j:
                pairs.add((min(j, image), max(j, image)))
        edges[i] = sorted(pairs)
    return SignedColoredGraph(n, N, vertices, edges)


def standard_graph(p, max_cells=None):  # type: (Partition, Optional[int]) -> SignedColoredGraph
    """The graph on the standard tableaux of shape `p`, with `d_i` edges and descent signatures."""
    if not p.parts:
        raise ShapeError('The standard graph needs a nonempty partition')
    fillings = list(enumerate_standard(SkewShape(p), max_cells=max_cells))
    graph = _graph_from_fillings(fillings, p.size, p.size, d_on_filling)
    _logger.debug('Standard graph of %s has %d vertices', p, len(graph))
    return graph


def build_graph_from_family(fam, N=None):  # type: (InvolutionFamily, Optional[int]) -> SignedColoredGraph
    """
    Signatures are `-1` exactly at descents; `i`-edges join each element moved by `phi_i` to its image. Signatures
    are padded with `+1` up to length `N - 1`.
    """
    N = fam.n if N is None else N
    if N < fam.n:
        raise GraphError('N={} is smaller than n={}'.format(N, fam.n))
    vertices = []
    for j, x in enumerate(fam.ground_set):
        sigma = tuple(-1 if d in fam.descents[j] else 1 for d in range(1, N))
        stat = fam.stat(x) if fam.statistic else None
        vertices.append(Vertex(j, sigma, fam.render(x), stat))
    edges = {}  # type: Dict[int, List[Edge]]
    for i in fam.colors:
        table = fam.tables[i]
        edges[i] = [(j, image) for j, image in enumerate(table) if j < image]
    return SignedColoredGraph(fam.n, N, vertices, edges)


def augmented_graph(p, augmentation):  # type: (Partition, Mapping[Cell, int]) -> SignedColoredGraph
    """
    The graph on standard tableaux of shape `p` extended by the fixed `augmentation`, a filling of the cells of
    `rho / p` with `n + 1 .. N`. Signatures run over all of `1..N`; edges use only the colors below `n`.
    """
    if not p.parts:
        raise ShapeError('Augmentation needs a nonempty partition')
    n = p.size
    N = n + len(augmentation)
    if sorted(augmentation.values()) != list(range(n + 1, N + 1)):
        raise AugmentationError('Augmenting entries must be exactly {}..{}'.format(n + 1, N))
    rows = {}  # type: Dict[int, int]
    for row in range(1, len(p) + 1):
        rows[row] = p.row(row)
    for cell in augmentation:
        if cell in SkewShape(p):
            raise AugmentationError('Augmenting cell {} lies inside {}'.format(cell, p))
        rows[cell.row] = max(rows.get(cell.row, 0), cell.col)
    try:
        rho = Partition(tuple(rows[r] for r in range(1, max(rows) + 1)))
    except (KeyError, ShapeError):
        raise AugmentationError('Augmenting cells do not extend {} to a partition'.format(p))
    outer = SkewShape(rho)
    if rho.size != N:
        raise AugmentationError('Augmenting cells do not extend {} to a partition'.format(p))
    base = list(enumerate_standard(SkewShape(p)))
    combined = []
    for t in base:
        lookup = {cell: label for (_, cell), label in t.entries().items()}
        lookup.update(augmentation)
        try:
            combined.append(StandardFilling(outer, [lookup[cell] for _, cell in reading_positions(outer)]))
        except FillingError as e:
            raise AugmentationError('Augmentation does not extend {}: {}'.format(format_filling(t), e))
    # Edges come from the base tableaux, signatures from the augmented ones
    return _graph_from_fillings(
        base,
        n,
        N,
        d_on_filling,
        labels=[format_filling(c) for c in combined],
        signatures=[descent_signature(c) for c in combined],
    )


def restrict(g, m, M):  # type: (SignedColoredGraph, int, int) -> SignedColoredGraph
    """Keeps the first `M - 1` signature entries and the colors below `m`."""
    if not (1 <= m <= g.n and M <= g.N and m <= M):
        raise GraphError('Cannot restrict a graph of type ({}, {}) to ({}, {})'.format(g.n, g.N, m, M))
    return SignedColoredGraph(
        m,
        M,
        [attr.evolve(v, sigma=v.sigma[:M - 1]) for v in g.vertices],
        {i: pairs for i, pairs in g.edges.items() if i < m},
    )


def components(g):  # type: (SignedColoredGraph) -> List[SignedColoredGraph]
    """Connected components, each listed by its smallest vertex id and ordered that way."""
    parts = [sorted(c) for c in nx.connected_components(g.to_networkx())]
    parts.sort(key=lambda c: c[0])
    return [g.subgraph(c) for c in parts]


def conjugate_graph(g):  # type: (SignedColoredGraph) -> SignedColoredGraph
    """
    Negates every signature entry and transposes vertex labels that are tableaux of a single shape.
    """
    vertices = []
    for v in g.vertices:
        label = v.label
        if label is not None:
            try:
                label = format_filling(transpose(parse_filling(label)))
            except (FillingError, ShapeError):
                pass
        vertices.append(attr.evolve(v, sigma=tuple(-s for s in v.sigma), label=label))
    return SignedColoredGraph(g.n, g.N, vertices, g.edges)


def generating_function(g):  # type: (SignedColoredGraph) -> QSymExpansion
    """Sums `q^stat(v) Q_sigma(v)` over the vertices."""
    return QSymExpansion.from_signatures(
        g.N,
        (v.sigma for v in g.vertices),
        (QPoly.monomial(v.stat or 0) for v in g.vertices),
    )


def label_index(g):  # type: (SignedColoredGraph) -> Dict[six.text_type, int]
    return {v.label: v.id for v in g.vertices if v.label is not None}


def edge_labels(g):  # type: (SignedColoredGraph) -> Dict[int, Sequence[Tuple[six.text_type, six.text_type]]]
    """Each color's edges as sorted label pairs, for comparing graphs with different vertex ids."""
    labels = {v.id: v.label for v in g.vertices}
    return {
        i: sorted(tuple(sorted((labels[a], labels[b]))) for a, b in pairs)  # type: ignore
        for i, pairs in g.edges.items()
        if pairs
    }

from __future__ import (
    absolute_import,
    unicode_literals,
)

import functools
import itertools
import logging
from typing import (
    Any,
    Dict,
    List,
    Sequence,
    Tuple,
)

import attr
import networkx as nx
from networkx.algorithms.isomorphism import categorical_multiedge_match
import six

from dualeq.constants import FAILURE_CODE_AXIOM
from dualeq.graphs.core import (
    SignedColoredGraph,
    components,
    standard_graph,
)
from dualeq.shapes import partitions
from dualeq.types import (
    CheckReport,
    Failure,
)


__all__ = (
    'AXIOMS',
    'AxiomReport',
    'check_axiom_1',
    'check_axiom_2',
    'check_axiom_3',
    'check_axiom_4',
    'check_axiom_5',
    'check_axiom_6',
    'check_axioms',
)


_logger = logging.getLogger(__name__)


AXIOMS = (1, 2, 3, 4, 5, 6)


@attr.s
class AxiomReport(object):
    """One `CheckReport` per axiom, keyed by axiom number."""
    results = attr.ib(factory=dict)  # type: Dict[int, CheckReport]

    @property
    def passed(self):  # type: () -> bool
        return all(r.passed for r in self.results.values())

    @property
    def failed_axioms(self):  # type: () -> List[int]
        return sorted(axiom for axiom, r in self.results.items() if not r.passed)

    def passed_axioms(self, axioms):  # type: (Sequence[int]) -> bool
        return all(self.results[axiom].passed for axiom in axioms if axiom in self.results)

    def summary_lines(self):  # type: () -> List[six.text_type]
        lines = []
        for axiom in sorted(self.results):
            report = self.results[axiom]
            if report.passed:
                lines.append('axiom{}: pass'.format(axiom))
            else:
                first = report.failures[0]
                color = first.witness.get('color')
                where = ' at color {}'.format(color) if color is not None else ''
                lines.append('axiom{}: fail{} ({})'.format(axiom, where, first.message))
        return lines

    def as_dict(self):  # type: () -> Dict[six.text_type, Any]
        return {
            'passed': self.passed,
            'axioms': {six.text_type(axiom): r.as_dict() for axiom, r in sorted(self.results.items())},
        }


def _failure(axiom, message, **witness):  # type: (int, six.text_type, **Any) -> Failure
    witness['axiom'] = axiom
    return Failure(message, pointer='axiom{}'.format(axiom), code=FAILURE_CODE_AXIOM, witness=witness)


def _edges(g):  # type: (SignedColoredGraph) -> List[Tuple[int, int, int]]
    return [(a, b, i) for i, pairs in sorted(g.edges.items()) for a, b in pairs]


def check_axiom_1(g):  # type: (SignedColoredGraph) -> CheckReport
    """A vertex has an `i`-neighbor exactly when its signature changes sign between `i - 1` and `i`."""
    report = CheckReport()
    for v in g.vertices:
        for i in g.colors:
            admits = v.sigma[i - 2] == -v.sigma[i - 1]
            has = g.neighbor(v.id, i) is not None
            if admits != has:
                report.failures.append(_failure(
                    1,
                    'Vertex {} {} an {}-neighbor'.format(v.id, 'lacks' if admits else 'has an unexpected', i),
                    color=i,
                    vertices=[v.id],
                ))
    return report


def check_axiom_2(g):  # type: (SignedColoredGraph) -> CheckReport
    """An `i`-edge flips the signature at `i - 1` and `i` and leaves it alone below `i - 2` and above `i + 1`."""
    report = CheckReport()
    for a, b, i in _edges(g):
        sa, sb = g.sigma(a), g.sigma(b)
        for h in range(1, g.N):
            if h in (i - 1, i):
                broken = sa[h - 1] != -sb[h - 1]
            elif h < i - 2 or h > i + 1:
                broken = sa[h - 1] != sb[h - 1]
            else:
                continue
            if broken:
                report.failures.append(_failure(
                    2,
                    '{}-edge {}-{} breaks signature entry {}'.format(i, a, b, h),
                    color=i,
                    vertices=[a, b],
                    entry=h,
                ))
                break
    return report


def check_axiom_3(g):  # type: (SignedColoredGraph) -> CheckReport
    """
    When an `i`-edge flips entry `i - 2` (or `i + 1`), that entry must be opposite to entry `i - 1` (or `i`) at both
    endpoints.
    """
    report = CheckReport()
    for a, b, i in _edges(g):
        sa, sb = g.sigma(a), g.sigma(b)
        for h, partner in ((i - 2, i - 1), (i + 1, i)):
            if not 1 <= h <= g.N - 1 or sa[h - 1] == sb[h - 1]:
                continue
            for v, s in ((a, sa), (b, sb)):
                if s[h - 1] != -s[partner - 1]:
                    report.failures.append(_failure(
                        3,
                        '{}-edge {}-{} flips entry {} but vertex {} has it equal to entry {}'.format(
                            i, a, b, h, v, partner,
                        ),
                        color=i,
                        vertices=[a, b],
                        entry=h,
                    ))
    return report


@functools.lru_cache(maxsize=None)
def _templates(size):  # type: (int) -> Tuple[nx.MultiGraph, ...]
    """Components of the standard graphs of all partitions of `size`, with colors `2 .. size - 1`."""
    found = []
    for p in partitions(size):
        for c in components(standard_graph(p)):
            found.append(c.to_networkx())
    return tuple(found)


_EDGE_MATCH = categorical_multiedge_match('color', None)


def _matches_template(component, size):  # type: (nx.MultiGraph, int) -> bool
    for template in _templates(size):
        if (
            template.number_of_nodes() == component.number_of_nodes() and
            template.number_of_edges() == component.number_of_edges() and
            nx.is_isomorphic(component, template, edge_match=_EDGE_MATCH)
        ):
            return True
    return False


def _shifted_window(g, colors):  # type: (SignedColoredGraph, Sequence[int]) -> nx.MultiGraph
    """The graph on all vertices with edges of `colors` only, recolored to `2, 3, ...`."""
    graph = nx.MultiGraph()
    graph.add_nodes_from(g.ids)
    for shift, i in enumerate(colors):
        graph.add_edges_from(g.edges.get(i, ()), color=2 + shift)
    return graph


def check_axiom_4(g):  # type: (SignedColoredGraph) -> CheckReport
    """
    Components using two consecutive colors look like standard graphs of partitions of 4; components using three
    consecutive colors look like standard graphs of partitions of 5.
    """
    report = CheckReport()
    for width, size in ((2, 4), (3, 5)):
        for top in range(width + 1, g.n):
            colors = list(range(top - width + 1, top + 1))
            window = _shifted_window(g, colors)
            for nodes in nx.connected_components(window):
                component = window.subgraph(nodes)
                if not _matches_template(component, size):
                    report.failures.append(_failure(
                        4,
                        'Component on colors {} matches no standard graph of size {}'.format(colors, size),
                        color=top,
                        colors=colors,
                        vertices=sorted(nodes),
                    ))
    return report


def check_axiom_5(g):  # type: (SignedColoredGraph) -> CheckReport
    """Whenever `w -i- x -j- y` with `|i - j| >= 3`, there is `v` with `w -j- v -i- y`."""
    report = CheckReport()
    for x in g.ids:
        for i, j in itertools.permutations(g.colors, 2):
            if abs(i - j) < 3:
                continue
            w, y = g.neighbor(x, i), g.neighbor(x, j)
            if w is None or y is None:
                continue
            v = g.neighbor(w, j)
            if v is None or g.neighbor(v, i) != y:
                report.failures.append(_failure(
                    5,
                    'Colors {} and {} fail to close a square at vertex {}'.format(i, j, x),
                    color=max(i, j),
                    colors=[i, j],
                    vertices=[w, x, y],
                ))
    return report


def check_axiom_6(g):  # type: (SignedColoredGraph) -> CheckReport
    """
    Any two vertices of a component of colors `2..i` are joined by a path crossing at most one `i`-edge. Equivalently,
    collapsing the components of colors `2..i-1` inside it leaves a complete graph under `i`-adjacency.
    """
    report = CheckReport()
    for i in range(3, g.n):
        lower = g.to_networkx(range(2, i))
        block = {}  # type: Dict[int, int]
        for number, nodes in enumerate(nx.connected_components(lower)):
            for v in nodes:
                block[v] = number
        for nodes in nx.connected_components(g.to_networkx(range(2, i + 1))):
            blocks = set(block[v] for v in nodes)
            adjacent = set()
            for a, b in g.edges.get(i, ()):
                if a in nodes and block[a] != block[b]:
                    adjacent.add(frozenset((block[a], block[b])))
            if len(adjacent) != len(blocks) * (len(blocks) - 1) // 2:
                report.failures.append(_failure(
                    6,
                    'Collapsed component on colors 2..{} is not complete'.format(i),
                    color=i,
                    vertices=sorted(nodes),
                ))
    return report


_CHECKS = {
    1: check_axiom_1,
    2: check_axiom_2,
    3: check_axiom_3,
    4: check_axiom_4,
    5: check_axiom_5,
    6: check_axiom_6,
}


def check_axioms(g, axioms=AXIOMS):  # type: (SignedColoredGraph, Sequence[int]) -> AxiomReport
    """
    Runs the requested axiom checks. Graphs with fewer than three letters have no colors and pass vacuously.
    """
    report = AxiomReport()
    for axiom in axioms:
        report.results[axiom] = _CHECKS[axiom](g)
        if not report.results[axiom].passed:
            _logger.info('Axiom %d fails with %d witnesses', axiom, len(report.results[axiom].failures))
    return report

from __future__ import (
    absolute_import,
    unicode_literals,
)

import json
import logging
from typing import (
    Any,
    Dict,
    List,
    Mapping,
    Tuple,
)

from conformity.validator import validate
import six

from dualeq.fields import (
    GRAPH_SCHEMA,
    QSYM_SCHEMA,
)
from dualeq.graphs.core import (
    SignedColoredGraph,
    Vertex,
)
from dualeq.symfunc.qsym import (
    QPoly,
    QSymExpansion,
)
from dualeq.tableaux import (
    format_signature,
    parse_signature,
)


__all__ = (
    'graph_from_json',
    'graph_to_dot',
    'graph_to_json',
    'load_graph',
    'load_qsym',
    'qsym_from_json',
)


_logger = logging.getLogger(__name__)


def _vertex_line(v):  # type: (Vertex) -> six.text_type
    pieces = ['"id": {}'.format(v.id), '"sigma": {}'.format(json.dumps(format_signature(v.sigma)))]
    if v.label is not None:
        pieces.append('"label": {}'.format(json.dumps(v.label)))
    if v.stat is not None:
        pieces.append('"stat": {}'.format(v.stat))
    return '    {' + ', '.join(pieces) + '}'


def graph_to_json(g):  # type: (SignedColoredGraph) -> six.text_type
    """
    Writes the canonical text form: one vertex per line in vertex order, then every color `2 .. n - 1` with its sorted
    edge list. Bundled fixtures are stored in exactly this form.
    """
    if g.vertices:
        vertices = '[\n' + ',\n'.join(_vertex_line(v) for v in g.vertices) + '\n  ]'
    else:
        vertices = '[]'
    colors = [
        '    "{}": [{}]'.format(i, ', '.join('[{}, {}]'.format(a, b) for a, b in g.edges.get(i, ())))
        for i in g.colors
    ]
    edges = '{\n' + ',\n'.join(colors) + '\n  }' if colors else '{}'
    return '{{\n  "n": {},\n  "N": {},\n  "vertices": {},\n  "edges": {}\n}}\n'.format(g.n, g.N, vertices, edges)


def graph_from_json(data):  # type: (Mapping[six.text_type, Any]) -> SignedColoredGraph
    """
    Builds a graph from decoded JSON. Raises `conformity.error.ValidationError` for documents that do not match the
    graph schema and `GraphError` for well-formed documents that do not describe a signed colored graph.
    """
    validate(GRAPH_SCHEMA, data, 'graph')
    vertices = [
        Vertex(v['id'], parse_signature(v['sigma']), v.get('label'), v.get('stat'))
        for v in data['vertices']
    ]
    edges = {
        int(color): [(a, b) for a, b in pairs]
        for color, pairs in data['edges'].items()
    }  # type: Dict[int, List[Tuple[int, int]]]
    return SignedColoredGraph(data['n'], data['N'], vertices, edges)


def load_graph(path):  # type: (six.text_type) -> SignedColoredGraph
    with open(path, 'r') as f:
        data = json.load(f)
    graph = graph_from_json(data)
    _logger.debug('Loaded graph of type (%d, %d) with %d vertices from %s', graph.n, graph.N, len(graph), path)
    return graph


def qsym_from_json(data):  # type: (Mapping[six.text_type, Any]) -> QSymExpansion
    validate(QSYM_SCHEMA, data, 'quasisymmetric expansion')
    terms = {}  # type: Dict[Tuple[int, ...], QPoly]
    for term in data['terms']:
        signature = parse_signature(term['sigma'])
        terms[signature] = terms.get(signature, QPoly()) + QPoly.from_json(term['coeff'])
    return QSymExpansion(data['n'], terms)


def load_qsym(path):  # type: (six.text_type) -> QSymExpansion
    with open(path, 'r') as f:
        return qsym_from_json(json.load(f))


def graph_to_dot(g, name='G'):  # type: (SignedColoredGraph, six.text_type) -> six.text_type
    """
    Renders an undirected DOT graph. Vertices show their id and signature; edges of several colors between the same
    two vertices are drawn once with a combined label such as `2,3`.
    """
    lines = ['graph {} {{'.format(name)]
    for v in g.vertices:
        lines.append('  {} [label="{}\\n{}"];'.format(v.id, v.id, format_signature(v.sigma)))
    joined = {}  # type: Dict[Tuple[int, int], List[int]]
    for i in g.colors:
        for pair in g.edges.get(i, ()):
            joined.setdefault(pair, []).append(i)
    for (a, b), colors in sorted(joined.items()):
        label = ','.join(six.text_type(i) for i in colors)
        lines.append('  {} -- {} [label="{}", colorscheme=set19, color={}];'.format(a, b, label, min(colors[0], 9)))
    lines.append('}')
    return '\n'.join(lines) + '\n'

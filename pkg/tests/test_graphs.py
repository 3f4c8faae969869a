from __future__ import (
    absolute_import,
    unicode_literals,
)

import json

from conformity.error import ValidationError
import pytest

from dualeq.error import (
    AugmentationError,
    GraphError,
    ShapeError,
)
from dualeq.graphs.core import (
    SignedColoredGraph,
    Vertex,
    augmented_graph,
    build_graph_from_family,
    components,
    conjugate_graph,
    edge_labels,
    generating_function,
    label_index,
    restrict,
    standard_graph,
)
from dualeq.graphs.io import (
    graph_from_json,
    graph_to_dot,
    graph_to_json,
    load_graph,
    load_qsym,
    qsym_from_json,
)
from dualeq.involutions import (
    schur_expansion_from_DE,
    words_family,
)
from dualeq.shapes import (
    Cell,
    Partition,
    conjugate,
    partitions,
)
from dualeq.symfunc import (
    QPoly,
    QSymExpansion,
    extract_schur,
    schur_in_Q,
)
from dualeq.tableaux import format_signature


def _signatures(g):
    return [format_signature(v.sigma) for v in g.vertices]


class TestSignedColoredGraph(object):
    def test_neighbors(self):  # type: () -> None
        g = SignedColoredGraph(3, 3, [Vertex(0, (1, -1)), Vertex(1, (-1, 1))], {2: [(1, 0)]})
        assert g.edges == {2: ((0, 1),)}
        assert g.neighbor(0, 2) == 1
        assert g.neighbor(1, 2) == 0
        assert g.has_edge(0, 1, 2)
        assert list(g.colors) == [2]
        assert g.ids == [0, 1]
        assert g.stat(0) == 0

    @pytest.mark.parametrize(('vertices', 'edges'), (
        ([Vertex(0, (1, 1)), Vertex(0, (1, 1))], {}),
        ([Vertex(0, (1,))], {}),
        ([Vertex(0, (1, 0))], {}),
        ([Vertex(0, (1, -1))], {2: [(0, 0)]}),
        ([Vertex(0, (1, -1))], {2: [(0, 7)]}),
        ([Vertex(0, (1, -1)), Vertex(1, (-1, 1))], {3: [(0, 1)]}),
        ([Vertex(0, (1, -1)), Vertex(1, (-1, 1)), Vertex(2, (-1, 1))], {2: [(0, 1), (0, 2)]}),
    ))
    def test_rejects_malformed_graphs(self, vertices, edges):
        with pytest.raises(GraphError):
            SignedColoredGraph(3, 3, vertices, edges)

    def test_rejects_bad_types(self):  # type: () -> None
        with pytest.raises(GraphError):
            SignedColoredGraph(4, 3, [], {})

    def test_equality_ignores_vertex_order_and_empty_colors(self):  # type: () -> None
        a = SignedColoredGraph(3, 3, [Vertex(0, (1, -1)), Vertex(1, (-1, 1))], {2: [(0, 1)]})
        b = SignedColoredGraph(3, 3, [Vertex(1, (-1, 1)), Vertex(0, (1, -1))], {2: [(0, 1)]})
        c = SignedColoredGraph(3, 3, [Vertex(0, (1, -1)), Vertex(1, (-1, 1))], {})
        assert a == b
        assert a != c
        assert c == SignedColoredGraph(3, 3, [Vertex(0, (1, -1)), Vertex(1, (-1, 1))], {2: []})

    def test_networkx_view(self):  # type: () -> None
        g = standard_graph(Partition((2, 2)))
        view = g.to_networkx()
        assert view.number_of_nodes() == 2
        assert view.number_of_edges() == 2
        assert g.to_networkx(colors=[3]).number_of_edges() == 1


class TestStandardGraph(object):
    def test_two_two(self):  # type: () -> None
        g = standard_graph(Partition((2, 2)))
        assert (g.n, g.N) == (4, 4)
        assert _signatures(g) == ['-+-', '+-+']
        assert [v.label for v in g.vertices] == ['1 3;2 4', '1 2;3 4']
        assert g.edges == {2: ((0, 1),), 3: ((0, 1),)}

    def test_sizes_and_connectivity(self):  # type: () -> None
        assert len(standard_graph(Partition((3, 2)))) == 5
        for p in partitions(5):
            assert len(components(standard_graph(p))) == 1

    def test_empty_partition(self):  # type: () -> None
        with pytest.raises(ShapeError):
            standard_graph(Partition(()))

    @pytest.mark.parametrize('n', range(1, 6))
    def test_generating_function_is_the_schur_function(self, n):
        for p in partitions(n):
            assert generating_function(standard_graph(p)) == schur_in_Q(p)

    def test_conjugation(self):  # type: () -> None
        for p in partitions(5):
            assert edge_labels(conjugate_graph(standard_graph(p))) == edge_labels(standard_graph(conjugate(p)))
        g = conjugate_graph(standard_graph(Partition((2, 2))))
        assert _signatures(g) == ['+-+', '-+-']
        assert label_index(g) == {'1 2;3 4': 0, '1 3;2 4': 1}


class TestDerivedGraphs(object):
    def test_restrict(self):  # type: () -> None
        g = restrict(standard_graph(Partition((3, 2))), 3, 4)
        assert (g.n, g.N) == (3, 4)
        assert all(len(v.sigma) == 3 for v in g.vertices)
        assert set(g.edges) == {2}
        with pytest.raises(GraphError):
            restrict(g, 4, 4)

    def test_components_are_ordered_by_smallest_id(self):  # type: () -> None
        g = SignedColoredGraph(
            3,
            3,
            [Vertex(0, (1, 1)), Vertex(1, (1, -1)), Vertex(2, (-1, 1))],
            {2: [(1, 2)]},
        )
        assert [c.ids for c in components(g)] == [[0], [1, 2]]

    def test_family_graph(self):  # type: () -> None
        g = build_graph_from_family(words_family(3, twisted=True))
        assert len(g) == 6
        assert sorted(v.stat for v in g.vertices) == [0, 1, 1, 2, 2, 3]
        expansion = extract_schur(generating_function(g))
        assert expansion == schur_expansion_from_DE(words_family(3, twisted=True))

    def test_family_graph_padding(self):  # type: () -> None
        g = build_graph_from_family(words_family(3), N=5)
        assert all(len(v.sigma) == 4 and v.sigma[2:] == (1, 1) for v in g.vertices)
        with pytest.raises(GraphError):
            build_graph_from_family(words_family(3), N=2)


class TestAugmentedGraph(object):
    def test_signatures_run_over_the_augmented_tableaux(self):  # type: () -> None
        g = augmented_graph(Partition((2, 1)), {Cell(3, 1): 4})
        assert (g.n, g.N) == (3, 4)
        assert [v.label for v in g.vertices] == ['1 3 4;2', '1 2 4;3']
        assert _signatures(g) == ['-++', '+-+']
        assert g.edges == {2: ((0, 1),)}

    @pytest.mark.parametrize('augmentation', (
        {Cell(2, 3): 4},
        {Cell(1, 4): 4},
        {Cell(1, 1): 4},
        {Cell(3, 1): 5},
    ))
    def test_rejects_bad_augmentations(self, augmentation):
        with pytest.raises(AugmentationError):
            augmented_graph(Partition((2, 1)), augmentation)

    def test_rejects_non_standard_augmentations(self):  # type: () -> None
        with pytest.raises(AugmentationError):
            augmented_graph(Partition((2, 1)), {Cell(3, 1): 5, Cell(4, 1): 4})


class TestSerialization(object):
    def test_json_text(self):  # type: () -> None
        g = SignedColoredGraph(3, 3, [Vertex(0, (1, -1), 'a', 2), Vertex(1, (-1, 1))], {2: [(0, 1)]})
        assert graph_to_json(g) == (
            '{\n'
            '  "n": 3,\n'
            '  "N": 3,\n'
            '  "vertices": [\n'
            '    {"id": 0, "sigma": "+-", "label": "a", "stat": 2},\n'
            '    {"id": 1, "sigma": "-+"}\n'
            '  ],\n'
            '  "edges": {\n'
            '    "2": [[0, 1]]\n'
            '  }\n'
            '}\n'
        )

    def test_json_reads_back(self):  # type: () -> None
        g = standard_graph(Partition((3, 2)))
        assert graph_from_json(json.loads(graph_to_json(g))) == g

    def test_schema_errors(self):  # type: () -> None
        with pytest.raises(ValidationError):
            graph_from_json({'n': 3, 'vertices': [], 'edges': {}})
        with pytest.raises(ValidationError):
            graph_from_json({'n': 3, 'N': 3, 'vertices': [{'id': 0, 'sigma': '+x'}], 'edges': {}})
        with pytest.raises(ValidationError):
            graph_from_json({'n': 3, 'N': 3, 'vertices': [], 'edges': {'two': []}})

    def test_structure_errors(self):  # type: () -> None
        with pytest.raises(GraphError):
            graph_from_json({
                'n': 3,
                'N': 3,
                'vertices': [{'id': 0, 'sigma': '+-'}, {'id': 1, 'sigma': '-+'}, {'id': 2, 'sigma': '-+'}],
                'edges': {'2': [[0, 1], [0, 2]]},
            })

    def test_load_graph(self, tmpdir):
        path = tmpdir.join('g.json')
        path.write(graph_to_json(standard_graph(Partition((2, 2)))))
        assert load_graph(path.strpath) == standard_graph(Partition((2, 2)))

    def test_qsym(self, tmpdir):
        data = {'n': 3, 'terms': [{'sigma': '+-', 'coeff': {'1': 1}}, {'sigma': '+-', 'coeff': {'0': 2}}]}
        expected = QSymExpansion(3, {(1, -1): QPoly({0: 2, 1: 1})})
        assert qsym_from_json(data) == expected
        path = tmpdir.join('f.json')
        path.write(json.dumps(data))
        assert load_qsym(path.strpath) == expected
        with pytest.raises(ValidationError):
            qsym_from_json({'n': 3, 'terms': [{'sigma': '+-'}]})

    def test_dot(self):  # type: () -> None
        dot = graph_to_dot(standard_graph(Partition((2, 2))))
        assert dot.startswith('graph G {\n')
        assert '  0 [label="0\\n-+-"];' in dot
        assert '0 -- 1 [label="2,3"' in dot
        assert dot.endswith('}\n')

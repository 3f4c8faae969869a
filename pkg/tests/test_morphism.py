from __future__ import (
    absolute_import,
    unicode_literals,
)

import pytest

from dualeq.constants import (
    FAILURE_CODE_AXIOM,
    FAILURE_CODE_COVER,
    FAILURE_CODE_FIBER,
    FAILURE_CODE_NO_DOMINANT,
)
from dualeq.error import ClassificationError
from dualeq.fixtures import load_fixture
from dualeq.graphs.core import (
    SignedColoredGraph,
    Vertex,
    augmented_graph,
    build_graph_from_family,
    label_index,
    standard_graph,
)
from dualeq.graphs.morphism import (
    Morphism,
    classify_component,
    graph_schur_expansion,
    is_morphism,
)
from dualeq.involutions import (
    tableaux_family,
    words_family,
)
from dualeq.shapes import (
    Cell,
    Partition,
    SkewShape,
    partitions,
)
from dualeq.symfunc import QPoly
from dualeq.tableaux import (
    format_filling,
    superstandard,
)


MUSIKER_DOMINANT = (13, 18)


class TestIsMorphism(object):
    def test_identity(self):  # type: () -> None
        g = standard_graph(Partition((3, 2)))
        assert is_morphism(Morphism(g, g, {v: v for v in g.ids}))

    def test_signatures_must_agree(self):  # type: () -> None
        g = standard_graph(Partition((2, 2)))
        assert not is_morphism(Morphism(g, g, {0: 1, 1: 0}))

    def test_every_vertex_needs_an_image(self):  # type: () -> None
        g = standard_graph(Partition((3, 2)))
        assert not is_morphism(Morphism(g, g, {0: 0}))

    def test_types_must_agree(self):  # type: () -> None
        g = standard_graph(Partition((2, 1)))
        h = augmented_graph(Partition((2, 1)), {Cell(3, 1): 4})
        assert not is_morphism(Morphism(h, g, {0: 0, 1: 1}))

    def test_fibers(self):  # type: () -> None
        g = standard_graph(Partition((2, 2)))
        assert Morphism(g, g, {0: 0, 1: 0}).fibers() == {0: [0, 1]}


class TestClassifyComponent(object):
    @pytest.mark.parametrize('n', range(1, 7))
    def test_standard_graphs_classify_as_themselves(self, n):
        for p in partitions(n):
            g = standard_graph(p)
            result = classify_component(g)
            assert result.partition == p
            assert result.multiplicity == 1
            assert result.is_isomorphism
            assert is_morphism(result.morphism)
            assert sorted(result.morphism.map.values()) == g.ids

    def test_anchor_goes_to_the_superstandard_tableau(self):  # type: () -> None
        p = Partition((3, 2, 1))
        g = standard_graph(p)
        anchor = label_index(g)[format_filling(superstandard(p))]
        assert classify_component(g).morphism(anchor) == anchor

    def test_longer_signatures_are_restricted(self):  # type: () -> None
        result = classify_component(augmented_graph(Partition((2, 1)), {Cell(3, 1): 4}))
        assert result.partition == Partition((2, 1))

    def test_musiker_graph_is_a_double_cover(self):  # type: () -> None
        g = load_fixture('musiker')
        for anchor in (None,) + MUSIKER_DOMINANT:
            result = classify_component(g, anchor=anchor)
            assert result.partition == Partition((3, 2, 1))
            assert result.multiplicity == 2
            assert not result.is_isomorphism
            assert is_morphism(result.morphism)
            assert all(len(fiber) == 2 for fiber in result.morphism.fibers().values())

    def test_require_iso_rejects_covers(self):  # type: () -> None
        with pytest.raises(ClassificationError) as error_context:
            classify_component(load_fixture('musiker'), require_iso=True)
        assert error_context.value.failure.code == FAILURE_CODE_COVER
        assert error_context.value.failure.witness == {'partition': [3, 2, 1], 'multiplicity': 2}

    def test_anchor_must_be_dominant(self):  # type: () -> None
        with pytest.raises(ClassificationError) as error_context:
            classify_component(load_fixture('musiker'), anchor=0)
        assert error_context.value.failure.code == FAILURE_CODE_NO_DOMINANT

    def test_disconnected(self):  # type: () -> None
        g = SignedColoredGraph(3, 3, [Vertex(0, (1, 1)), Vertex(1, (-1, -1))], {})
        with pytest.raises(ClassificationError) as error_context:
            classify_component(g)
        assert error_context.value.failure.code == FAILURE_CODE_FIBER

    def test_empty(self):  # type: () -> None
        with pytest.raises(ClassificationError):
            classify_component(SignedColoredGraph(3, 3, [], {}))

    def test_local_axioms_are_checked_first(self):  # type: () -> None
        g = SignedColoredGraph(3, 3, [Vertex(0, (1, -1))], {})
        with pytest.raises(ClassificationError) as error_context:
            classify_component(g)
        assert error_context.value.failure.code == FAILURE_CODE_AXIOM
        assert error_context.value.failure.witness['color'] == 2

    def test_as_dict(self):  # type: () -> None
        data = classify_component(standard_graph(Partition((2, 2)))).as_dict()
        assert data == {'partition': [2, 2], 'multiplicity': 1, 'vertices': [0, 1]}


class TestGraphSchurExpansion(object):
    def test_musiker(self):  # type: () -> None
        assert graph_schur_expansion(load_fixture('musiker')).as_dict() == {(3, 2, 1): QPoly.constant(2)}

    def test_skew_shape(self):  # type: () -> None
        g = build_graph_from_family(tableaux_family(SkewShape(Partition((3, 2, 1)), Partition((1,)))))
        assert graph_schur_expansion(g).as_dict() == {
            (3, 2): QPoly.constant(1),
            (3, 1, 1): QPoly.constant(1),
            (2, 2, 1): QPoly.constant(1),
        }

    def test_statistic_must_be_constant_on_components(self):  # type: () -> None
        with pytest.raises(ClassificationError):
            graph_schur_expansion(build_graph_from_family(words_family(3)))

    def test_statistic_weights_components(self):  # type: () -> None
        g = build_graph_from_family(words_family(3, twisted=True))
        assert graph_schur_expansion(g).as_dict() == {
            (3,): QPoly.constant(1),
            (2, 1): QPoly({1: 1, 2: 1}),
            (1, 1, 1): QPoly.monomial(3),
        }

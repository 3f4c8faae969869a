from __future__ import (
    absolute_import,
    unicode_literals,
)

import itertools

import attr
import pytest

from dualeq.constants import FAILURE_CODE_NOT_SINGLE_SCHUR
from dualeq.error import (
    InvolutionError,
    StatisticError,
)
from dualeq.involutions import (
    InvolutionFamily,
    check_strong_dual_equivalence,
    check_weak_dual_equivalence,
    class_of,
    classes,
    combined_D,
    combined_d_word,
    d_on_filling,
    dominant_elements,
    elementary_d,
    format_word,
    implicit_rectification,
    inversion_number,
    parse_word,
    schur_expansion_from_DE,
    subordinate_elements,
    tableaux_family,
    twisted_d,
    words_family,
)
from dualeq.shapes import (
    Partition,
    SkewShape,
    TupleShape,
    partitions,
)
from dualeq.symfunc import QPoly
from dualeq.tableaux import (
    StandardFilling,
    descent_signature,
    enumerate_standard,
    format_filling,
    parse_filling,
    signature_of_word,
    substandard,
    superstandard,
)


def _straight(*parts):
    return SkewShape(Partition(parts))


DOMINO = TupleShape((_straight(2), _straight(1, 1)))


class TestWords(object):
    def test_parse_and_format(self):  # type: () -> None
        assert parse_word('2314') == (2, 3, 1, 4)
        assert parse_word('3, 1, 2') == (3, 1, 2)
        assert format_word((2, 3, 1)) == '231'
        assert format_word((10, 1, 2, 3, 4, 5, 6, 7, 8, 9)) == '10 1 2 3 4 5 6 7 8 9'

    @pytest.mark.parametrize('text', ('112', '1 3', '0 1'))
    def test_parse_rejects_non_permutations(self, text):
        with pytest.raises(InvolutionError):
            parse_word(text)

    def test_inversion_number(self):  # type: () -> None
        assert inversion_number((1, 2, 3)) == 0
        assert inversion_number((3, 2, 1)) == 3
        assert inversion_number((2, 3, 1, 4)) == 2


class TestElementaryInvolution(object):
    def test_fixes_when_i_is_between(self):  # type: () -> None
        assert elementary_d(2, (1, 2, 3)) == (1, 2, 3)
        assert elementary_d(2, (3, 2, 1)) == (3, 2, 1)

    def test_swaps_with_the_farther_neighbor(self):  # type: () -> None
        assert elementary_d(2, (2, 1, 3)) == (3, 1, 2)
        assert elementary_d(2, (1, 3, 2)) == (2, 3, 1)

    def test_color_range(self):  # type: () -> None
        with pytest.raises(InvolutionError):
            elementary_d(1, (1, 2, 3))
        with pytest.raises(InvolutionError):
            elementary_d(3, (1, 2, 3))

    @pytest.mark.parametrize('n', range(3, 7))
    def test_is_an_involution_moving_signatures_only_near_i(self, n):
        for word in itertools.permutations(range(1, n + 1)):
            before = signature_of_word(word)
            for i in range(2, n):
                image = elementary_d(i, word)
                assert elementary_d(i, image) == word
                if image == word:
                    continue
                assert before[i - 2] == -before[i - 1]
                after = signature_of_word(image)
                far = [j for j in range(n - 1) if not i - 3 <= j <= i]
                assert [before[j] for j in far] == [after[j] for j in far]

    def test_on_fillings(self):  # type: () -> None
        assert format_filling(d_on_filling(2, parse_filling('1 3 4;2'))) == '1 2 4;3'


class TestTwistedInvolution(object):
    def test_rotates(self):  # type: () -> None
        assert twisted_d(2, (2, 1, 3)) == (1, 3, 2)
        assert twisted_d(2, (1, 3, 2)) == (2, 1, 3)
        assert twisted_d(2, (3, 1, 2)) == (2, 3, 1)

    def test_fixes_when_i_is_between(self):  # type: () -> None
        assert twisted_d(3, (4, 1, 3, 2)) == (4, 1, 3, 2)

    @pytest.mark.parametrize('n', range(3, 7))
    def test_preserves_inversions(self, n):
        for word in itertools.permutations(range(1, n + 1)):
            for i in range(2, n):
                image = twisted_d(i, word)
                assert twisted_d(i, image) == word
                assert inversion_number(image) == inversion_number(word)


class TestCombinedInvolution(object):
    def test_close_contents_twist(self):  # type: () -> None
        t = StandardFilling(DOMINO, (4, 1, 3, 2))
        assert combined_D(2, t).labels == (4, 2, 1, 3)

    def test_far_contents_use_the_elementary_involution(self):  # type: () -> None
        t = StandardFilling(DOMINO, (4, 2, 1, 3))
        assert combined_D(3, t).labels == (3, 2, 1, 4)

    def test_tied_contents(self):  # type: () -> None
        with pytest.raises(InvolutionError):
            combined_d_word(2, (1, 2, 3), (0, 0, 1), 1)

    def test_k_must_match_the_components(self):  # type: () -> None
        with pytest.raises(InvolutionError):
            combined_D(2, StandardFilling(DOMINO, (4, 1, 3, 2)), k=3)

    def test_single_shape_agrees_with_the_elementary_involution(self):  # type: () -> None
        for t in enumerate_standard(_straight(3, 2, 1)):
            for i in range(2, 6):
                assert combined_D(i, t) == d_on_filling(i, t)


class TestFamilies(object):
    def test_rejects_a_map_that_is_not_an_involution(self):  # type: () -> None
        with pytest.raises(InvolutionError):
            InvolutionFamily(
                ground_set=[1, 2, 3],
                n=3,
                descent_map=lambda x: (),
                involutions={2: {1: 2, 2: 3, 3: 1}.get},
            )

    def test_rejects_missing_colors_and_bad_descents(self):  # type: () -> None
        with pytest.raises(InvolutionError):
            InvolutionFamily(ground_set=[1], n=4, descent_map=lambda x: (), involutions={2: lambda x: x})
        with pytest.raises(InvolutionError):
            InvolutionFamily(ground_set=[1], n=3, descent_map=lambda x: (3,), involutions={2: lambda x: x})

    def test_rejects_images_outside_the_ground_set(self):  # type: () -> None
        with pytest.raises(InvolutionError):
            InvolutionFamily(ground_set=[1, 2], n=3, descent_map=lambda x: (), involutions={2: lambda x: x + 5})

    def test_apply(self):  # type: () -> None
        fam = words_family(3)
        assert fam.apply(2, (2, 1, 3)) == (3, 1, 2)
        assert fam.descents_of((2, 1, 3)) == frozenset((1,))
        assert fam.alpha((3, 1, 2)).parts == (2, 1)
        assert fam.stat((3, 2, 1)) == 3

    @pytest.mark.parametrize('n', range(1, 6))
    def test_number_of_classes_is_the_number_of_standard_tableaux(self, n):
        expected = sum(len(list(enumerate_standard(SkewShape(p)))) for p in partitions(n))
        assert len(classes(words_family(n))) == expected

    def test_class_of_in_a_window(self):  # type: () -> None
        fam = words_family(4)
        assert set(class_of((2, 1, 3, 4), fam, window=(2, 2)).members) == {(2, 1, 3, 4), (3, 1, 2, 4)}
        assert len(class_of((1, 2, 3, 4), fam)) == 1
        assert (1, 2, 3, 4) in class_of((1, 2, 3, 4), fam)
        with pytest.raises(InvolutionError):
            class_of((1, 2, 3, 4), fam, window=(1, 2))


class TestDualEquivalence(object):
    @pytest.mark.parametrize('n', range(2, 6))
    def test_permutations_are_strong(self, n):
        assert check_strong_dual_equivalence(words_family(n)).passed

    @pytest.mark.parametrize('shape', (
        _straight(3, 2),
        _straight(3, 2, 1),
        SkewShape(Partition((3, 2, 1)), Partition((1,))),
        SkewShape(Partition((4, 2, 1)), Partition((2, 1))),
    ))
    def test_tableaux_are_strong(self, shape):
        assert check_strong_dual_equivalence(tableaux_family(shape)).passed

    def test_twisted_permutations_are_only_weak(self):  # type: () -> None
        fam = words_family(4, twisted=True)
        report = check_strong_dual_equivalence(fam)
        assert not report.passed
        assert report.failures[0].code == FAILURE_CODE_NOT_SINGLE_SCHUR
        assert report.failures[0].witness['window'] == [2, 3]
        assert check_weak_dual_equivalence(fam).passed

    def test_failures_serialize(self):  # type: () -> None
        data = check_strong_dual_equivalence(words_family(4, twisted=True)).as_dict()
        assert data['passed'] is False
        assert data['failures'][0]['pointer'] == 'window[2,3]'


class TestExpansion(object):
    def test_twisted_permutations_of_three(self):  # type: () -> None
        expansion = schur_expansion_from_DE(words_family(3, twisted=True))
        assert expansion.as_dict() == {
            (3,): QPoly.constant(1),
            (2, 1): QPoly({1: 1, 2: 1}),
            (1, 1, 1): QPoly.monomial(3),
        }

    def test_statistic_must_be_constant_on_classes(self):  # type: () -> None
        with pytest.raises(StatisticError):
            schur_expansion_from_DE(words_family(3))
        fam = attr.evolve(words_family(3), statistic=lambda w: w[0])
        with pytest.raises(StatisticError):
            schur_expansion_from_DE(fam)

    def test_straight_shape_is_a_single_schur_function(self):  # type: () -> None
        expansion = schur_expansion_from_DE(tableaux_family(_straight(3, 2)))
        assert expansion.as_dict() == {(3, 2): QPoly.constant(1)}

    def test_dominant_elements(self):  # type: () -> None
        assert dominant_elements(tableaux_family(_straight(3, 2))) == [
            (superstandard(Partition((3, 2))), Partition((3, 2))),
        ]

    def test_subordinate_elements(self):  # type: () -> None
        shape = Partition((4, 3, 2))
        assert subordinate_elements(tableaux_family(SkewShape(shape))) == [(substandard(shape), shape)]

    def test_subordinate_and_dominant_shapes_agree(self):  # type: () -> None
        fam = words_family(5)
        dominant = sorted(p.parts for _, p in dominant_elements(fam))
        subordinate = sorted(p.parts for _, p in subordinate_elements(fam))
        assert dominant == subordinate


class TestImplicitRectification(object):
    @pytest.mark.parametrize('n', range(2, 6))
    def test_preserves_signatures(self, n):
        fam = words_family(n)
        for word in fam.ground_set:
            assert descent_signature(implicit_rectification(word, fam)) == signature_of_word(word)

    def test_is_a_bijection_onto_the_tableaux_of_the_class_shape(self):  # type: () -> None
        fam = words_family(5)
        for eq_class in classes(fam):
            rectified = [implicit_rectification(w, fam) for w in eq_class.members]
            shape = rectified[0].shape
            assert sorted(t.labels for t in rectified) == sorted(t.labels for t in enumerate_standard(shape))

    def test_skew_tableaux_rectify_to_straight_ones(self):  # type: () -> None
        fam = tableaux_family(SkewShape(Partition((2, 1)), Partition((1,))))
        shapes = sorted(implicit_rectification(t, fam).shape.outer.parts for t in fam.ground_set)
        assert shapes == [(1, 1), (2,)]

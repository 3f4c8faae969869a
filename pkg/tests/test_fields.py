from __future__ import (
    absolute_import,
    unicode_literals,
)

import pytest

from conformity.error import ValidationError
from conformity.validator import validate

from dualeq.fields import (
    GRAPH_SCHEMA,
    QSYM_SCHEMA,
    ColorKey,
    PartitionString,
    ShapeString,
    SignatureString,
)


class TestSignatureString(object):
    def test_valid(self):  # type: () -> None
        assert SignatureString().errors('+-+') == []
        assert SignatureString().errors('') == []

    def test_invalid(self):  # type: () -> None
        errors = SignatureString().errors('+x-')
        assert len(errors) == 1
        assert errors[0].message == 'Not a signature of + and - signs'
        assert SignatureString().errors(b'+-')
        assert SignatureString().errors(3)

    def test_introspect(self):  # type: () -> None
        assert SignatureString().introspect() == {'type': 'signature'}
        assert SignatureString(description='Up and down').introspect() == {
            'type': 'signature',
            'description': 'Up and down',
        }


class TestColorKey(object):
    def test_valid(self):  # type: () -> None
        assert ColorKey().errors('2') == []
        assert ColorKey().errors('17') == []

    @pytest.mark.parametrize('value', ('0', '02', '-3', 'two', ''))
    def test_invalid(self, value):
        assert ColorKey().errors(value)


class TestShapeStrings(object):
    @pytest.mark.parametrize('value', ('3,2,1', '(3,2,1)', '()', ' 4 '))
    def test_partitions(self, value):
        assert PartitionString().errors(value) == []

    @pytest.mark.parametrize('value', ('2,3', '3,0', '3;2', '(3,2', 'x'))
    def test_bad_partitions(self, value):
        errors = PartitionString().errors(value)
        assert len(errors) == 1
        assert errors[0].message.startswith('Not a partition: ')

    @pytest.mark.parametrize('value', ('3,2', '3,2/1', '((2),(1,1))', '((2,1)/(1),(1))'))
    def test_shapes(self, value):
        assert ShapeString().errors(value) == []

    @pytest.mark.parametrize('value', ('3,2/4', '((2),(1,1)', '3/2/1'))
    def test_bad_shapes(self, value):
        errors = ShapeString().errors(value)
        assert len(errors) == 1
        assert errors[0].message.startswith('Not a shape: ')

    def test_validate_raises(self):  # type: () -> None
        with pytest.raises(ValidationError) as error_context:
            validate(ShapeString(), '3,2/4', 'shape')
        assert 'Not a shape' in error_context.value.args[0]


class TestSchemas(object):
    def test_graph(self):  # type: () -> None
        data = {
            'n': 3,
            'N': 3,
            'vertices': [
                {'id': 0, 'sigma': '-+'},
                {'id': 1, 'sigma': '+-', 'label': '1 2;3', 'stat': 1},
            ],
            'edges': {'2': [[0, 1]]},
        }
        assert GRAPH_SCHEMA.errors(data) == []

    def test_graph_problems_carry_pointers(self):  # type: () -> None
        data = {
            'n': 3,
            'N': 3,
            'vertices': [{'id': 0, 'sigma': '-x'}],
            'edges': {'two': [[0, 1, 2]]},
        }
        pointers = sorted(e.pointer for e in GRAPH_SCHEMA.errors(data))
        assert 'vertices.0.sigma' in pointers
        assert any(p.startswith('edges.') for p in pointers)

    def test_graph_requires_keys(self):  # type: () -> None
        assert GRAPH_SCHEMA.errors({'n': 3, 'vertices': [], 'edges': {}})

    def test_qsym(self):  # type: () -> None
        assert QSYM_SCHEMA.errors({'n': 2, 'terms': [{'sigma': '+', 'coeff': {'0': 1, '2': -1}}]}) == []
        assert QSYM_SCHEMA.errors({'n': 2, 'terms': [{'sigma': '+', 'coeff': {'0': 'one'}}]})

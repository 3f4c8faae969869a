from __future__ import (
    absolute_import,
    unicode_literals,
)

import re
from typing import (
    Any as AnyType,
    List as ListType,
)

import attr
from conformity import fields
from conformity.fields.basic import Introspection
from conformity.fields.utils import strip_none
from conformity.types import Error

from dualeq.error import ShapeError
from dualeq.shapes import (
    parse_partition,
    parse_shape,
)


__all__ = (
    'ColorKey',
    'GRAPH_SCHEMA',
    'PartitionString',
    'QPOLY_SCHEMA',
    'QSYM_SCHEMA',
    'ShapeString',
    'SignatureString',
)


signature_regex = re.compile(r'^[+-]*$')
color_regex = re.compile(r'^[1-9]\d*$')


@attr.s
class SignatureString(fields.UnicodeString):
    """
    Conformity field that ensures that the value is a unicode string of `+` and `-` signs.
    """

    introspect_type = 'signature'

    def errors(self, value):  # type: (AnyType) -> ListType[Error]
        result = super(SignatureString, self).errors(value)
        if result:
            return result
        if signature_regex.match(value):
            return []
        return [Error('Not a signature of + and - signs')]

    def introspect(self):  # type: () -> Introspection
        return strip_none({
            'type': self.introspect_type,
            'description': self.description,
        })


@attr.s
class ColorKey(fields.UnicodeString):
    """
    Conformity field that ensures that the value is a unicode string holding a positive decimal integer, as used for
    the color keys of a graph's edge map.
    """

    introspect_type = 'color'

    def errors(self, value):  # type: (AnyType) -> ListType[Error]
        result = super(ColorKey, self).errors(value)
        if result:
            return result
        if color_regex.match(value):
            return []
        return [Error('Not a color number')]


@attr.s
class PartitionString(fields.UnicodeString):
    """
    Conformity field that ensures that the value is a unicode string naming a partition, such as `3,2,1` or `(3,2,1)`.
    """

    introspect_type = 'partition'

    def errors(self, value):  # type: (AnyType) -> ListType[Error]
        result = super(PartitionString, self).errors(value)
        if result:
            return result
        try:
            parse_partition(value)
        except ShapeError as e:
            return [Error('Not a partition: {}'.format(e))]
        return []


@attr.s
class ShapeString(fields.UnicodeString):
    """
    Conformity field that ensures that the value is a unicode string naming a partition, a skew shape `outer/inner`
    or a tuple of shapes `((2),(1,1))`.
    """

    introspect_type = 'shape'

    def errors(self, value):  # type: (AnyType) -> ListType[Error]
        result = super(ShapeString, self).errors(value)
        if result:
            return result
        try:
            parse_shape(value)
        except ShapeError as e:
            return [Error('Not a shape: {}'.format(e))]
        return []


VERTEX_SCHEMA = fields.Dictionary(
    {
        'id': fields.Integer(gte=0),
        'sigma': SignatureString(),
        'label': fields.UnicodeString(),
        'stat': fields.Integer(gte=0),
    },
    optional_keys=('label', 'stat'),
    description='One vertex: its id, its signature and optionally a label and a statistic value.',
)


GRAPH_SCHEMA = fields.Dictionary(
    {
        'n': fields.Integer(gte=0),
        'N': fields.Integer(gte=0),
        'vertices': fields.List(VERTEX_SCHEMA),
        'edges': fields.SchemalessDictionary(
            key_type=ColorKey(),
            value_type=fields.List(fields.List(fields.Integer(gte=0), min_length=2, max_length=2)),
        ),
    },
    description='A signed colored graph of type (n, N).',
)


QPOLY_SCHEMA = fields.SchemalessDictionary(
    key_type=fields.UnicodeString(),
    value_type=fields.Integer(),
    description='Coefficients of a polynomial in q, keyed by the decimal exponent.',
)


QSYM_SCHEMA = fields.Dictionary(
    {
        'n': fields.Integer(gte=0),
        'terms': fields.List(fields.Dictionary({
            'sigma': SignatureString(),
            'coeff': QPOLY_SCHEMA,
        })),
    },
    description='A quasisymmetric function of degree n in the fundamental basis.',
)

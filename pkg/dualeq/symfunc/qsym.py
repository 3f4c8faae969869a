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
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Tuple,
    Union,
)

import attr
import six
import sympy

from dualeq.error import ShapeError
from dualeq.shapes import (
    Partition,
    SkewShape,
    partitions,
)
from dualeq.tableaux import (
    Signature,
    descent_signature,
    enumerate_semistandard,
    enumerate_standard,
    format_signature,
    superstandard,
)


__all__ = (
    'QPoly',
    'QSymExpansion',
    'SchurExpansion',
    'evaluate_monomials',
    'extract_schur',
    'format_schur',
    'monomial_symbols',
    'schur_eval',
    'schur_in_Q',
)


_logger = logging.getLogger(__name__)


def _clean(terms):  # type: (Mapping[int, int]) -> Dict[int, int]
    return {e: c for e, c in terms.items() if c}


@attr.s(frozen=True, eq=False)
class QPoly(object):
    """
    A polynomial in `q` with integer coefficients, stored sparsely as exponent to coefficient.
    """
    terms = attr.ib(factory=dict, converter=_clean)  # type: Dict[int, int]

    @classmethod
    def constant(cls, c):  # type: (int) -> QPoly
        return cls({0: c})

    @classmethod
    def monomial(cls, exponent, coefficient=1):  # type: (int, int) -> QPoly
        if exponent < 0:
            raise ValueError('q-exponents must be nonnegative (got {})'.format(exponent))
        return cls({exponent: coefficient})

    def __add__(self, other):  # type: (QPoly) -> QPoly
        result = dict(self.terms)
        for e, c in other.terms.items():
            result[e] = result.get(e, 0) + c
        return QPoly(result)

    def __neg__(self):  # type: () -> QPoly
        return QPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):  # type: (QPoly) -> QPoly
        return self + (-other)

    def __mul__(self, other):  # type: (Union[QPoly, int]) -> QPoly
        if isinstance(other, six.integer_types):
            return QPoly({e: c * other for e, c in self.terms.items()})
        result = {}  # type: Dict[int, int]
        for (e1, c1), (e2, c2) in itertools.product(self.terms.items(), other.terms.items()):
            result[e1 + e2] = result.get(e1 + e2, 0) + c1 * c2
        return QPoly(result)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, six.integer_types):
            other = QPoly.constant(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.terms == other.terms

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):  # type: () -> bool
        return bool(self.terms)

    __nonzero__ = __bool__

    def is_nonnegative(self):  # type: () -> bool
        return all(c >= 0 for c in self.terms.values())

    def evaluate(self, q):  # type: (int) -> int
        return sum(c * q ** e for e, c in self.terms.items())

    def to_json(self):  # type: () -> Dict[six.text_type, int]
        return {six.text_type(e): c for e, c in sorted(self.terms.items())}

    @classmethod
    def from_json(cls, data):  # type: (Mapping[six.text_type, int]) -> QPoly
        return cls({int(e): c for e, c in data.items()})

    def __str__(self):
        """Descending exponents, e.g. `q^2+3*q-1`; the zero polynomial prints as `0`."""
        if not self.terms:
            return '0'
        pieces = []
        for e, c in sorted(self.terms.items(), reverse=True):
            sign = '-' if c < 0 else '+'
            magnitude = abs(c)
            if e == 0:
                body = six.text_type(magnitude)
            else:
                power = 'q' if e == 1 else 'q^{}'.format(e)
                body = power if magnitude == 1 else '{}*{}'.format(magnitude, power)
            pieces.append((sign, body))
        text = ('-' if pieces[0][0] == '-' else '') + pieces[0][1]
        for sign, body in pieces[1:]:
            text += sign + body
        return text

    def __repr__(self):
        return 'QPoly({})'.format(self)


def _check_degree(n, signature):
    if len(signature) != max(n - 1, 0):
        raise ShapeError('Signature {} does not have length {}'.format(format_signature(signature), n - 1))


@attr.s(frozen=True, eq=False)
class QSymExpansion(object):
    """
    A sparse combination of fundamental quasisymmetric functions of degree `degree` with coefficients in `q`.
    """
    degree = attr.ib()  # type: int
    terms = attr.ib(factory=dict)  # type: Dict[Signature, QPoly]

    def __attrs_post_init__(self):
        for signature in self.terms:
            _check_degree(self.degree, signature)
        cleaned = {tuple(s): c for s, c in self.terms.items() if c}
        object.__setattr__(self, 'terms', cleaned)

    @classmethod
    def from_signatures(cls, degree, signatures, coefficients=None):
        # type: (int, Iterable[Signature], Optional[Iterable[QPoly]]) -> QSymExpansion
        terms = {}  # type: Dict[Signature, QPoly]
        if coefficients is None:
            coefficients = itertools.repeat(QPoly.constant(1))
        for signature, coefficient in zip(signatures, coefficients):
            terms[signature] = terms.get(signature, QPoly()) + coefficient
        return cls(degree, terms)

    def coefficient(self, signature):  # type: (Signature) -> QPoly
        return self.terms.get(tuple(signature), QPoly())

    def __add__(self, other):  # type: (QSymExpansion) -> QSymExpansion
        if self.degree != other.degree:
            raise ShapeError('Cannot add expansions of degrees {} and {}'.format(self.degree, other.degree))
        result = dict(self.terms)
        for s, c in other.terms.items():
            result[s] = result.get(s, QPoly()) + c
        return QSymExpansion(self.degree, result)

    def __neg__(self):  # type: () -> QSymExpansion
        return QSymExpansion(self.degree, {s: -c for s, c in self.terms.items()})

    def __sub__(self, other):  # type: (QSymExpansion) -> QSymExpansion
        return self + (-other)

    def scale(self, factor):  # type: (QPoly) -> QSymExpansion
        return QSymExpansion(self.degree, {s: c * factor for s, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, QSymExpansion):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None  # type: ignore

    def is_zero(self):  # type: () -> bool
        return not self.terms

    def at_q(self, q):  # type: (int) -> QSymExpansion
        """Specializes every coefficient at the integer `q`."""
        return QSymExpansion(self.degree, {s: QPoly.constant(c.evaluate(q)) for s, c in self.terms.items()})

    def items(self):  # type: () -> List[Tuple[Signature, QPoly]]
        """Terms ordered by signature string, `+` before `-`."""
        return sorted(self.terms.items(), key=lambda item: format_signature(item[0]))

    def to_json(self):  # type: () -> Dict[six.text_type, Any]
        return {
            'n': self.degree,
            'terms': [{'sigma': format_signature(s), 'coeff': c.to_json()} for s, c in self.items()],
        }

    def __str__(self):
        if not self.terms:
            return '0'
        return ' + '.join(
            '{}Q[{}]'.format(_coefficient_prefix(c), format_signature(s)) for s, c in self.items()
        )


def _coefficient_prefix(c):  # type: (QPoly) -> six.text_type
    if c == 1:
        return ''
    if len(c.terms) == 1:
        return '{}*'.format(c)
    return '({})*'.format(c)


@attr.s(frozen=True, eq=False)
class SchurExpansion(object):
    """
    A combination of Schur functions with coefficients in `q`. `residual` holds whatever part of the source
    expansion lay outside the Schur span; it is zero for symmetric input.
    """
    degree = attr.ib()  # type: int
    terms = attr.ib(factory=dict)  # type: Dict[Partition, QPoly]
    residual = attr.ib(default=None)  # type: QSymExpansion

    def __attrs_post_init__(self):
        for p in self.terms:
            if p.size != self.degree:
                raise ShapeError('Partition {} is not of size {}'.format(p, self.degree))
        object.__setattr__(self, 'terms', {p: c for p, c in self.terms.items() if c})
        if self.residual is None:
            object.__setattr__(self, 'residual', QSymExpansion(self.degree))

    def coefficient(self, p):  # type: (Partition) -> QPoly
        return self.terms.get(p, QPoly())

    def __add__(self, other):  # type: (SchurExpansion) -> SchurExpansion
        if self.degree != other.degree:
            raise ShapeError('Cannot add expansions of degrees {} and {}'.format(self.degree, other.degree))
        result = dict(self.terms)
        for p, c in other.terms.items():
            result[p] = result.get(p, QPoly()) + c
        return SchurExpansion(self.degree, result, self.residual + other.residual)

    def __eq__(self, other):
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms and self.residual == other.residual

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None  # type: ignore

    @property
    def in_schur_span(self):  # type: () -> bool
        return self.residual.is_zero()

    @property
    def is_schur_positive(self):  # type: () -> bool
        return self.in_schur_span and all(c.is_nonnegative() for c in self.terms.values())

    def as_dict(self):  # type: () -> Dict[Tuple[int, ...], QPoly]
        return {p.parts: c for p, c in self.terms.items()}

    def items(self):  # type: () -> List[Tuple[Partition, QPoly]]
        """Terms in descending lexicographic order of partitions."""
        return sorted(self.terms.items(), key=lambda item: item[0].parts, reverse=True)

    def to_qsym(self):  # type: () -> QSymExpansion
        result = QSymExpansion(self.degree)
        for p, c in self.terms.items():
            result = result + schur_in_Q(p).scale(c)
        return result + self.residual

    def to_json(self):  # type: () -> Dict[six.text_type, Any]
        return {
            'n': self.degree,
            'terms': [{'partition': list(p.parts), 'coeff': c.to_json()} for p, c in self.items()],
            'residual': self.residual.to_json()['terms'],
        }

    def __str__(self):
        return format_schur(self)


def format_schur(expansion):  # type: (SchurExpansion) -> six.text_type
    """Prints e.g. `q*s[3,1] + q^2*s[2,1,1]`; the empty sum prints as `0`."""
    if not expansion.terms:
        return '0'
    return ' + '.join(
        '{}s[{}]'.format(_coefficient_prefix(c), ','.join(six.text_type(part) for part in p.parts))
        for p, c in expansion.items()
    )


@functools.lru_cache(maxsize=None)
def schur_in_Q(p):  # type: (Partition) -> QSymExpansion
    """The Schur function of `p` as the sum of `Q_sigma(T)` over the standard tableaux `T` of shape `p`."""
    return QSymExpansion.from_signatures(
        p.size,
        (descent_signature(t) for t in enumerate_standard(SkewShape(p), max_cells=p.size)),
    )


def extract_schur(f):  # type: (QSymExpansion) -> SchurExpansion
    """
    Peels Schur functions off `f` greedily. Partitions are visited in descending lexicographic order; the coefficient
    of each is read at the signature of its superstandard tableau.
    """
    remaining = f
    found = {}  # type: Dict[Partition, QPoly]
    for p in partitions(f.degree):
        if remaining.is_zero():
            break
        c = remaining.coefficient(descent_signature(superstandard(p)))
        if c:
            found[p] = c
            remaining = remaining - schur_in_Q(p).scale(c)
    if not remaining.is_zero():
        _logger.debug('Expansion of degree %d has a residual of %d terms', f.degree, len(remaining.terms))
    return SchurExpansion(f.degree, found, remaining)


def monomial_symbols(m):  # type: (int) -> Tuple[sympy.Symbol, ...]
    return tuple(sympy.symbols('x1:{}'.format(m + 1)))


def _fundamental_monomials(signature, m):  # type: (Signature, int) -> Iterator[Tuple[int, ...]]
    """Exponent vectors of `Q_signature` in `m` variables."""
    n = len(signature) + 1
    for indices in itertools.combinations_with_replacement(range(m), n):
        if all(indices[j] < indices[j + 1] for j in range(n - 1) if signature[j] < 0):
            exponents = [0] * m
            for i in indices:
                exponents[i] += 1
            yield tuple(exponents)


def evaluate_monomials(f, m=None, q_value=1):  # type: (QSymExpansion, Optional[int], int) -> sympy.Poly
    """
    Expands `f` into monomials in `m` variables (default: its degree) with `q` specialized to `q_value`.
    """
    m = m or max(f.degree, 1)
    coefficients = {}  # type: Dict[Tuple[int, ...], int]
    for signature, c in f.terms.items():
        weight = c.evaluate(q_value)
        for exponents in _fundamental_monomials(signature, m):
            coefficients[exponents] = coefficients.get(exponents, 0) + weight
    return sympy.Poly.from_dict(coefficients or {(0,) * m: 0}, *monomial_symbols(m), domain='ZZ')


def schur_eval(p, m):  # type: (Partition, int) -> sympy.Poly
    """The Schur polynomial of `p` in `m` variables, summed over semistandard tableaux."""
    coefficients = {}  # type: Dict[Tuple[int, ...], int]
    for t in enumerate_semistandard(SkewShape(p), m, max_cells=p.size):
        weight = t.weight(m)
        coefficients[weight] = coefficients.get(weight, 0) + 1
    return sympy.Poly.from_dict(coefficients or {(0,) * m: 0}, *monomial_symbols(m), domain='ZZ')

# coding: utf-8
"""
Exact sparse arithmetic.

A Poly is a polynomial in the variables of a VarSpace (simple roots α_i,
tower symbols λ_i, or free symbols for relation checks) with rational
coefficients. A Char is a finite sum of characters c·e^μ with μ in the same
lattice. Both store a dictionary from exponent tuples to coefficients and never
keep a zero coefficient.
"""
from __future__ import division

import re
from collections import Counter
from fractions import Fraction
from numbers import Rational

import attr
import six
from six.moves import range
from typing import TYPE_CHECKING

from python_schubert.constants import VARSPACE_PREFIXES
from python_schubert.exceptions import InexactDivisionError, SchubertValidationError
from python_schubert.validators import validate_positive, validate_varspace_kind

if TYPE_CHECKING:
    from typing import Dict, Iterable, List, Sequence, Tuple, Union  # noqa
    Exponent = Tuple[int, ...]
    Scalar = Union[int, Fraction]


def _normalize_scalar(value):
    # type: (Scalar) -> Scalar
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value.numerator)
    return value


def _format_scalar(value):
    # type: (Scalar) -> str
    value = _normalize_scalar(value)
    if isinstance(value, Fraction):
        return '{}/{}'.format(value.numerator, value.denominator)
    return str(value)


def _clean_terms(terms):
    # type: (Dict[Exponent, Scalar]) -> Dict[Exponent, Scalar]
    return {
        exponent: _normalize_scalar(coefficient)
        for exponent, coefficient in six.iteritems(dict(terms))
        if coefficient != 0
    }


@attr.s(slots=True, frozen=True)
class VarSpace(object):
    """
    The variables a Poly or Char is written in: `size` variables of one kind.
    """
    kind = attr.ib(validator=validate_varspace_kind)  # type: str
    size = attr.ib(validator=validate_positive)  # type: int

    @property
    def prefix(self):
        # type: () -> str
        return VARSPACE_PREFIXES[self.kind]

    def zero_exponent(self):
        # type: () -> Exponent
        return (0,) * self.size

    def unit_exponent(self, i):
        # type: (int) -> Exponent
        """1-based index."""
        if not 1 <= i <= self.size:
            raise SchubertValidationError(
                'variable index {} outside 1..{}'.format(i, self.size)
            )
        exponent = [0] * self.size
        exponent[i - 1] = 1
        return tuple(exponent)


def alpha_space(rank):
    # type: (int) -> VarSpace
    return VarSpace('alpha', rank)


def lambda_space(n):
    # type: (int) -> VarSpace
    return VarSpace('lambda', n)


def symbol_space(n):
    # type: (int) -> VarSpace
    return VarSpace('symbol', n)


@attr.s(slots=True, frozen=True, eq=False, repr=False)
class _SparseSum(object):
    """
    Shared ring structure: exponents add under multiplication.
    """
    space = attr.ib(validator=attr.validators.instance_of(VarSpace))  # type: VarSpace
    terms = attr.ib(converter=_clean_terms)  # type: Dict[Exponent, Scalar]

    @classmethod
    def constant(cls, space, value):
        # type: (VarSpace, Scalar) -> _SparseSum
        return cls(space, {space.zero_exponent(): value})

    @classmethod
    def zero(cls, space):
        # type: (VarSpace) -> _SparseSum
        return cls(space, {})

    @classmethod
    def one(cls, space):
        # type: (VarSpace) -> _SparseSum
        return cls.constant(space, 1)

    def __attrs_post_init__(self):
        for exponent in self.terms:
            self._check_exponent(exponent)

    def _check_exponent(self, exponent):
        if len(exponent) != self.space.size:
            raise SchubertValidationError(
                'bad exponent {} for {}'.format(exponent, self.space)
            )

    def _coerce(self, other):
        if isinstance(other, type(self)):
            if other.space != self.space:
                raise SchubertValidationError(
                    'variable space mismatch: {} vs {}'.format(self.space, other.space)
                )
            return other
        if isinstance(other, Rational):
            return type(self).constant(self.space, other)
        return NotImplemented

    def is_zero(self):
        # type: () -> bool
        return not self.terms

    def constant_term(self):
        # type: () -> Scalar
        return self.terms.get(self.space.zero_exponent(), 0)

    def is_constant(self):
        # type: () -> bool
        zero = self.space.zero_exponent()
        return all(exponent == zero for exponent in self.terms)

    def __eq__(self, other):
        if isinstance(other, type(self)) and other.space != self.space:
            return False
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((type(self).__name__, self.space, frozenset(self.terms.items())))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for exponent, coefficient in six.iteritems(other.terms):
            terms[exponent] = terms.get(exponent, 0) + coefficient
        return type(self)(self.space, terms)

    __radd__ = __add__

    def __neg__(self):
        return type(self)(
            self.space,
            {exponent: -c for exponent, c in six.iteritems(self.terms)},
        )

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = {}  # type: Dict[Exponent, Scalar]
        for left, a in six.iteritems(self.terms):
            for right, b in six.iteritems(other.terms):
                exponent = tuple(x + y for x, y in zip(left, right))
                terms[exponent] = terms.get(exponent, 0) + a * b
        return type(self)(self.space, terms)

    __rmul__ = __mul__

    def __pow__(self, power):
        # type: (int) -> _SparseSum
        if power < 0:
            raise SchubertValidationError('negative powers are not supported')
        result = type(self).one(self.space)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def scale(self, factor):
        # type: (Scalar) -> _SparseSum
        factor = Fraction(factor)
        return type(self)(
            self.space,
            {exponent: c * factor for exponent, c in six.iteritems(self.terms)},
        )

    def coefficients(self):
        # type: () -> List[Scalar]
        return list(self.terms.values())

    def __repr__(self):
        return '{}({!r})'.format(type(self).__name__, str(self))

    def __str__(self):
        if not self.terms:
            return '0'
        pieces = []
        for exponent in sorted(self.terms, key=self._sort_key):
            coefficient = self.terms[exponent]
            body = self._format_exponent(exponent)
            sign = '-' if coefficient < 0 else '+'
            magnitude = abs(coefficient)
            if not body:
                text = _format_scalar(magnitude)
            elif magnitude == 1:
                text = body
            else:
                text = '{}*{}'.format(_format_scalar(magnitude), body)
            pieces.append((sign, text))
        first_sign, first_text = pieces[0]
        rendered = ('-' if first_sign == '-' else '') + first_text
        for sign, text in pieces[1:]:
            rendered += ' {} {}'.format(sign, text)
        return rendered


class Poly(_SparseSum):
    """
    Polynomial with exact rational coefficients; exponents are nonnegative.
    """
    __slots__ = ()

    def _check_exponent(self, exponent):
        if len(exponent) != self.space.size or min(exponent) < 0:
            raise SchubertValidationError(
                'bad polynomial exponent {} for {}'.format(exponent, self.space)
            )

    @classmethod
    def variable(cls, space, i):
        # type: (VarSpace, int) -> Poly
        return cls(space, {space.unit_exponent(i): 1})

    @classmethod
    def linear(cls, space, coords):
        # type: (VarSpace, Sequence[Scalar]) -> Poly
        """Linear form Σ coords[k]·x_{k+1}."""
        if len(coords) != space.size:
            raise SchubertValidationError(
                'linear form needs {} coordinates, got {}'.format(space.size, len(coords))
            )
        return cls(space, {
            space.unit_exponent(k + 1): c for k, c in enumerate(coords) if c
        })

    @staticmethod
    def _sort_key(exponent):
        return (-sum(exponent), tuple(-e for e in exponent))

    def _format_exponent(self, exponent):
        factors = []
        for k, e in enumerate(exponent):
            if e == 1:
                factors.append('{}{}'.format(self.space.prefix, k + 1))
            elif e > 1:
                factors.append('{}{}^{}'.format(self.space.prefix, k + 1, e))
        return '*'.join(factors)

    def degree(self):
        # type: () -> int
        if not self.terms:
            return -1
        return max(sum(exponent) for exponent in self.terms)

    def is_homogeneous(self, degree=None):
        # type: (int) -> bool
        degrees = set(sum(exponent) for exponent in self.terms)
        if degree is not None:
            return degrees <= {degree}
        return len(degrees) <= 1

    def linear_coords(self):
        # type: () -> Tuple[Scalar, ...]
        if not self.is_homogeneous(1):
            raise SchubertValidationError('{} is not a linear form'.format(self))
        coords = [0] * self.space.size
        for exponent, coefficient in six.iteritems(self.terms):
            coords[exponent.index(1)] = coefficient
        return tuple(coords)

    def substitute(self, assignment):
        # type: (Sequence[Poly]) -> Poly
        """Replace variable k (1-based) by assignment[k-1]."""
        if len(assignment) != self.space.size:
            raise SchubertValidationError(
                'substitution needs {} values, got {}'
                .format(self.space.size, len(assignment))
            )
        target = assignment[0].space
        result = Poly.zero(target)
        for exponent, coefficient in six.iteritems(self.terms):
            term = Poly.constant(target, coefficient)
            for value, e in zip(assignment, exponent):
                if e:
                    term = term * value ** e
            result = result + term
        return result

    def divide_linear(self, form):
        # type: (Poly) -> Poly
        """
        Exact quotient by a nonzero linear form, eliminating the last variable
        that occurs in it.
        """
        form = self._coerce(form)
        if form.is_zero() or not form.is_homogeneous(1):
            raise SchubertValidationError('{} is not a nonzero linear form'.format(form))
        coords = form.linear_coords()
        m = max(k for k, c in enumerate(coords) if c)
        lead = Fraction(coords[m])

        def order(exponent):
            return (exponent[m],) + exponent

        remainder = dict(self.terms)
        quotient = {}  # type: Dict[Exponent, Scalar]
        while remainder:
            exponent = max(remainder, key=order)
            coefficient = remainder[exponent]
            if exponent[m] == 0:
                raise InexactDivisionError(
                    '{} is not divisible by {}'.format(self, form)
                )
            shifted = list(exponent)
            shifted[m] -= 1
            shifted = tuple(shifted)
            factor = coefficient / lead
            quotient[shifted] = quotient.get(shifted, 0) + factor
            for k, c in enumerate(coords):
                if not c:
                    continue
                target = list(shifted)
                target[k] += 1
                target = tuple(target)
                value = remainder.get(target, 0) - factor * c
                if value:
                    remainder[target] = value
                else:
                    remainder.pop(target, None)
        return Poly(self.space, quotient)


class Char(_SparseSum):
    """
    Finite sum of characters c·e^μ with integer exponent vectors μ.
    """
    __slots__ = ()

    @classmethod
    def exp(cls, space, coords, coefficient=1):
        # type: (VarSpace, Sequence[int], Scalar) -> Char
        """The character coefficient·e^coords."""
        if len(coords) != space.size:
            raise SchubertValidationError(
                'character exponent needs {} coordinates, got {}'
                .format(space.size, len(coords))
            )
        return cls(space, {tuple(coords): coefficient})

    @staticmethod
    def _sort_key(exponent):
        return tuple(-e for e in exponent)

    def _format_exponent(self, exponent):
        if not any(exponent):
            return ''
        parts = []
        for k, e in enumerate(exponent):
            if not e:
                continue
            name = '{}{}'.format(self.space.prefix, k + 1)
            sign = '-' if e < 0 else ('+' if parts else '')
            magnitude = '' if abs(e) == 1 else str(abs(e))
            parts.append('{}{}{}'.format(sign, magnitude, name))
        return 'e^{{{}}}'.format(''.join(parts))

    def star(self):
        # type: () -> Char
        """The involution e^μ -> e^{-μ}."""
        return Char(self.space, {
            tuple(-e for e in exponent): c for exponent, c in six.iteritems(self.terms)
        })

    def shift(self, coords):
        # type: (Sequence[int]) -> Char
        """Multiply by e^coords."""
        return Char(self.space, {
            tuple(e + s for e, s in zip(exponent, coords)): c
            for exponent, c in six.iteritems(self.terms)
        })

    def divide_factor(self, beta):
        # type: (Sequence[int]) -> Char
        """Exact quotient by (1 - e^{-beta})."""
        beta = tuple(beta)
        if not any(beta):
            raise SchubertValidationError('cannot divide by 1 - e^0')
        if not _is_positive(beta):
            # 1 - e^{-β} = -e^{-β}(1 - e^{β})
            negated = tuple(-b for b in beta)
            return (-self.shift(beta)).divide_factor(negated)
        p = next(k for k, b in enumerate(beta) if b)
        strings = {}  # type: Dict[Exponent, Dict[int, Scalar]]
        for exponent, coefficient in six.iteritems(self.terms):
            k = exponent[p] // beta[p]
            base = tuple(e - k * b for e, b in zip(exponent, beta))
            strings.setdefault(base, {})[k] = coefficient
        quotient = {}  # type: Dict[Exponent, Scalar]
        for base, string in six.iteritems(strings):
            if sum(string.values()) != 0:
                raise InexactDivisionError(
                    '{} is not divisible by 1 - e^{{-{}}}'.format(self, list(beta))
                )
            running = 0
            for k in range(max(string), min(string), -1):
                running += string.get(k, 0)
                if running:
                    quotient[tuple(e + k * b for e, b in zip(base, beta))] = running
        return Char(self.space, quotient)


def _is_positive(coords):
    # type: (Sequence[int]) -> bool
    for c in coords:
        if c:
            return c > 0
    return False


def poly_add(a, b):
    # type: (Poly, Poly) -> Poly
    return a + b


def poly_mul(a, b):
    # type: (Poly, Poly) -> Poly
    return a * b


def poly_eval_zero(p):
    # type: (Poly) -> Scalar
    """Evaluation at the origin: the constant term."""
    return p.constant_term()


def poly_substitute(p, assignment):
    # type: (Poly, Sequence[Poly]) -> Poly
    return p.substitute(assignment)


def poly_divide_linear(p, form):
    # type: (Poly, Poly) -> Poly
    return p.divide_linear(form)


def char_add(a, b):
    # type: (Char, Char) -> Char
    return a + b


def char_mul(a, b):
    # type: (Char, Char) -> Char
    return a * b


def char_star(c):
    # type: (Char) -> Char
    return c.star()


def char_divide_factor(c, beta):
    # type: (Char, Sequence[int]) -> Char
    return c.divide_factor(beta)


@attr.s(slots=True, frozen=True)
class CharFraction(object):
    """
    numerator / ∏ (1 - e^{-β}) over the multiset `factors`.

    Factors are stored with β positive (first nonzero coordinate > 0) and sorted,
    so equal denominators compare equal.
    """
    numerator = attr.ib(validator=attr.validators.instance_of(Char))  # type: Char
    factors = attr.ib(default=())  # type: Tuple[Exponent, ...]

    @classmethod
    def build(cls, numerator, betas=()):
        # type: (Char, Iterable[Sequence[int]]) -> CharFraction
        factors = []
        for beta in betas:
            beta = tuple(beta)
            if not any(beta):
                raise SchubertValidationError('denominator factors must be nonzero')
            if not _is_positive(beta):
                negated = tuple(-b for b in beta)
                numerator = -numerator.shift(beta)
                beta = negated
            factors.append(beta)
        return cls(numerator, tuple(sorted(factors)))


def _factor_char(space, beta):
    # type: (VarSpace, Exponent) -> Char
    return Char.one(space) - Char.exp(space, [-b for b in beta])


def fraction_add(a, b):
    # type: (CharFraction, CharFraction) -> CharFraction
    space = a.numerator.space
    left, right = Counter(a.factors), Counter(b.factors)
    common = left | right
    numerator_a, numerator_b = a.numerator, b.numerator
    for beta, count in six.iteritems(common):
        for _ in range(count - left[beta]):
            numerator_a = numerator_a * _factor_char(space, beta)
        for _ in range(count - right[beta]):
            numerator_b = numerator_b * _factor_char(space, beta)
    return CharFraction(numerator_a + numerator_b, tuple(sorted(common.elements())))


def fraction_finalize(a):
    # type: (CharFraction) -> Char
    result = a.numerator
    for beta in a.factors:
        result = result.divide_factor(beta)
    return result


def _primitive(coords):
    # type: (Sequence[Scalar]) -> Tuple[Fraction, Tuple[int, ...]]
    """Split coords as scale * v with v a primitive integer vector, v positive."""
    fractions = [Fraction(c) for c in coords]
    denominator = 1
    for f in fractions:
        denominator = denominator * f.denominator // _gcd(denominator, f.denominator)
    integers = [int(f * denominator) for f in fractions]
    divisor = 0
    for value in integers:
        divisor = _gcd(divisor, abs(value))
    if not _is_positive(integers):
        divisor = -divisor
    vector = tuple(value // divisor for value in integers)
    return Fraction(divisor, denominator), vector


def _gcd(a, b):
    # type: (int, int) -> int
    while b:
        a, b = b, a % b
    return a


@attr.s(slots=True, frozen=True)
class PolyFraction(object):
    """
    numerator / ∏ ℓ over primitive integer linear forms ℓ with positive
    leading coefficient.
    """
    numerator = attr.ib(validator=attr.validators.instance_of(Poly))  # type: Poly
    factors = attr.ib(default=())  # type: Tuple[Exponent, ...]

    @classmethod
    def build(cls, numerator, forms=()):
        # type: (Poly, Iterable[Poly]) -> PolyFraction
        factors = []
        for form in forms:
            if form.is_zero():
                raise SchubertValidationError('denominator factors must be nonzero')
            scale, vector = _primitive(form.linear_coords())
            numerator = numerator.scale(1 / scale)
            factors.append(vector)
        return cls(numerator, tuple(sorted(factors)))


def poly_fraction_add(a, b):
    # type: (PolyFraction, PolyFraction) -> PolyFraction
    space = a.numerator.space
    left, right = Counter(a.factors), Counter(b.factors)
    common = left | right
    numerator_a, numerator_b = a.numerator, b.numerator
    for vector, count in six.iteritems(common):
        form = Poly.linear(space, vector)
        for _ in range(count - left[vector]):
            numerator_a = numerator_a * form
        for _ in range(count - right[vector]):
            numerator_b = numerator_b * form
    return PolyFraction(numerator_a + numerator_b, tuple(sorted(common.elements())))


def poly_fraction_finalize(a):
    # type: (PolyFraction) -> Poly
    result = a.numerator
    space = result.space
    for vector in a.factors:
        result = result.divide_linear(Poly.linear(space, vector))
    return result


_POLY_TERM = re.compile(r'^(?P<coefficient>\d+(?:/\d+)?)?\*?(?P<body>.*)$')
_POLY_FACTOR = re.compile(r'^(?P<prefix>[a-z]+)(?P<index>\d+)(?:\^(?P<power>\d+))?$')
_CHAR_BODY = re.compile(r'^e\^\{(?P<exponent>[^}]*)\}$')
_CHAR_PART = re.compile(r'([+-]?)(\d*)([a-z]+)(\d+)')


def _split_signed(text):
    # type: (str) -> List[Tuple[int, str]]
    text = text.replace(' ', '')
    pieces = []
    depth = 0
    current = ''
    sign = 1
    for char in text:
        if char == '{':
            depth += 1
        elif char == '}':
            depth -= 1
        if char in '+-' and depth == 0:
            if current:
                pieces.append((sign, current))
            elif char == '-' and not pieces:
                sign = -sign
                continue
            current = ''
            sign = -1 if char == '-' else 1
            continue
        current += char
    if current:
        pieces.append((sign, current))
    return pieces


def _parse_coefficient(text):
    # type: (str) -> Scalar
    if text is None:
        return 1
    return _normalize_scalar(Fraction(text))


def _variable_index(space, prefix, index):
    # type: (VarSpace, str, str) -> int
    if prefix != space.prefix:
        raise SchubertValidationError(
            'variable {}{} does not belong to {}'.format(prefix, index, space)
        )
    return int(index)


def parse_poly(text, space):
    # type: (str, VarSpace) -> Poly
    """Inverse of str(Poly)."""
    if text.strip() == '0':
        return Poly.zero(space)
    result = Poly.zero(space)
    for sign, piece in _split_signed(text):
        match = _POLY_TERM.match(piece)
        coefficient = _parse_coefficient(match.group('coefficient'))
        exponent = [0] * space.size
        body = match.group('body')
        if body:
            for factor in body.split('*'):
                found = _POLY_FACTOR.match(factor)
                if found is None:
                    raise SchubertValidationError(
                        'cannot parse factor {!r}'.format(factor)
                    )
                k = _variable_index(space, found.group('prefix'), found.group('index'))
                exponent[k - 1] += int(found.group('power') or 1)
        result = result + Poly(space, {tuple(exponent): sign * coefficient})
    return result


def parse_char(text, space):
    # type: (str, VarSpace) -> Char
    """Inverse of str(Char)."""
    if text.strip() == '0':
        return Char.zero(space)
    result = Char.zero(space)
    for sign, piece in _split_signed(text):
        coefficient_text, _, body = piece.rpartition('*')
        if not coefficient_text and not body.startswith('e^'):
            coefficient_text, body = body, ''
        coefficient = _parse_coefficient(coefficient_text or None)
        exponent = [0] * space.size
        if body:
            found = _CHAR_BODY.match(body)
            if found is None:
                raise SchubertValidationError('cannot parse character {!r}'.format(body))
            for part_sign, magnitude, prefix, index in _CHAR_PART.findall(
                found.group('exponent')
            ):
                k = _variable_index(space, prefix, index)
                value = int(magnitude or 1)
                exponent[k - 1] += -value if part_sign == '-' else value
        result = result + Char(space, {tuple(exponent): sign * coefficient})
    return result

# coding: utf-8
"""
The algebra 𝒜_D = A[x_1..x_N] / (x_k^2 - d_kk x_k - Σ_{l<k} d_lk x_l x_k) and the
coefficient functionals T^ε on it.

Through the Bott-Samelson embedding of a reduced word for w, the top functional
T^{(1)} turns a product of pulled-back Schubert classes into the equivariant
structure constant p_{u,v}^w.
"""
from __future__ import division

import logging

import attr
import six
from six.moves import range
from typing import TYPE_CHECKING

from python_schubert.botttower import EpsilonMask
from python_schubert.bottsamelson import BSWord, ht_expand, pullback_xi, v_full
from python_schubert.exceptions import SchubertError, SchubertValidationError
from python_schubert.flagcoh import billey
from python_schubert.symalg import Poly
from python_schubert.validators import validate_positive, validate_upper_triangle
from python_schubert.weyl import (
    bruhat_leq,
    from_word,
    is_reduced,
    longest_element,
    validate_word,
)

if TYPE_CHECKING:
    from typing import Dict, Iterable, Optional, Sequence, Tuple  # noqa
    from python_schubert.botttower import BottTowerSpec  # noqa
    from python_schubert.rootdata import CartanMatrix  # noqa
    from python_schubert.symalg import VarSpace  # noqa
    from python_schubert.weyl import WeylElement  # noqa
    XExponent = Tuple[int, ...]


logger = logging.getLogger(__name__)


@attr.s(slots=True, frozen=True)
class DList(object):
    """
    The coefficients d_lk, l <= k, of the square relations. `d` is an N x N table of
    Poly read on and above the diagonal.
    """
    n = attr.ib(validator=validate_positive)  # type: int
    space = attr.ib()  # type: VarSpace
    d = attr.ib(
        converter=lambda rows: tuple(tuple(row) for row in rows),
        validator=validate_upper_triangle,
    )  # type: Tuple[Tuple[Poly, ...], ...]

    @d.validator
    def _check_degrees(self, attribute, value):
        for k in range(self.n):
            if value[k][k].degree() > 1:
                raise SchubertValidationError('d_kk must have degree <= 1')
            for l in range(k):
                if not value[l][k].is_constant():
                    raise SchubertValidationError('d_lk must be constant for l < k')

    def entry(self, l, k):
        # type: (int, int) -> Poly
        return self.d[l - 1][k - 1]


def dlist_for_word(bsword):
    # type: (BSWord) -> DList
    """d_kk = α_{μ_k}, d_lk = -μ_k(μ_l^∨)."""
    space = bsword.space
    rows = [[Poly.zero(space)] * bsword.n for _ in range(bsword.n)]
    for k in range(1, bsword.n + 1):
        rows[k - 1][k - 1] = Poly.variable(space, bsword.mu(k))
        for l in range(1, k):
            rows[l - 1][k - 1] = Poly.constant(
                space, -bsword.cm.a(bsword.mu(l), bsword.mu(k))
            )
    return DList(bsword.n, space, rows)


def dlist_for_tower(spec):
    # type: (BottTowerSpec) -> DList
    """d_kk = λ_k, d_lk = -c_lk: the algebra is then H_D^*(Y_C)."""
    space = spec.space
    rows = [[Poly.zero(space)] * spec.n for _ in range(spec.n)]
    for k in range(1, spec.n + 1):
        rows[k - 1][k - 1] = Poly.variable(space, k)
        for l in range(1, k):
            rows[l - 1][k - 1] = Poly.constant(space, -spec.entry(l, k))
    return DList(spec.n, space, rows)


@attr.s(slots=True, frozen=True, eq=False, repr=False)
class RawPoly(object):
    """
    A polynomial in x_1..x_N with Poly coefficients, before reduction.
    """
    n = attr.ib()  # type: int
    space = attr.ib()  # type: VarSpace
    terms = attr.ib(factory=dict)  # type: Dict[XExponent, Poly]

    @classmethod
    def monomial(cls, n, space, exponent, coefficient=None):
        # type: (int, VarSpace, Sequence[int], Optional[Poly]) -> RawPoly
        coefficient = Poly.one(space) if coefficient is None else coefficient
        if coefficient.is_zero():
            return cls(n, space, {})
        return cls(n, space, {tuple(exponent): coefficient})

    @classmethod
    def x(cls, n, space, i):
        # type: (int, VarSpace, int) -> RawPoly
        exponent = [0] * n
        exponent[i - 1] = 1
        return cls.monomial(n, space, exponent)

    @classmethod
    def mask_sum(cls, n, space, masks):
        # type: (int, VarSpace, Iterable[EpsilonMask]) -> RawPoly
        """Σ x^ε."""
        result = cls(n, space, {})
        for mask in masks:
            result = result + cls.monomial(n, space, mask.bits)
        return result

    def __add__(self, other):
        terms = dict(self.terms)
        for exponent, coefficient in six.iteritems(other.terms):
            value = terms.get(exponent, Poly.zero(self.space)) + coefficient
            if value.is_zero():
                terms.pop(exponent, None)
            else:
                terms[exponent] = value
        return RawPoly(self.n, self.space, terms)

    def __mul__(self, other):
        if isinstance(other, Poly):
            if other.is_zero():
                return RawPoly(self.n, self.space, {})
            return RawPoly(self.n, self.space, {
                exponent: coefficient * other
                for exponent, coefficient in six.iteritems(self.terms)
            })
        result = RawPoly(self.n, self.space, {})
        for left, a in six.iteritems(self.terms):
            for right, b in six.iteritems(other.terms):
                exponent = tuple(x + y for x, y in zip(left, right))
                result = result + RawPoly(self.n, self.space, {exponent: a * b})
        return result

    def __pow__(self, power):
        result = RawPoly.monomial(self.n, self.space, (0,) * self.n)
        for _ in range(power):
            result = result * self
        return result


@attr.s(slots=True, frozen=True, eq=False)
class ADElement(object):
    """
    Σ coefficient(ε) x^ε in the square-free basis of 𝒜_D.
    """
    n = attr.ib()  # type: int
    space = attr.ib()  # type: VarSpace
    coefficients = attr.ib(factory=dict)  # type: Dict[EpsilonMask, Poly]

    def __getitem__(self, mask):
        # type: (EpsilonMask) -> Poly
        return self.coefficients.get(mask, Poly.zero(self.space))

    def __eq__(self, other):
        if not isinstance(other, ADElement):
            return NotImplemented
        return self.n == other.n and self.coefficients == other.coefficients

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __str__(self):
        if not self.coefficients:
            return '0'
        lines = []
        for mask in sorted(self.coefficients, key=EpsilonMask.sort_key):
            lines.append('({}) x^{}'.format(self.coefficients[mask], mask))
        return ' + '.join(lines)


def _square_expansion(dlist, top, below):
    # type: (DList, int, Iterable[int]) -> RawPoly
    """d_{top,top} + Σ_{j ∈ below} d_{j,top} x_j."""
    n, space = dlist.n, dlist.space
    result = RawPoly.monomial(n, space, (0,) * n, dlist.entry(top, top))
    for j in below:
        coefficient = dlist.entry(j, top)
        if not coefficient.is_zero():
            result = result + RawPoly.x(n, space, j) * coefficient
    return result


def normal_form(dlist, raw):
    # type: (DList, RawPoly) -> ADElement
    """
    Rewrite to square-free monomials, always reducing the highest-index squared
    variable with x_k^s = x_k (d_kk + Σ_{l<k} d_lk x_l)^{s-1}.
    """
    pending = dict(raw.terms)
    result = {}  # type: Dict[XExponent, Poly]
    steps = 0
    while pending:
        exponent, coefficient = pending.popitem()
        squared = [k for k, e in enumerate(exponent) if e >= 2]
        if not squared:
            value = result.get(exponent, Poly.zero(dlist.space)) + coefficient
            if value.is_zero():
                result.pop(exponent, None)
            else:
                result[exponent] = value
            continue
        steps += 1
        k = squared[-1]
        power = exponent[k]
        rest = list(exponent)
        rest[k] = 1
        expansion = _square_expansion(dlist, k + 1, range(1, k + 1)) ** (power - 1)
        for extra, factor in six.iteritems(expansion.terms):
            target = tuple(a + b for a, b in zip(rest, extra))
            value = pending.get(target, Poly.zero(dlist.space)) + coefficient * factor
            if value.is_zero():
                pending.pop(target, None)
            else:
                pending[target] = value
    logger.debug('normal form reached after %d rewriting steps', steps)
    return ADElement(dlist.n, dlist.space, {
        EpsilonMask(exponent): coefficient
        for exponent, coefficient in six.iteritems(result)
    })


def t_eps(dlist, raw, mask):
    # type: (DList, RawPoly, EpsilonMask) -> Poly
    """
    T^ε(P): the coefficient of x^ε in the normal form of P, computed by the
    recursion T^ε(Q x_{i_l}^s) = T^{ε-(i_l)}[Q y^{s-1}] with
    y = d_{i_l,i_l} + Σ_{j<l} d_{i_j,i_l} x_{i_j}.
    """
    if mask.n != dlist.n:
        raise SchubertValidationError(
            'mask {} has length {}, DList has N = {}'.format(mask, mask.n, dlist.n)
        )
    memo = {}  # type: Dict[Tuple[XExponent, Tuple[int, ...]], Poly]
    total = Poly.zero(dlist.space)
    for exponent, coefficient in six.iteritems(raw.terms):
        value = _t_monomial(dlist, exponent, mask.positive, memo)
        if not value.is_zero():
            total = total + coefficient * value
    return total


def _t_monomial(dlist, exponent, positions, memo):
    # type: (DList, XExponent, Tuple[int, ...], Dict) -> Poly
    key = (exponent, positions)
    if key in memo:
        return memo[key]
    space = dlist.space
    inside = set(positions)
    if any(e and (k + 1) not in inside for k, e in enumerate(exponent)):
        result = Poly.zero(space)
    elif not positions:
        result = Poly.one(space)
    else:
        top = positions[-1]
        power = exponent[top - 1]
        if power == 0:
            result = Poly.zero(space)
        else:
            rest = list(exponent)
            rest[top - 1] = 0
            expansion = _square_expansion(dlist, top, positions[:-1]) ** (power - 1)
            result = Poly.zero(space)
            for extra, factor in six.iteritems(expansion.terms):
                target = tuple(a + b for a, b in zip(rest, extra))
                value = _t_monomial(dlist, target, positions[:-1], memo)
                if not value.is_zero():
                    result = result + factor * value
    memo[key] = result
    return result


def graham_positive(p):
    # type: (Poly) -> bool
    return all(coefficient >= 0 for coefficient in p.coefficients())


def _reduced_word_of(cm, w_word):
    # type: (CartanMatrix, Sequence[int]) -> Tuple[int, ...]
    w_word = validate_word(cm, w_word)
    if not is_reduced(cm, w_word):
        raise SchubertValidationError(
            'structure constants need a reduced word, {} is not'.format(list(w_word))
        )
    return w_word


def struct_const(cm, u, v, w_word):
    # type: (CartanMatrix, WeylElement, WeylElement, Sequence[int]) -> Poly
    """
    p_{u,v}^w = T^{(1)}[(Σ_{ε∈pullback_xi(u)} x^ε)(Σ_{ε'∈pullback_xi(v)} x^ε')]
    for the Bott-Samelson word w_word, which must be reduced.
    """
    bsword = BSWord(cm, _reduced_word_of(cm, w_word))
    space = bsword.space
    if bsword.n == 0:
        if u.is_identity() and v.is_identity():
            return Poly.one(space)
        return Poly.zero(space)
    dlist = dlist_for_word(bsword)
    first = RawPoly.mask_sum(bsword.n, space, pullback_xi(bsword, u))
    second = RawPoly.mask_sum(bsword.n, space, pullback_xi(bsword, v))
    if not first.terms or not second.terms:
        return Poly.zero(space)
    value = t_eps(dlist, first * second, EpsilonMask.ones(bsword.n))
    if not graham_positive(value):
        logger.warning('p_{%s,%s}^{%s} = %s has a negative coefficient',
                       u, v, from_word(cm, w_word), value)
    return value


def ordinary_struct_const(cm, u, v, w_word):
    # type: (CartanMatrix, WeylElement, WeylElement, Sequence[int]) -> int
    """The non-equivariant constant: p_{u,v}^w at zero."""
    return struct_const(cm, u, v, w_word).constant_term()


def product_in_basis(
    cm,            # type: CartanMatrix
    u,             # type: WeylElement
    v,             # type: WeylElement
    w0_word=None,  # type: Optional[Sequence[int]]
):
    # type: (...) -> Dict[WeylElement, Poly]
    """
    Every p_{u,v}^w at once: expand g^*(ξ̂^u) g^*(ξ̂^v) in the σ̂^T basis of a
    reduced word dominating u and v, then read one mask per element w.
    """
    if w0_word is None:
        w0_word = longest_element(cm).reduced_word
    w0_word = _reduced_word_of(cm, w0_word)
    bsword = BSWord(cm, w0_word)
    top = from_word(cm, w0_word)
    if not (bruhat_leq(u, top) and bruhat_leq(v, top)):
        raise SchubertValidationError(
            'the word {} does not dominate {} and {}'.format(list(w0_word), u, v)
        )

    def pointwise(point):
        word = v_full(bsword, point).reduced_word
        return billey(cm, u, word) * billey(cm, v, word)

    expansion = ht_expand(bsword, pointwise)
    result = {}  # type: Dict[WeylElement, Poly]
    for mask, coefficient in six.iteritems(expansion):
        w = v_full(bsword, mask)
        if w.length != mask.length:
            raise SchubertError(
                'non-reduced subword {} carries coefficient {}'.format(mask, coefficient)
            )
        if w in result:
            if result[w] != coefficient:
                raise SchubertError(
                    'masks for {} carry different coefficients'.format(w)
                )
            continue
        result[w] = coefficient
    logger.debug('product of %s and %s has %d terms', u, v, len(result))
    return result


def normal_form_expansion(cm, u, v, w0_word):
    # type: (CartanMatrix, WeylElement, WeylElement, Sequence[int]) -> ADElement
    """g^*(ξ̂^u) g^*(ξ̂^v) reduced in 𝒜_D for the word w0_word."""
    bsword = BSWord(cm, w0_word)
    space = bsword.space
    first = RawPoly.mask_sum(bsword.n, space, pullback_xi(bsword, u))
    second = RawPoly.mask_sum(bsword.n, space, pullback_xi(bsword, v))
    return normal_form(dlist_for_word(bsword), first * second)

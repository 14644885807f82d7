# coding: utf-8
"""
T-equivariant K-theory of the flag variety.

Classes are functions W -> R[T] given by their restrictions ψ^w(v). Everything
is evaluated on finite domains of the Weyl group; operations that need the whole
group (base change, relation checks on full tables) require finite type.
"""
from __future__ import division

import itertools
import logging

import attr
import six
from six.moves import range
from typing import TYPE_CHECKING

from python_schubert import helpers
from python_schubert.botttower import all_masks
from python_schubert.bottsamelson import BSWord, alpha_eps, bs_euler_char, v_full
from python_schubert.exceptions import SchubertValidationError
from python_schubert.helpers import VerificationReport
from python_schubert.rootdata import positive_roots, simple_root
from python_schubert.symalg import (
    Char,
    CharFraction,
    Poly,
    alpha_space,
    fraction_add,
    fraction_finalize,
    symbol_space,
)
from python_schubert.weyl import (
    all_elements,
    apply,
    bruhat_leq,
    demazure_multiply,
    demazure_product,
    elements_up_to_length,
    identity,
    inversion_set,
    is_reduced,
    prefix_roots,
    reduced_words,
    validate_word,
)

if TYPE_CHECKING:
    from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple  # noqa
    from python_schubert.rootdata import CartanMatrix  # noqa
    from python_schubert.weyl import WeylElement  # noqa
    Table = Dict[WeylElement, Char]
    ClassFunction = Callable[[WeylElement], Char]


logger = logging.getLogger(__name__)


def _space(cm):
    return alpha_space(cm.rank)


def _rho_shift(cm, word):
    # type: (CartanMatrix, Sequence[int]) -> Char
    """e^{ρ - vρ} = e^{Σ β_j} for any word of v."""
    total = [0] * cm.rank
    for root in prefix_roots(cm, word):
        total = [t + c for t, c in zip(total, root.coords)]
    return Char.exp(_space(cm), total)


def psi(cm, w, v_word):
    # type: (CartanMatrix, WeylElement, Sequence[int]) -> Char
    """
    ψ^w(v) = e^{ρ - vρ} Σ (e^{-β_{j_1}} - 1)⋯(e^{-β_{j_m}} - 1) over the
    subsequences of the word whose Demazure product is w.
    """
    return _psi(cm, w, validate_word(cm, v_word))


@helpers.simple_cache
def _psi(cm, w, v_word):
    # type: (CartanMatrix, WeylElement, Tuple[int, ...]) -> Char
    space = _space(cm)
    factors = [
        Char.exp(space, (-root).coords) - 1 for root in prefix_roots(cm, v_word)
    ]
    total = Char.zero(space)
    for size in range(w.length, len(v_word) + 1):
        for positions in itertools.combinations(range(len(v_word)), size):
            if demazure_product(cm, [v_word[p] for p in positions]) != w:
                continue
            term = Char.one(space)
            for p in positions:
                term = term * factors[p]
            total = total + term
    return total * _rho_shift(cm, v_word)


@attr.s(slots=True)
class KRestriction(object):
    """
    On-demand ψ^w(v) for a fixed Cartan matrix, memoized by (w, v).
    """
    cm = attr.ib()  # type: CartanMatrix
    memo = attr.ib(factory=dict)  # type: Dict[Tuple[WeylElement, WeylElement], Char]

    def __call__(self, w, v):
        # type: (WeylElement, WeylElement) -> Char
        key = (w, v)
        if key not in self.memo:
            self.memo[key] = psi(self.cm, w, v.reduced_word)
        return self.memo[key]

    def table(self, w, domain):
        # type: (WeylElement, Iterable[WeylElement]) -> Table
        return {v: self(w, v) for v in domain}


def psi_diagonal(w):
    # type: (WeylElement) -> Char
    """ψ^w(w) = ∏_{β∈Δ(w^{-1})} (1 - e^β)."""
    space = _space(w.cm)
    value = Char.one(space)
    for root in inversion_set(w.inverse()):
        value = value * (1 - Char.exp(space, root.coords))
    return value


def _d_value(cm, i, u, here, there):
    # type: (CartanMatrix, int, WeylElement, Char, Char) -> Char
    beta = apply(u, simple_root(cm, i)).coords
    numerator = here - there * Char.exp(_space(cm), [-b for b in beta])
    return numerator.divide_factor(beta)


def demazure_D(cm, i, f, domain):
    # type: (CartanMatrix, int, Table, Iterable[WeylElement]) -> Table
    """(D_i f)(v) = (f(v) - f(vs_i) e^{-vα_i}) / (1 - e^{-vα_i}) on the domain."""
    result = {}
    for u in domain:
        shifted = u.right_multiply(i)
        if u not in f or shifted not in f:
            raise SchubertValidationError(
                'D_{} needs values at {} and {}'.format(i, u, shifted)
            )
        result[u] = _d_value(cm, i, u, f[u], f[shifted])
    return result


def demazure_string(cm, word, seed):
    # type: (CartanMatrix, Sequence[int], Callable[[WeylElement], Char]) -> Char
    """(D_{i_1} ∘ ⋯ ∘ D_{i_n})(f)(1), evaluating f only where needed."""
    memo = {}

    def value(k, u):
        key = (k, u)
        if key in memo:
            return memo[key]
        if k == len(word):
            result = seed(u)
        else:
            i = word[k]
            shifted = value(k + 1, u.right_multiply(i))
            result = _d_value(cm, i, u, value(k + 1, u), shifted)
        memo[key] = result
        return result

    return value(0, identity(cm))


def _domain(cm, bound):
    # type: (CartanMatrix, Optional[int]) -> List[WeylElement]
    if bound is None:
        return all_elements(cm)
    return elements_up_to_length(cm, bound)


def verify_psi_characterization(cm, bound=None):
    # type: (CartanMatrix, Optional[int]) -> VerificationReport
    """
    D_v(ψ^w)(1) = δ_{v,w} for all v, w up to length `bound` (the whole group
    when no bound is given), together with the support, diagonal and ψ^1
    properties of the restrictions.
    """
    report = VerificationReport('psi-axioms')
    restriction = KRestriction(cm)
    elements = _domain(cm, bound)
    space = _space(cm)
    one = identity(cm)
    for w in elements:
        for v in elements:
            value = demazure_string(cm, v.reduced_word, lambda u: restriction(w, u))
            expected = Char.one(space) if v == w else Char.zero(space)
            report.check(value == expected, 'D_{}(psi^{})(1) = {}'.format(v, w, value))
            restricted = restriction(w, v)
            if not bruhat_leq(w, v):
                report.check(restricted.is_zero(),
                             'psi^{}({}) = {} off support'.format(w, v, restricted))
        report.check(restriction(w, w) == psi_diagonal(w),
                     'psi^{0}({0}) differs from the inversion product'.format(w))
        report.check(restriction(one, w) == _rho_shift(cm, w.reduced_word),
                     'psi^1({}) differs from e^(rho - v rho)'.format(w))
    logger.info('psi characterization over %d elements: %d checks, %d failures',
                len(elements), report.checked, len(report.failures))
    return report


def _lazy_D(cm, i, f):
    # type: (CartanMatrix, int, ClassFunction) -> ClassFunction
    """D_i f as a function, evaluating f only where asked."""
    memo = {}

    def value(u):
        if u not in memo:
            memo[u] = _d_value(cm, i, u, f(u), f(u.right_multiply(i)))
        return memo[u]

    return value


def _restricted(restriction, w):
    return lambda u: restriction(w, u)


def verify_demazure_step(cm, bound=None):
    # type: (CartanMatrix, Optional[int]) -> VerificationReport
    """
    D_i ψ^w = ψ^w + ψ^{ws_i} if ws_i < w and 0 otherwise, compared at every v up
    to length `bound` (the whole group when no bound is given).
    """
    report = VerificationReport('psi-axioms')
    restriction = KRestriction(cm)
    elements = _domain(cm, bound)
    zero = Char.zero(_space(cm))
    for w in elements:
        f = _restricted(restriction, w)
        for i in range(1, cm.rank + 1):
            result = _lazy_D(cm, i, f)
            if w.is_right_descent(i):
                shorter = w.right_multiply(i)
                matches = all(
                    result(v) == f(v) + restriction(shorter, v) for v in elements
                )
            else:
                matches = all(result(v) == zero for v in elements)
            report.check(matches, 'D_{} psi^{}'.format(i, w))
    return report


def _braid_word(i, j, m):
    # type: (int, int, int) -> List[int]
    return [i if k % 2 == 0 else j for k in range(m)]


def _apply_string(cm, word, f):
    for k in reversed(word):
        f = _lazy_D(cm, k, f)
    return f


def verify_demazure_relations(cm, i, j, bound=None):
    # type: (CartanMatrix, int, int, Optional[int]) -> VerificationReport
    """
    D_i² = D_i and the braid relation of order m_ij on ψ^w, for w and the
    evaluation points up to length `bound` (the whole group when no bound is given).
    """
    report = VerificationReport('demazure-relations')
    restriction = KRestriction(cm)
    elements = _domain(cm, bound)
    m = cm.coxeter_order(i, j)
    for w in elements:
        f = _restricted(restriction, w)
        once = _lazy_D(cm, i, f)
        twice = _lazy_D(cm, i, once)
        report.check(all(twice(v) == once(v) for v in elements),
                     'D_{0}^2 != D_{0} on psi^{1}'.format(i, w))
        if m is None or i == j:
            continue
        left = _apply_string(cm, _braid_word(i, j, m), f)
        right = _apply_string(cm, _braid_word(j, i, m), f)
        report.check(all(left(v) == right(v) for v in elements),
                     'braid relation of D_{} and D_{} fails on psi^{}'.format(i, j, w))
    return report


def _positive_product(cm):
    # type: (CartanMatrix) -> Char
    """∏_{α∈Δ+} (1 - e^{-α}), finite type."""
    space = _space(cm)
    value = Char.one(space)
    for root, _ in positive_roots(cm):
        value = value * (1 - Char.exp(space, (-root).coords))
    return value


def base_change_b(cm, v_word):
    # type: (CartanMatrix, Sequence[int]) -> Char
    """
    b^v = Σ_{ε', v(ε') = 1} ∏_{α∈Δ+}(1 - e^{-α}) / ∏_i (1 - e^{-α_i(ε')})
    over every subword of the word whose plain product is 1, the empty one
    included.
    """
    v_word = validate_word(cm, v_word)
    top = _positive_product(cm)
    if not v_word:
        return top
    bsword = BSWord(cm, v_word)
    total = CharFraction(Char.zero(bsword.space))
    scanned = 0
    for mask in all_masks(bsword.n):
        if not v_full(bsword, mask).is_identity():
            continue
        scanned += 1
        weights = [alpha_eps(bsword, mask, i).coords for i in range(1, bsword.n + 1)]
        total = fraction_add(total, CharFraction.build(top, weights))
    logger.debug('b^v for %s: %d subwords with product 1', list(v_word), scanned)
    return fraction_finalize(total)


def change_of_basis(cm, w):
    # type: (CartanMatrix, WeylElement) -> Dict[WeylElement, Char]
    """γ^w = Σ_v b^{v̲ w̲^{-1}} ψ^v, finite type."""
    inverse = w.inverse()
    result = {}
    for v in all_elements(cm):
        result[v] = base_change_b(cm, demazure_multiply(v, inverse).reduced_word)
    return result


def gamma_by_recursion(cm, w):
    # type: (CartanMatrix, WeylElement) -> Table
    """
    γ^w on the whole group: γ^1 is ∏_{α∈Δ+}(1 - e^{-α}) at 1 and 0 elsewhere, and
    γ^{us_i} = D_i γ^u along a reduced word of w.
    """
    elements = all_elements(cm)
    space = _space(cm)
    one = identity(cm)
    top = _positive_product(cm)
    table = {v: top if v == one else Char.zero(space) for v in elements}
    for i in w.reduced_word:
        table = demazure_D(cm, i, table, elements)
    return table


def verify_base_change(cm, targets=None):
    # type: (CartanMatrix, Optional[Iterable[WeylElement]]) -> VerificationReport
    """Σ_v b^{v̲ w̲^{-1}} ψ^v(u) = γ^w(u) for every u and each target w."""
    report = VerificationReport('basechange')
    restriction = KRestriction(cm)
    elements = all_elements(cm)
    for w in (elements if targets is None else targets):
        coefficients = change_of_basis(cm, w)
        gamma = gamma_by_recursion(cm, w)
        for u in elements:
            total = Char.zero(_space(cm))
            for v, coefficient in six.iteritems(coefficients):
                total = total + coefficient * restriction(v, u)
            report.check(total == gamma[u], 'gamma^{}({})'.format(w, u))
    return report


@attr.s(slots=True, frozen=True, eq=False)
class HeckeElement(object):
    """
    Σ c_w u_w in the Hecke algebra with u_i² = u_i. Coefficients are Poly or
    Char values of one space; zero coefficients are dropped.
    """
    cm = attr.ib()  # type: CartanMatrix
    coefficients = attr.ib(
        converter=lambda terms: {
            w: c for w, c in six.iteritems(dict(terms)) if not c.is_zero()
        }
    )

    def __getitem__(self, w):
        return self.coefficients.get(w, 0)

    def __mul__(self, other):
        # type: (HeckeElement) -> HeckeElement
        return hecke_multiply(self, other)

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.cm == other.cm and self.coefficients == other.coefficients

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __str__(self):
        if not self.coefficients:
            return '0'
        return ' + '.join(
            '({}) u_{}'.format(self.coefficients[w], w)
            for w in sorted(self.coefficients, key=lambda element: element.sort_key())
        )


def hecke_multiply(a, b):
    # type: (HeckeElement, HeckeElement) -> HeckeElement
    """u_x u_y = u_{x̲·y̲}."""
    terms = {}
    for x, left in six.iteritems(a.coefficients):
        for y, right in six.iteritems(b.coefficients):
            product = demazure_multiply(x, y)
            value = left * right
            terms[product] = terms[product] + value if product in terms else value
    return HeckeElement(a.cm, terms)


def hecke_h(cm, i, x):
    """h_i(x) = 1 + (x - 1)u_i."""
    one = identity(cm)
    return HeckeElement(cm, {one: type(x).one(x.space), one.right_multiply(i): x - 1})


def _hecke_chain(cm, factors):
    result = None
    for i, x in factors:
        factor = hecke_h(cm, i, x)
        result = factor if result is None else result * factor
    return result


def yang_baxter_sides(cm, i, j, x, y):
    # type: (CartanMatrix, int, int, Poly, Poly) -> Optional[Tuple[HeckeElement, ...]]
    """Both sides of the relation of order m_ij, or None for infinite order."""
    m = cm.coxeter_order(i, j)
    if m == 2:
        left = [(i, x), (j, y)]
        right = [(j, y), (i, x)]
    elif m == 3:
        left = [(i, x), (j, x * y), (i, y)]
        right = [(j, y), (i, x * y), (j, x)]
    elif m == 4:
        left = [(i, x), (j, x * y), (i, x * y ** 2), (j, y)]
        right = [(j, y), (i, x * y ** 2), (j, x * y), (i, x)]
    elif m == 6:
        left = [(i, x), (j, x ** 3 * y), (i, x ** 2 * y), (j, x ** 3 * y ** 2),
                (i, x * y), (j, y)]
        right = [(j, y), (i, x * y), (j, x ** 3 * y ** 2), (i, x ** 2 * y),
                 (j, x ** 3 * y), (i, x)]
    else:
        return None
    return _hecke_chain(cm, left), _hecke_chain(cm, right)


def verify_yang_baxter(cm, i, j):
    # type: (CartanMatrix, int, int) -> VerificationReport
    """The Hecke relation of order m_ij over the polynomial ring in two symbols."""
    report = VerificationReport('yang-baxter')
    space = symbol_space(2)
    sides = yang_baxter_sides(cm, i, j, Poly.variable(space, 1), Poly.variable(space, 2))
    if sides is None:
        logger.info('s%d s%d has infinite order, no relation to check', i, j)
        return report
    left, right = sides
    report.check(left == right, 'relation of order {} for ({}, {})'.format(
        cm.coxeter_order(i, j), i, j))
    return report


def r_element(cm, v_word):
    # type: (CartanMatrix, Sequence[int]) -> HeckeElement
    """ℛ_v = ∏_j h_{i_j}(e^{-β_j}) over a reduced word of v."""
    v_word = validate_word(cm, v_word)
    if not is_reduced(cm, v_word):
        raise SchubertValidationError(
            'ℛ_v needs a reduced word, {} is not'.format(list(v_word))
        )
    space = _space(cm)
    one = identity(cm)
    result = HeckeElement(cm, {one: Char.one(space)})
    for i, root in zip(v_word, prefix_roots(cm, v_word)):
        result = result * hecke_h(cm, i, Char.exp(space, (-root).coords))
    return result


def r_element_is_word_independent(cm, v):
    # type: (CartanMatrix, WeylElement) -> bool
    words = reduced_words(v)
    first = r_element(cm, words[0])
    return all(r_element(cm, word) == first for word in words[1:])


def psi_via_hecke(cm, w, v_word):
    # type: (CartanMatrix, WeylElement, Sequence[int]) -> Char
    """The u_w coefficient of ℛ_v times e^{ρ - vρ}."""
    element = r_element(cm, v_word)
    if w not in element.coefficients:
        return Char.zero(_space(cm))
    return element[w] * _rho_shift(cm, v_word)


def star_euler_matches(cm, word, w):
    # type: (CartanMatrix, Sequence[int], WeylElement) -> bool
    """
    χ(Γ̄_ε, g^*(*ψ̂^w)) = δ_{v̲(ε), w} for every mask ε of the word, where
    v̲(ε) is the Demazure product of the subword.
    """
    bsword = BSWord(cm, word)
    space = bsword.space
    table = {
        point: psi(cm, w, v_full(bsword, point).reduced_word).star()
        for point in all_masks(bsword.n)
    }
    for mask in all_masks(bsword.n):
        subword = [bsword.mu(k) for k in mask.positive]
        if demazure_product(cm, subword) == w:
            expected = Char.one(space)
        else:
            expected = Char.zero(space)
        if bs_euler_char(bsword, table, mask) != expected:
            return False
    return True

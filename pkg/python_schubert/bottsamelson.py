# coding: utf-8
"""
Bott-Samelson varieties Γ(μ_1, ..., μ_N) for a word of simple roots.

Cells and fixed points are indexed by masks as for Bott towers; the Weyl group
data v_i(ε) and α_i(ε) = v_i(ε)μ_i replace the chain coefficients.
"""
from __future__ import division

import itertools
import logging

import attr
from six.moves import range
from typing import TYPE_CHECKING

from python_schubert import helpers
from python_schubert.botttower import (
    BottTowerSpec,
    EpsilonMask,
    all_masks,
    chain_coeff,
    fibre_euler_char,
    fibre_integral,
    lambda_weight,
)
from python_schubert.exceptions import SchubertValidationError
from python_schubert.rootdata import CartanMatrix, pairing, simple_coroot, simple_root
from python_schubert.symalg import Char, Poly, alpha_space
from python_schubert.validators import validate_word
from python_schubert.weyl import apply, demazure_product, identity

if TYPE_CHECKING:
    from typing import Callable, Dict, List, Set, Tuple  # noqa
    from python_schubert.botttower import FixedPointTable  # noqa
    from python_schubert.rootdata import RootVector  # noqa
    from python_schubert.weyl import WeylElement  # noqa


logger = logging.getLogger(__name__)


@attr.s(slots=True, frozen=True)
class BSWord(object):
    cm = attr.ib(
        validator=attr.validators.instance_of(CartanMatrix)
    )  # type: CartanMatrix
    indices = attr.ib(converter=tuple, validator=validate_word)  # type: Tuple[int, ...]

    @property
    def n(self):
        # type: () -> int
        return len(self.indices)

    def mu(self, k):
        # type: (int) -> int
        """Simple-root index of μ_k."""
        return self.indices[k - 1]

    @property
    def space(self):
        return alpha_space(self.cm.rank)


def _check_mask(bsword, mask):
    if mask.n != bsword.n:
        raise SchubertValidationError(
            'mask {} has length {}, word has length {}'.format(mask, mask.n, bsword.n)
        )


@helpers.simple_cache
def induced_list(bsword):
    # type: (BSWord) -> BottTowerSpec
    """The Bott list b_ij = μ_j(μ_i^∨) = a[μ_i][μ_j]."""
    return BottTowerSpec.from_entries(bsword.n, [
        (i, j, bsword.cm.a(bsword.mu(i), bsword.mu(j)))
        for i in range(1, bsword.n + 1)
        for j in range(i + 1, bsword.n + 1)
    ])


def v_range(bsword, mask, i, j):
    # type: (BSWord, EpsilonMask, int, int) -> WeylElement
    """v_i^j(ε): ordered product of s_{μ_k} over i <= k <= j with k ∈ π+(ε)."""
    _check_mask(bsword, mask)
    w = identity(bsword.cm)
    for k in range(i, j + 1):
        if mask[k]:
            w = w.right_multiply(bsword.mu(k))
    return w


@helpers.simple_cache
def v_eps(bsword, mask, i):
    # type: (BSWord, EpsilonMask, int) -> WeylElement
    return v_range(bsword, mask, 1, i)


def v_full(bsword, mask):
    # type: (BSWord, EpsilonMask) -> WeylElement
    """v(ε) = v_N(ε)."""
    return v_eps(bsword, mask, bsword.n)


@helpers.simple_cache
def alpha_eps(bsword, mask, i):
    # type: (BSWord, EpsilonMask, int) -> RootVector
    """α_i(ε) = v_i(ε) α_{μ_i}."""
    return apply(v_eps(bsword, mask, i), simple_root(bsword.cm, bsword.mu(i)))


def _root_poly(bsword, root):
    # type: (BSWord, RootVector) -> Poly
    return Poly.linear(bsword.space, root.coords)


def tau(bsword, form):
    # type: (BSWord, Poly) -> Poly
    """λ_k -> α_{μ_k}."""
    return form.substitute([
        _root_poly(bsword, simple_root(bsword.cm, bsword.mu(k)))
        for k in range(1, bsword.n + 1)
    ])


def tau_consistency(bsword, mask, i):
    # type: (BSWord, EpsilonMask, int) -> bool
    """α_i(ε) = -τ(λ_i(ε)) for the induced list."""
    weight = lambda_weight(induced_list(bsword), mask, i)
    return _root_poly(bsword, alpha_eps(bsword, mask, i)) == -tau(bsword, weight)


def sigma_T(bsword, mask, point):
    # type: (BSWord, EpsilonMask, EpsilonMask) -> Poly
    """(-1)^{l(ε)} ∏_{i∈π+(ε)} α_i(ε'), zero unless ε <= ε'."""
    _check_mask(bsword, mask)
    _check_mask(bsword, point)
    if not mask.is_below(point):
        return Poly.zero(bsword.space)
    value = Poly.one(bsword.space)
    for i in mask.positive:
        value = value * -_root_poly(bsword, alpha_eps(bsword, point, i))
    return value


def mu_T(bsword, mask, point):
    # type: (BSWord, EpsilonMask, EpsilonMask) -> Char
    """
    ∏_{i∈π+(ε')} e^{α_i(ε')} ∏_{i∈π+(ε)} (e^{-α_i(ε')} - 1),
    zero unless ε <= ε'.
    """
    _check_mask(bsword, mask)
    _check_mask(bsword, point)
    space = bsword.space
    if not mask.is_below(point):
        return Char.zero(space)
    value = Char.one(space)
    for i in point.positive:
        value = value.shift(alpha_eps(bsword, point, i).coords)
    for i in mask.positive:
        value = value * (Char.exp(space, (-alpha_eps(bsword, point, i)).coords) - 1)
    return value


def pullback_xi(bsword, w):
    # type: (BSWord, WeylElement) -> Set[EpsilonMask]
    """Masks with l(ε) = l(w) and v(ε) = w: the reduced subwords for w."""
    masks = set()
    for positions in itertools.combinations(range(1, bsword.n + 1), w.length):
        mask = EpsilonMask.from_positions(bsword.n, positions)
        if v_full(bsword, mask) == w:
            masks.add(mask)
    logger.debug('%d reduced subwords of %s for %s', len(masks), bsword.indices, w)
    return masks


def pullback_psi(bsword, w):
    # type: (BSWord, WeylElement) -> Set[EpsilonMask]
    """Masks whose subword has Demazure product w."""
    masks = set()
    for mask in all_masks(bsword.n):
        if mask.length < w.length:
            continue
        subword = [bsword.mu(k) for k in mask.positive]
        if demazure_product(bsword.cm, subword) == w:
            masks.add(mask)
    return masks


def multiply_generator_T(bsword, i, mask):
    # type: (BSWord, int, EpsilonMask) -> Dict[EpsilonMask, Poly]
    """
    σ̂_i σ̂_ε in closed form: σ̂_{ε+(i)} when i ∈ π-(ε), otherwise
    σ_i(ε) σ̂_ε + Σ_{j<i, j∈π-(ε)} α^i_j(ε)(μ_j^∨) σ̂_{ε+(j)}
    with α^i_j(ε) = v^i_{j+1}(ε) μ_i.
    """
    _check_mask(bsword, mask)
    space = bsword.space
    if not mask[i]:
        return {mask.with_bit(i, 1): Poly.one(space)}
    result = {mask: sigma_T(bsword, EpsilonMask.unit(bsword.n, i), mask)}
    for j in mask.negative:
        if j >= i:
            continue
        prefix = v_range(bsword, mask, j + 1, i)
        root = apply(prefix, simple_root(bsword.cm, bsword.mu(i)))
        coefficient = pairing(bsword.cm, root, simple_coroot(bsword.cm, bsword.mu(j)))
        if coefficient:
            result[mask.with_bit(j, 1)] = Poly.constant(space, coefficient)
    return result


def product_coefficient_matches_tower(bsword, i, j, mask):
    # type: (BSWord, int, int, EpsilonMask) -> bool
    """The product-rule coefficient is the chain coefficient c_ji(ε) of induced_list."""
    root = apply(v_range(bsword, mask, j + 1, i), simple_root(bsword.cm, bsword.mu(i)))
    coefficient = pairing(bsword.cm, root, simple_coroot(bsword.cm, bsword.mu(j)))
    return coefficient == chain_coeff(induced_list(bsword), mask, j, i)


def _divide_sigma_diagonal(bsword):
    def divide(value, mask):
        for i in mask.positive:
            value = value.divide_linear(_root_poly(bsword, alpha_eps(bsword, mask, i)))
        # σ_ε(ε) carries the sign (-1)^{l(ε)}
        return value if mask.length % 2 == 0 else -value
    return divide


def ht_expand(bsword, values):
    # type: (BSWord, Callable[[EpsilonMask], Poly]) -> Dict[EpsilonMask, Poly]
    """Coefficients of a fixed-point table in the σ̂^T basis."""
    return helpers.triangular_expand(
        all_masks(bsword.n),
        EpsilonMask.is_below,
        lambda mask, point: sigma_T(bsword, mask, point),
        _divide_sigma_diagonal(bsword),
        values,
    )


def ht_product(bsword, first, second):
    # type: (BSWord, EpsilonMask, EpsilonMask) -> Dict[EpsilonMask, Poly]
    return ht_expand(
        bsword,
        lambda point: sigma_T(bsword, first, point) * sigma_T(bsword, second, point),
    )


def bs_integrate(bsword, table, mask):
    # type: (BSWord, FixedPointTable, EpsilonMask) -> Poly
    """Σ_{ε'<=ε} table(ε') / ∏_{i∈π+(ε)} (-α_i(ε'))."""
    _check_mask(bsword, mask)
    def weight(point, i):
        return -_root_poly(bsword, alpha_eps(bsword, point, i))

    return fibre_integral(bsword.space, table, mask, weight)


def bs_euler_char(bsword, table, mask):
    # type: (BSWord, FixedPointTable, EpsilonMask) -> Char
    """Σ_{ε'<=ε} table(ε') / ∏_{i∈π+(ε)} (1 - e^{α_i(ε')})."""
    _check_mask(bsword, mask)
    return fibre_euler_char(bsword.space, table, mask,
                            lambda point, i: (-alpha_eps(bsword, point, i)).coords)

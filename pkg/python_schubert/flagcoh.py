# coding: utf-8
"""
T-equivariant cohomology of the flag variety through restrictions ξ^w(v).
"""
from __future__ import division

import itertools
import logging

import attr
from six.moves import range
from typing import TYPE_CHECKING

from python_schubert import helpers
from python_schubert.botttower import EpsilonMask
from python_schubert.bottsamelson import BSWord, pullback_xi, sigma_T
from python_schubert.exceptions import SchubertValidationError
from python_schubert.rootdata import simple_root
from python_schubert.symalg import Poly, alpha_space
from python_schubert.weyl import (
    apply,
    bruhat_covers_up,
    from_word,
    identity,
    is_reduced,
    prefix_roots,
    validate_word,
)

if TYPE_CHECKING:
    from typing import Callable, Dict, Iterable, Optional, Sequence, Tuple  # noqa
    from python_schubert.rootdata import CartanMatrix, RootVector  # noqa
    from python_schubert.weyl import WeylElement  # noqa


logger = logging.getLogger(__name__)


def _root_poly(cm, root):
    # type: (CartanMatrix, RootVector) -> Poly
    return Poly.linear(alpha_space(cm.rank), root.coords)


def billey(cm, w, v_word):
    # type: (CartanMatrix, WeylElement, Sequence[int]) -> Poly
    """
    ξ^w(v) = Σ β_{j_1}⋯β_{j_m} over subsequences of length m = l(w) of the word
    whose product is w, with β_j = s_{i_1}⋯s_{i_{j-1}} α_{i_j}.
    """
    return _billey(cm, w, validate_word(cm, v_word))


@helpers.simple_cache
def _billey(cm, w, v_word):
    # type: (CartanMatrix, WeylElement, Tuple[int, ...]) -> Poly
    space = alpha_space(cm.rank)
    betas = [_root_poly(cm, root) for root in prefix_roots(cm, v_word)]
    total = Poly.zero(space)
    for positions in itertools.combinations(range(len(v_word)), w.length):
        if from_word(cm, [v_word[p] for p in positions]) != w:
            continue
        term = Poly.one(space)
        for p in positions:
            term = term * betas[p]
        total = total + term
    return total


def billey_via_bs(cm, w, v_word):
    # type: (CartanMatrix, WeylElement, Sequence[int]) -> Poly
    """Σ over the reduced subwords ε for w of σ_ε^T at the full mask."""
    bsword = BSWord(cm, v_word)
    full = EpsilonMask.ones(bsword.n)
    total = Poly.zero(bsword.space)
    for mask in pullback_xi(bsword, w):
        total = total + sigma_T(bsword, mask, full)
    return total


@attr.s(slots=True)
class CohRestriction(object):
    """
    On-demand ξ^w(v) for a fixed Cartan matrix, memoized by (w, v).
    """
    cm = attr.ib()  # type: CartanMatrix
    memo = attr.ib(factory=dict)  # type: Dict[Tuple[WeylElement, WeylElement], Poly]

    def __call__(self, w, v):
        # type: (WeylElement, WeylElement) -> Poly
        key = (w, v)
        if key not in self.memo:
            self.memo[key] = billey(self.cm, w, v.reduced_word)
        return self.memo[key]

    def table(self, w, domain):
        # type: (WeylElement, Iterable[WeylElement]) -> Dict[WeylElement, Poly]
        return {v: self(w, v) for v in domain}


def xi_simple(cm, i, v):
    # type: (CartanMatrix, int, WeylElement) -> Poly
    """ξ^{s_i}(v): the β_j of a reduced word of v at positions with i_j = i."""
    word = v.reduced_word
    total = Poly.zero(alpha_space(cm.rank))
    for index, root in zip(word, prefix_roots(cm, word)):
        if index == i:
            total = total + _root_poly(cm, root)
    return total


def demazure_A(
    cm,      # type: CartanMatrix
    i,       # type: int
    f,       # type: Dict[WeylElement, Poly]
    domain,  # type: Iterable[WeylElement]
):
    # type: (...) -> Dict[WeylElement, Poly]
    """(A_i f)(u) = (f(us_i) - f(u)) / u(α_i) on every u of the domain."""
    result = {}
    for u in domain:
        shifted = u.right_multiply(i)
        if u not in f or shifted not in f:
            raise SchubertValidationError(
                'A_{} needs values at {} and {}'.format(i, u, shifted)
            )
        difference = f[shifted] - f[u]
        result[u] = difference.divide_linear(
            _root_poly(cm, apply(u, simple_root(cm, i)))
        )
    return result


def _operator_string(
    cm,      # type: CartanMatrix
    word,    # type: Sequence[int]
    hatted,  # type: Sequence[bool]
    seed,    # type: Callable[[WeylElement], Poly]
):
    # type: (...) -> Poly
    """
    (O_1 ∘ ⋯ ∘ O_n)(f)(1) where O_k is the shift f -> f(· s_{i_k}) when hatted[k]
    and A_{i_k} otherwise.
    """
    memo = {}

    def value(k, u):
        key = (k, u)
        if key in memo:
            return memo[key]
        if k == len(word):
            result = seed(u)
        elif hatted[k]:
            result = value(k + 1, u.right_multiply(word[k]))
        else:
            i = word[k]
            difference = value(k + 1, u.right_multiply(i)) - value(k + 1, u)
            root = apply(u, simple_root(cm, i))
            result = difference.divide_linear(_root_poly(cm, root))
        memo[key] = result
        return result

    return value(0, identity(cm))


def kk_structconst(cm, u, v, w_word):
    # type: (CartanMatrix, WeylElement, WeylElement, Sequence[int]) -> Poly
    """
    p_{u,v}^w: for every reduced subword of w_word equal to u, replace the
    corresponding A_i by s_i in A_{i_1}∘⋯∘A_{i_n}, apply to ξ^v and evaluate at 1.
    """
    w_word = validate_word(cm, w_word)
    if not is_reduced(cm, w_word):
        raise SchubertValidationError(
            'the word {} is not reduced'.format(list(w_word))
        )
    restriction = CohRestriction(cm)
    total = Poly.zero(alpha_space(cm.rank))
    for positions in itertools.combinations(range(len(w_word)), u.length):
        if from_word(cm, [w_word[p] for p in positions]) != u:
            continue
        chosen = set(positions)
        hatted = [k in chosen for k in range(len(w_word))]
        total = total + _operator_string(
            cm, w_word, hatted, lambda x: restriction(v, x)
        )
    return total


def pieri_chevalley(cm, i, v, bound=None):
    # type: (CartanMatrix, int, WeylElement, Optional[int]) -> Dict[WeylElement, Poly]
    """
    ξ̂^{s_i} ξ̂^v = ξ^{s_i}(v) ξ̂^v + Σ_{v→w} ρ_i(β^∨(v, w)) ξ̂^w;
    covers with a zero coefficient are kept.
    """
    space = alpha_space(cm.rank)
    result = {v: xi_simple(cm, i, v)}
    for w, _, coroot in bruhat_covers_up(v, bound):
        result[w] = Poly.constant(space, coroot.coords[i - 1])
    return result

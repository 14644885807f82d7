# coding: utf-8
"""
The bundled verification suites.

Each suite recomputes a family of identities through two independent routes (or
against a closed form) and records every disagreement in a VerificationReport.
"""
from __future__ import division

import itertools
import logging
import random

from six.moves import range
from typing import TYPE_CHECKING

from python_schubert import helpers, settings
from python_schubert.bottsamelson import (
    BSWord,
    bs_euler_char,
    bs_integrate,
    mu_T,
    sigma_T,
    tau_consistency,
)
from python_schubert.botttower import (
    all_masks,
    euler_char,
    integrate,
    mu_D_table,
    random_bott_tower,
    sigma_D_table,
)
from python_schubert.constants import VERIFY_SUITES
from python_schubert.exceptions import SchubertValidationError
from python_schubert.flagcoh import billey, kk_structconst, pieri_chevalley
from python_schubert.flagk import (
    base_change_b,
    psi,
    r_element_is_word_independent,
    star_euler_matches,
    verify_base_change,
    verify_demazure_relations,
    verify_demazure_step,
    verify_psi_characterization,
    verify_yang_baxter,
)
from python_schubert.helpers import VerificationReport
from python_schubert.rootdata import parse_cartan_type
from python_schubert.structconst import (
    graham_positive,
    ordinary_struct_const,
    struct_const,
)
from python_schubert.symalg import Char, Poly
from python_schubert.weyl import (
    all_elements,
    bruhat_leq,
    elements_up_to_length,
    from_word,
    longest_element,
    reduced_words,
    reflection_height_bound,
)

if TYPE_CHECKING:
    from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple  # noqa
    from python_schubert.rootdata import CartanMatrix  # noqa
    from python_schubert.weyl import WeylElement  # noqa


logger = logging.getLogger(__name__)


def _words(rank, max_length):
    # type: (int, int) -> Iterator[Tuple[int, ...]]
    """Every word over 1..rank of length 1..max_length."""
    for size in range(1, max_length + 1):
        for word in itertools.product(range(1, rank + 1), repeat=size):
            yield word


def _elements(cm, bound):
    # type: (CartanMatrix, Optional[int]) -> List[WeylElement]
    if bound is None:
        return all_elements(cm)
    return elements_up_to_length(cm, bound)


def _random_towers(bound):
    rng = random.Random(settings.VERIFY_RANDOM_SEED)
    max_length = settings.VERIFY_MAX_TOWER_LENGTH if bound is None else bound
    for _ in range(settings.VERIFY_RANDOM_LISTS):
        yield random_bott_tower(rng.randint(1, max_length), rng)


def _delta(one, zero, condition):
    return one if condition else zero


def check_localization(cm, bound):
    # type: (CartanMatrix, Optional[int]) -> VerificationReport
    """
    ∫_{Ȳ_ε} σ_{ε'} = δ on Bott lists, ∫_{Γ̄_ε} σ^T_{ε'} = δ on words.
    """
    report = VerificationReport('localization')
    for spec in _random_towers(bound):
        one, zero = Poly.one(spec.space), Poly.zero(spec.space)
        masks = all_masks(spec.n)
        tables = {mask: sigma_D_table(spec, mask) for mask in masks}
        for mask in masks:
            for other in masks:
                value = integrate(spec, tables[other], mask)
                report.check(value == _delta(one, zero, mask == other),
                             'C={} integral of sigma_{} over {} = {}'.format(
                                 spec.entries(), other, mask, value))
    for word in _words(cm.rank, 3 if bound is None else min(bound, 3)):
        bsword = BSWord(cm, word)
        one, zero = Poly.one(bsword.space), Poly.zero(bsword.space)
        masks = all_masks(bsword.n)
        for other in masks:
            table = {point: sigma_T(bsword, other, point) for point in masks}
            for mask in masks:
                value = bs_integrate(bsword, table, mask)
                report.check(value == _delta(one, zero, mask == other),
                             'word {} integral of sigma^T_{} over {} = {}'.format(
                                 list(word), other, mask, value))
    return report


def check_euler(cm, bound):
    # type: (CartanMatrix, Optional[int]) -> VerificationReport
    """
    χ(Ȳ_ε, μ_{ε'}) = δ on Bott lists, χ(Γ̄_ε, μ^T_{ε'}) = δ on words.
    """
    report = VerificationReport('euler')
    for spec in _random_towers(bound):
        one, zero = Char.one(spec.space), Char.zero(spec.space)
        masks = all_masks(spec.n)
        tables = {mask: mu_D_table(spec, mask) for mask in masks}
        for mask in masks:
            for other in masks:
                value = euler_char(spec, tables[other], mask)
                report.check(value == _delta(one, zero, mask == other),
                             'C={} chi of mu_{} over {} = {}'.format(
                                 spec.entries(), other, mask, value))
    for word in _words(cm.rank, 3 if bound is None else min(bound, 3)):
        bsword = BSWord(cm, word)
        one, zero = Char.one(bsword.space), Char.zero(bsword.space)
        masks = all_masks(bsword.n)
        for other in masks:
            table = {point: mu_T(bsword, other, point) for point in masks}
            for mask in masks:
                value = bs_euler_char(bsword, table, mask)
                report.check(value == _delta(one, zero, mask == other),
                             'word {} chi of mu^T_{} over {} = {}'.format(
                                 list(word), other, mask, value))
    return report


def check_tau(cm, bound):
    # type: (CartanMatrix, Optional[int]) -> VerificationReport
    """α_i(ε) = -τ(λ_i(ε)) for every word up to the length bound."""
    report = VerificationReport('tau')
    max_length = settings.VERIFY_MAX_WORD_LENGTH if bound is None else bound
    for word in _words(cm.rank, max_length):
        bsword = BSWord(cm, word)
        for mask in all_masks(bsword.n):
            for i in range(1, bsword.n + 1):
                report.check(tau_consistency(bsword, mask, i),
                             'word {} mask {} index {}'.format(list(word), mask, i))
    return report


def check_word_independence(cm, bound):
    # type: (CartanMatrix, Optional[int]) -> VerificationReport
    """billey, psi, struct_const and ℛ_v agree across reduced words."""
    report = VerificationReport('word-independence')
    elements = _elements(cm, bound)
    for v in elements:
        words = reduced_words(v)
        report.check(r_element_is_word_independent(cm, v), 'R_{}'.format(v))
        for w in elements:
            values = set(str(billey(cm, w, word)) for word in words)
            report.check(len(values) == 1,
                         'xi^{}({}) over {} words'.format(w, v, len(words)))
            values = set(str(psi(cm, w, word)) for word in words)
            report.check(len(values) == 1,
                         'psi^{}({}) over {} words'.format(w, v, len(words)))
    for word in _words(cm.rank, settings.VERIFY_MAX_NONREDUCED_LENGTH if bound is None
                       else min(bound, settings.VERIFY_MAX_NONREDUCED_LENGTH)):
        v = from_word(cm, word)
        if v.length == len(word):
            continue
        for w in elements:
            if w.length > v.length:
                continue
            report.check(billey(cm, w, word) == billey(cm, w, v.reduced_word),
                         'xi^{} on non-reduced word {}'.format(w, list(word)))
    for w in elements:
        words = reduced_words(w)
        if len(words) < 2:
            continue
        for u in elements:
            for v in elements:
                if not (bruhat_leq(u, w) and bruhat_leq(v, w)):
                    continue
                values = set(str(struct_const(cm, u, v, word)) for word in words)
                report.check(len(values) == 1, 'p_{{{},{}}}^{}'.format(u, v, w))
    return report


def check_psi_axioms(cm, bound):
    # type: (CartanMatrix, Optional[int]) -> VerificationReport
    report = VerificationReport('psi-axioms')
    report.merge(verify_psi_characterization(cm, bound))
    report.merge(verify_demazure_step(cm, bound))
    for i, j in itertools.combinations_with_replacement(range(1, cm.rank + 1), 2):
        report.merge(verify_demazure_relations(cm, i, j, bound))
    for word in _words(cm.rank, 3 if bound is None else min(bound, 3)):
        for w in _elements(cm, len(word)):
            report.check(star_euler_matches(cm, word, w),
                         'chi of pulled back *psi^{} on word {}'.format(w, list(word)))
    return report


def _triples(cm, bound):
    # type: (CartanMatrix, Optional[int]) -> Iterator[Tuple[WeylElement, ...]]
    elements = _elements(cm, bound)
    for w in elements:
        for u in elements:
            for v in elements:
                if bruhat_leq(u, w) and bruhat_leq(v, w):
                    yield u, v, w


def check_kk_vs_t(cm, bound):
    # type: (CartanMatrix, Optional[int]) -> VerificationReport
    """T^{(1)} against the divided-difference formula; Pieri-Chevalley against both."""
    report = VerificationReport('kk-vs-t')
    for u, v, w in _triples(cm, bound):
        computed = struct_const(cm, u, v, w.reduced_word)
        expected = kk_structconst(cm, u, v, w.reduced_word)
        report.check(computed == expected, 'p_{{{},{}}}^{}: {} vs {}'.format(
            u, v, w, computed, expected))
    elements = _elements(cm, bound)
    height = None if bound is None else reflection_height_bound(cm, bound)
    for v in elements:
        for i in range(1, cm.rank + 1):
            rule = pieri_chevalley(cm, i, v, height)
            simple = from_word(cm, [i])
            for w, coefficient in rule.items():
                if bound is not None and w.length > bound:
                    continue
                value = struct_const(cm, simple, v, w.reduced_word)
                report.check(value == coefficient,
                             'Pieri-Chevalley s{} * {} on {}'.format(i, v, w))
    return report


def check_yang_baxter(cm, bound):
    # type: (CartanMatrix, Optional[int]) -> VerificationReport
    report = VerificationReport('yang-baxter')
    for i, j in itertools.combinations(range(1, cm.rank + 1), 2):
        report.merge(verify_yang_baxter(cm, i, j))
        report.merge(verify_yang_baxter(cm, j, i))
    return report


def check_duan(cm, bound):
    # type: (CartanMatrix, Optional[int]) -> VerificationReport
    """
    Ordinary constants: for l(u) + l(v) = l(w) the equivariant constant is an
    integer, nonnegative, and equal to the divided-difference constant at 0.
    """
    report = VerificationReport('duan')
    for u, v, w in _triples(cm, bound):
        if u.length + v.length != w.length:
            continue
        value = struct_const(cm, u, v, w.reduced_word)
        ordinary = ordinary_struct_const(cm, u, v, w.reduced_word)
        expected = kk_structconst(cm, u, v, w.reduced_word).constant_term()
        report.check(
            ordinary == expected and value.is_constant() and graham_positive(value),
            'ordinary p_{{{},{}}}^{} = {} vs {}'.format(u, v, w, ordinary, expected),
        )
    return report


def check_basechange(cm, bound):
    # type: (CartanMatrix, Optional[int]) -> VerificationReport
    report = VerificationReport('basechange')
    top = longest_element(cm)
    value = base_change_b(cm, top.reduced_word)
    report.check(value == 1, 'b^w0 = {}'.format(value))
    report.merge(verify_base_change(cm, _elements(cm, bound)))
    return report


_SUITES = {
    'localization': check_localization,
    'euler': check_euler,
    'tau': check_tau,
    'word-independence': check_word_independence,
    'psi-axioms': check_psi_axioms,
    'kk-vs-t': check_kk_vs_t,
    'yang-baxter': check_yang_baxter,
    'duan': check_duan,
    'basechange': check_basechange,
}  # type: Dict[str, Callable[[CartanMatrix, Optional[int]], VerificationReport]]


def run_suite(name, cm=None, bound=None):
    # type: (str, Optional[CartanMatrix], Optional[int]) -> VerificationReport
    """
    Run one named suite. Without a Cartan matrix the suites run on the default
    type; `bound` caps the lengths the suite enumerates. Cached values are
    dropped once the suite finishes.
    """
    if name not in VERIFY_SUITES:
        raise SchubertValidationError(
            'unknown suite {!r}; expected one of {}'
            .format(name, ', '.join(VERIFY_SUITES))
        )
    if cm is None:
        cm = parse_cartan_type(settings.VERIFY_DEFAULT_TYPE)
    logger.info('running %s on %s', name, cm)
    try:
        report = _SUITES[name](cm, bound)
    finally:
        helpers.clear_caches()
    report.name = name
    logger.info('%s: %d checked, %d failed', name, report.checked, len(report.failures))
    return report

# coding: utf-8
import pytest

from python_schubert.botttower import EpsilonMask, all_masks
from python_schubert.bottsamelson import (
    BSWord,
    alpha_eps,
    bs_euler_char,
    bs_integrate,
    ht_product,
    induced_list,
    mu_T,
    multiply_generator_T,
    product_coefficient_matches_tower,
    pullback_psi,
    pullback_xi,
    sigma_T,
    tau_consistency,
    v_eps,
    v_full,
)
from python_schubert.exceptions import SchubertValidationError
from python_schubert.symalg import Poly, parse_poly
from python_schubert.weyl import from_word, identity, longest_element


def masks(*texts):
    return set(EpsilonMask.from_string(text) for text in texts)


def test_induced_list(a2):
    spec = induced_list(BSWord(a2, (1, 2, 1)))
    assert spec.entries() == [(1, 2, -1), (1, 3, 2), (2, 3, -1)]


def test_word_validation(a2):
    with pytest.raises(SchubertValidationError):
        BSWord(a2, (1, 3))


def test_weyl_data_at_fixed_points(a2):
    bsword = BSWord(a2, (1, 2, 1))
    full = EpsilonMask.ones(3)
    assert v_eps(bsword, EpsilonMask.zeros(3), 3).is_identity()
    assert v_full(bsword, full) == longest_element(a2)
    assert v_full(bsword, EpsilonMask.from_string('101')).is_identity()
    assert [alpha_eps(bsword, full, i).coords for i in (1, 2, 3)] == [
        (-1, 0), (-1, -1), (0, -1),
    ]


@pytest.mark.parametrize('fixture, word', [
    ('a2', (1, 2, 1)), ('b2', (1, 2, 1, 2)), ('g2', (2, 1, 2)), ('a2', (1, 1, 2)),
])
def test_tau_consistency(request, fixture, word):
    bsword = BSWord(request.getfixturevalue(fixture), word)
    for mask in all_masks(bsword.n):
        for i in range(1, bsword.n + 1):
            assert tau_consistency(bsword, mask, i)


def test_sigma_at_full_mask(a2, b2):
    bsword = BSWord(a2, (1, 2, 1))
    full = EpsilonMask.ones(3)
    assert sigma_T(bsword, EpsilonMask.unit(3, 1), full) == Poly.variable(bsword.space, 1)
    bsword = BSWord(b2, (1, 2, 1, 2))
    full = EpsilonMask.ones(4)
    total = sigma_T(bsword, EpsilonMask.unit(4, 1), full) + \
        sigma_T(bsword, EpsilonMask.unit(4, 3), full)
    assert total == parse_poly('2*a1 + a2', bsword.space)


def test_pullbacks(a2, b2):
    bsword = BSWord(b2, (1, 2, 1, 2))
    assert pullback_xi(bsword, from_word(b2, (1,))) == masks('1000', '0010')
    assert pullback_xi(bsword, from_word(b2, (1, 2))) == masks('1100', '1001', '0011')
    assert pullback_xi(bsword, identity(b2)) == masks('0000')
    bsword = BSWord(a2, (1, 2, 1))
    assert pullback_psi(bsword, identity(a2)) == masks('000')
    assert pullback_psi(bsword, from_word(a2, (1,))) == masks('100', '001', '101')
    assert pullback_psi(bsword, longest_element(a2)) == masks('111')


@pytest.mark.parametrize('fixture, word', [
    ('a2', (1, 2, 1)), ('b2', (2, 1, 2)), ('a2', (1, 1)),
])
def test_localization_and_euler_duality(request, fixture, word):
    bsword = BSWord(request.getfixturevalue(fixture), word)
    every = all_masks(bsword.n)
    for other in every:
        sigma = dict((point, sigma_T(bsword, other, point)) for point in every)
        mu = dict((point, mu_T(bsword, other, point)) for point in every)
        for mask in every:
            expected = 1 if mask == other else 0
            assert bs_integrate(bsword, sigma, mask) == expected
            assert bs_euler_char(bsword, mu, mask) == expected


@pytest.mark.parametrize('fixture, word', [
    ('a2', (1, 2, 1)), ('b2', (1, 2, 1)), ('a2', (2, 2, 1)),
])
def test_product_rule(request, fixture, word):
    bsword = BSWord(request.getfixturevalue(fixture), word)
    for mask in all_masks(bsword.n):
        for i in range(1, bsword.n + 1):
            unit = EpsilonMask.unit(bsword.n, i)
            assert ht_product(bsword, unit, mask) == multiply_generator_T(bsword, i, mask)
            for j in range(1, i):
                assert product_coefficient_matches_tower(bsword, i, j, mask)

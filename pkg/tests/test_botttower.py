# coding: utf-8
import json
import random

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from python_schubert.botttower import (
    BottTowerSpec,
    EpsilonMask,
    FixedPointTable,
    all_masks,
    chain_coeff,
    euler_char,
    hd_product,
    integrate,
    kd_expand,
    kd_product,
    lambda_weight,
    load_bott_tower,
    masks_below,
    mu_D,
    mu_D_table,
    multiply_generator,
    ordinary_product,
    random_bott_tower,
    sigma_D,
    sigma_D_table,
)
from python_schubert.exceptions import InexactDivisionError, SchubertValidationError
from python_schubert.symalg import Char, Poly, lambda_space, parse_char, parse_poly

HIRZEBRUCH = BottTowerSpec.from_entries(2, [(1, 2, -1)])
SPACE = lambda_space(2)


def mask(text):
    return EpsilonMask.from_string(text)


@st.composite
def towers(draw, max_n=3):
    n = draw(st.integers(min_value=1, max_value=max_n))
    entries = [
        (i, j, draw(st.integers(min_value=-2, max_value=2)))
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
    ]
    return BottTowerSpec.from_entries(n, entries)


def test_masks():
    m = mask('101')
    assert m.positive == (1, 3)
    assert m.negative == (2,)
    assert m.length == 2
    assert m[3] == 1
    assert m + mask('100') == mask('001')
    assert mask('001').is_below(m)
    assert not mask('010').is_below(m)
    assert [str(x) for x in all_masks(2)] == ['00', '01', '10', '11']
    assert [str(x) for x in masks_below(m)] == ['000', '001', '100', '101']
    with pytest.raises(SchubertValidationError):
        mask('102')
    with pytest.raises(SchubertValidationError):
        m + mask('10')


def test_tower_spec():
    spec = BottTowerSpec.from_entries(3, [(1, 3, 4)])
    assert spec.entry(1, 3) == 4
    assert spec.entry(1, 2) == 0
    assert spec.entries() == [(1, 3, 4)]
    with pytest.raises(SchubertValidationError):
        BottTowerSpec.from_entries(3, [(2, 1, 1)])
    with pytest.raises(SchubertValidationError):
        BottTowerSpec(0, [])


def test_chain_coefficients():
    spec = BottTowerSpec.from_entries(3, [(1, 2, 2), (1, 3, 5), (2, 3, 3)])
    assert chain_coeff(spec, mask('000'), 1, 3) == -5
    assert chain_coeff(spec, mask('010'), 1, 3) == 2 * 3 - 5
    assert chain_coeff(spec, mask('111'), 1, 2) == -2
    assert chain_coeff(HIRZEBRUCH, mask('00'), 1, 2) == 1
    with pytest.raises(SchubertValidationError):
        chain_coeff(spec, mask('000'), 2, 2)


def test_hirzebruch_weights():
    expected = {
        '00': ('-l1', '-l2'),
        '10': ('l1', '-l1 - l2'),
        '01': ('-l1', 'l2'),
        '11': ('l1', 'l1 + l2'),
    }
    for point, weights in expected.items():
        for i, text in enumerate(weights, 1):
            assert lambda_weight(HIRZEBRUCH, mask(point), i) == parse_poly(text, SPACE)


HIRZEBRUCH_K = {
    ('00', '00'): '1',
    ('00', '10'): 'e^{-l1}',
    ('00', '01'): 'e^{-l2}',
    ('00', '11'): 'e^{-2l1-l2}',
    ('10', '10'): '1 - e^{-l1}',
    ('10', '11'): 'e^{-l1-l2} - e^{-2l1-l2}',
    ('01', '01'): '1 - e^{-l2}',
    ('01', '11'): 'e^{-l1} - e^{-2l1-l2}',
    ('11', '11'): '1 - e^{-l1} - e^{-l1-l2} + e^{-2l1-l2}',
}


def test_hirzebruch_k_theory_classes():
    for first in all_masks(2):
        for second in all_masks(2):
            text = HIRZEBRUCH_K.get((str(first), str(second)), '0')
            assert mu_D(HIRZEBRUCH, first, second) == parse_char(text, SPACE)


def test_hirzebruch_cohomology_classes():
    l1, l2 = Poly.variable(SPACE, 1), Poly.variable(SPACE, 2)
    assert sigma_D(HIRZEBRUCH, mask('10'), mask('11')) == l1
    assert sigma_D(HIRZEBRUCH, mask('01'), mask('11')) == l1 + l2
    assert sigma_D(HIRZEBRUCH, mask('01'), mask('01')) == l2
    assert sigma_D(HIRZEBRUCH, mask('11'), mask('11')) == l1 * (l1 + l2)
    assert sigma_D(HIRZEBRUCH, mask('10'), mask('01')) == 0
    assert sigma_D(HIRZEBRUCH, mask('00'), mask('10')) == 1


def test_hirzebruch_products():
    l1, l2 = Poly.variable(SPACE, 1), Poly.variable(SPACE, 2)
    assert hd_product(HIRZEBRUCH, mask('10'), mask('10')) == {mask('10'): l1}
    assert hd_product(HIRZEBRUCH, mask('01'), mask('01')) == {
        mask('01'): l2,
        mask('11'): Poly.one(SPACE),
    }
    assert ordinary_product(HIRZEBRUCH, mask('01'), mask('01')) == {mask('11'): 1}


@settings(deadline=None, max_examples=25)
@given(towers())
def test_integrals_are_dual_to_the_basis(spec):
    masks = all_masks(spec.n)
    for other in masks:
        table = sigma_D_table(spec, other)
        for m in masks:
            expected = 1 if m == other else 0
            assert integrate(spec, table, m) == expected


@settings(deadline=None, max_examples=25)
@given(towers())
def test_euler_characteristics_are_dual_to_the_basis(spec):
    masks = all_masks(spec.n)
    for other in masks:
        table = mu_D_table(spec, other)
        for m in masks:
            expected = 1 if m == other else 0
            assert euler_char(spec, table, m) == expected


@settings(deadline=None, max_examples=25)
@given(towers())
def test_constant_tables(spec):
    one = FixedPointTable(spec.n, lambda point: Poly.one(spec.space))
    unit = FixedPointTable(spec.n, lambda point: Char.one(spec.space))
    for i in range(1, spec.n + 1):
        m = EpsilonMask.unit(spec.n, i)
        assert integrate(spec, one, m) == 0
        assert euler_char(spec, unit, m) == 1


@settings(deadline=None, max_examples=25)
@given(towers())
def test_generator_products_match_the_closed_form(spec):
    for m in all_masks(spec.n):
        for i in range(1, spec.n + 1):
            unit = EpsilonMask.unit(spec.n, i)
            assert hd_product(spec, unit, m) == multiply_generator(spec, i, m)


def test_k_theory_expansion_of_products():
    product = kd_product(HIRZEBRUCH, mask('11'), mask('11'))
    assert product == {mask('11'): mu_D(HIRZEBRUCH, mask('11'), mask('11'))}
    expansion = kd_expand(HIRZEBRUCH, lambda point: mu_D(HIRZEBRUCH, mask('01'), point))
    assert expansion == {mask('01'): Char.one(SPACE)}


def test_fixed_point_table_rejects_foreign_masks():
    table = sigma_D_table(HIRZEBRUCH, mask('10'))
    assert table[mask('11')] == Poly.variable(SPACE, 1)
    with pytest.raises(SchubertValidationError):
        table[mask('1')]
    with pytest.raises(SchubertValidationError):
        sigma_D(HIRZEBRUCH, mask('1'), mask('11'))


def test_random_towers_are_reproducible():
    first = random_bott_tower(4, random.Random(7))
    second = random_bott_tower(4, random.Random(7))
    assert first == second
    assert all(-3 <= value <= 3 for _, _, value in first.entries())


def test_load_bott_tower(tmp_path):
    path = tmp_path / 'tower.json'
    path.write_text(json.dumps({'N': 2, 'c': [[1, 2, -1]]}))
    assert load_bott_tower(str(path)) == HIRZEBRUCH
    bad = tmp_path / 'bad.json'
    bad.write_text(json.dumps({'c': []}))
    with pytest.raises(SchubertValidationError):
        load_bott_tower(str(bad))


def test_integrals_of_tables_that_are_not_classes():
    product = BottTowerSpec.from_entries(2, [])
    l1 = Poly.variable(product.space, 1)
    # exact overall, but not fibre by fibre
    values = {mask('00'): l1, mask('01'): Poly.zero(product.space),
              mask('10'): l1, mask('11'): Poly.zero(product.space)}
    table = FixedPointTable(2, lambda point: values[point])
    assert integrate(product, table, mask('11')) == 0
    corner = {mask('00'): Poly.one(product.space)}
    point = FixedPointTable(2, lambda p: corner.get(p, Poly.zero(product.space)))
    with pytest.raises(InexactDivisionError):
        integrate(product, point, mask('11'))

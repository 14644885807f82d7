# coding: utf-8
import pytest

from python_schubert.exceptions import SchubertValidationError
from python_schubert.flagcoh import (
    CohRestriction,
    billey,
    billey_via_bs,
    demazure_A,
    kk_structconst,
    pieri_chevalley,
    xi_simple,
)
from python_schubert.rootdata import builtin_cartan
from python_schubert.symalg import Poly, alpha_space, parse_poly
from python_schubert.weyl import all_elements, from_word, identity, longest_element


def test_billey_examples(a2, b2):
    a4 = builtin_cartan('A', 4)
    value = billey(a4, from_word(a4, (3, 2)), (2, 3, 2, 1, 2))
    assert str(value) == 'a1*a2 + a1*a3 + a2^2 + 2*a2*a3 + a3^2'
    assert billey(b2, from_word(b2, (1,)), (1, 2, 1, 2)) == \
        parse_poly('2*a1 + a2', alpha_space(2))
    w0 = longest_element(a2)
    assert billey(a2, w0, w0.reduced_word) == \
        parse_poly('a1^2*a2 + a1*a2^2', alpha_space(2))
    assert billey(a2, identity(a2), (1, 2)) == 1
    assert billey(a2, w0, (1, 2)) == 0


def test_billey_ignores_the_choice_of_word(a2):
    s1 = from_word(a2, (1,))
    assert billey(a2, s1, (1, 1, 1)) == billey(a2, s1, (1,))
    for w in all_elements(a2):
        assert billey(a2, w, (1, 2, 1)) == billey(a2, w, (2, 1, 2))


@pytest.mark.parametrize('fixture, word', [('a2', (1, 2, 1)), ('b2', (1, 2, 1, 2))])
def test_billey_via_bott_samelson(request, fixture, word):
    cm = request.getfixturevalue(fixture)
    for w in all_elements(cm):
        assert billey_via_bs(cm, w, word) == billey(cm, w, word)


def test_billey_via_bott_samelson_in_a4():
    a4 = builtin_cartan('A', 4)
    w = from_word(a4, (3, 2))
    assert billey_via_bs(a4, w, (2, 3, 2, 1, 2)) == billey(a4, w, (2, 3, 2, 1, 2))


def test_restriction_memo(a2):
    restriction = CohRestriction(a2)
    s1 = from_word(a2, (1,))
    w0 = longest_element(a2)
    assert restriction(s1, w0) == parse_poly('a1 + a2', alpha_space(2))
    assert (s1, w0) in restriction.memo
    table = restriction.table(s1, all_elements(a2))
    assert table[identity(a2)] == 0


def test_xi_simple(a2, b2):
    w0 = longest_element(a2)
    assert xi_simple(a2, 1, w0) == billey(a2, from_word(a2, (1,)), w0.reduced_word)
    top = longest_element(b2)
    for i in (1, 2):
        assert xi_simple(b2, i, top) == billey(b2, from_word(b2, (i,)), top.reduced_word)


def test_divided_difference_lowers_schubert_classes(a1, a2):
    elements = all_elements(a1)
    s = from_word(a1, (1,))
    xi = CohRestriction(a1).table(s, elements)
    assert demazure_A(a1, 1, xi, elements) == dict((u, Poly.one(alpha_space(1)))
                                                   for u in elements)
    elements = all_elements(a2)
    restriction = CohRestriction(a2)
    zero = Poly.zero(alpha_space(2))
    for w in elements:
        table = restriction.table(w, elements)
        for i in (1, 2):
            result = demazure_A(a2, i, table, elements)
            if w.is_right_descent(i):
                expected = restriction.table(w.right_multiply(i), elements)
            else:
                expected = dict((u, zero) for u in elements)
            assert result == expected


def test_divided_difference_needs_the_whole_orbit(a2):
    with pytest.raises(SchubertValidationError):
        demazure_A(a2, 1, {identity(a2): Poly.zero(alpha_space(2))}, [identity(a2)])


def test_kostant_kumar_constants(a1, a2, b2):
    space = alpha_space(2)
    s = from_word(a1, (1,))
    assert kk_structconst(a1, s, s, (1,)) == Poly.variable(alpha_space(1), 1)
    assert kk_structconst(a2, from_word(a2, (2,)), from_word(a2, (1, 2)), (2, 1, 2)) == 0
    s1s2, s2s1 = from_word(b2, (1, 2)), from_word(b2, (2, 1))
    assert kk_structconst(b2, s1s2, s2s1, (1, 2, 1)) == parse_poly('2*a1 + a2', space)
    for v in all_elements(b2):
        assert kk_structconst(b2, identity(b2), v, v.reduced_word) == 1


def test_kostant_kumar_needs_a_reduced_word(a2):
    s1 = from_word(a2, (1,))
    with pytest.raises(SchubertValidationError):
        kk_structconst(a2, s1, s1, (1, 1))


def test_pieri_chevalley(a2):
    space = alpha_space(2)
    s1 = from_word(a2, (1,))
    rule = pieri_chevalley(a2, 1, s1)
    assert rule == {
        s1: Poly.variable(space, 1),
        from_word(a2, (1, 2)): Poly.zero(space),
        from_word(a2, (2, 1)): Poly.one(space),
    }
    rule = pieri_chevalley(a2, 2, identity(a2))
    assert rule == {
        identity(a2): Poly.zero(space),
        s1: Poly.zero(space),
        from_word(a2, (2,)): Poly.one(space),
    }


def test_pieri_chevalley_in_infinite_type(affine_a1):
    rule = pieri_chevalley(affine_a1, 1, identity(affine_a1), bound=3)
    assert sorted(str(w) for w in rule) == ['1', 's1', 's2']

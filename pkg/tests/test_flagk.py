# coding: utf-8
import pytest

from python_schubert.exceptions import SchubertValidationError
from python_schubert.flagk import (
    HeckeElement,
    KRestriction,
    base_change_b,
    change_of_basis,
    demazure_D,
    demazure_string,
    gamma_by_recursion,
    hecke_h,
    psi,
    psi_diagonal,
    psi_via_hecke,
    r_element,
    r_element_is_word_independent,
    star_euler_matches,
    verify_base_change,
    verify_demazure_relations,
    verify_demazure_step,
    verify_psi_characterization,
    verify_yang_baxter,
    yang_baxter_sides,
)
from python_schubert.rootdata import builtin_cartan
from python_schubert.symalg import Char, Poly, alpha_space, parse_char, symbol_space
from python_schubert.weyl import (
    all_elements,
    elements_up_to_length,
    from_word,
    identity,
    longest_element,
)


def test_psi_example():
    a4 = builtin_cartan('A', 4)
    value = psi(a4, from_word(a4, (3, 2)), (2, 3, 2, 1, 2))
    assert str(value) == \
        'e^{2a1+4a2+3a3} - e^{2a1+3a2+2a3} - e^{a1+3a2+2a3} + e^{a1+2a2+a3}'


def test_psi_in_rank_one(a1):
    space = alpha_space(1)
    s = from_word(a1, (1,))
    assert psi(a1, identity(a1), ()) == 1
    assert psi(a1, identity(a1), (1,)) == Char.exp(space, (1,))
    assert psi(a1, s, (1,)) == 1 - Char.exp(space, (1,))
    assert psi(a1, s, ()) == 0
    assert psi_diagonal(s) == 1 - Char.exp(space, (1,))


def test_psi_ignores_the_choice_of_word(a2):
    for w in all_elements(a2):
        assert psi(a2, w, (1, 2, 1)) == psi(a2, w, (2, 1, 2))


def test_psi_via_hecke(a2, b2):
    for cm in (a2, b2):
        for v in all_elements(cm):
            for w in all_elements(cm):
                assert psi_via_hecke(cm, w, v.reduced_word) == psi(cm, w, v.reduced_word)


def test_restriction_memo(a2):
    restriction = KRestriction(a2)
    w0 = longest_element(a2)
    assert restriction(w0, w0) == psi_diagonal(w0)
    assert (w0, w0) in restriction.memo
    table = restriction.table(w0, [identity(a2)])
    assert table == {identity(a2): Char.zero(alpha_space(2))}


def test_demazure_operator_in_rank_one(a1):
    elements = all_elements(a1)
    restriction = KRestriction(a1)
    one, s = identity(a1), from_word(a1, (1,))
    top = restriction.table(s, elements)
    bottom = restriction.table(one, elements)
    assert demazure_D(a1, 1, top, elements) == dict(
        (v, top[v] + bottom[v]) for v in elements
    )
    assert demazure_D(a1, 1, bottom, elements) == dict(
        (v, Char.zero(alpha_space(1))) for v in elements
    )
    assert demazure_string(a1, (1,), lambda u: restriction(s, u)) == 1
    assert demazure_string(a1, (1,), lambda u: restriction(one, u)) == 0


def test_demazure_operator_needs_the_whole_orbit(a1):
    with pytest.raises(SchubertValidationError):
        demazure_D(a1, 1, {identity(a1): Char.one(alpha_space(1))}, [identity(a1)])


@pytest.mark.parametrize('fixture', ['a1', 'a2', 'b2'])
def test_psi_characterization(request, fixture):
    cm = request.getfixturevalue(fixture)
    assert verify_psi_characterization(cm).passed
    assert verify_demazure_step(cm).passed


@pytest.mark.parametrize('fixture, i, j', [
    ('a2', 1, 1), ('a2', 1, 2), ('b2', 1, 2), ('a1xa1', 1, 2),
])
def test_demazure_relations(request, fixture, i, j):
    report = verify_demazure_relations(request.getfixturevalue(fixture), i, j)
    assert report.passed
    assert report.checked > 0


def test_psi_characterization_with_a_bound(g2):
    report = verify_psi_characterization(g2, bound=2)
    assert report.passed


def test_base_change_coefficients(a1, a2):
    space = alpha_space(2)
    assert base_change_b(a1, (1,)) == 1
    assert base_change_b(a1, ()) == 1 - Char.exp(alpha_space(1), (-1,))
    assert base_change_b(a2, (1,)) == parse_char(
        '1 - e^{-a2} - e^{-a1-a2} + e^{-a1-2a2}', space
    )
    assert base_change_b(a2, (1, 2)) == 1 - Char.exp(space, (-1, -1))
    assert base_change_b(a2, (1, 2, 1)) == 1
    assert base_change_b(builtin_cartan('B', 2), (1, 2, 1, 2)) == 1


def test_change_of_basis(a1, a2):
    s = from_word(a1, (1,))
    one = identity(a1)
    assert change_of_basis(a1, s) == {one: Char.one(alpha_space(1)),
                                      s: Char.one(alpha_space(1))}
    gamma = gamma_by_recursion(a2, from_word(a2, (1, 2)))
    assert gamma[identity(a2)] == 1 - Char.exp(alpha_space(2), (-1, -1))
    assert verify_base_change(a2).passed
    assert verify_base_change(a1).passed


def test_hecke_algebra(a2):
    space = symbol_space(2)
    x = Poly.variable(space, 1)
    one, s1 = identity(a2), from_word(a2, (1,))
    h = hecke_h(a2, 1, x)
    assert h[one] == 1
    assert h[s1] == x - 1
    assert h[from_word(a2, (2,))] == 0
    square = h * h
    assert square == HeckeElement(a2, {one: Poly.one(space), s1: x * x - 1})
    assert hecke_h(a2, 1, Poly.one(space)) == HeckeElement(a2, {one: Poly.one(space)})


@pytest.mark.parametrize('fixture', ['a1xa1', 'a2', 'b2', 'g2'])
def test_yang_baxter(request, fixture):
    cm = request.getfixturevalue(fixture)
    for i, j in ((1, 2), (2, 1)):
        report = verify_yang_baxter(cm, i, j)
        assert report.passed
        assert report.checked == 1


def test_yang_baxter_in_infinite_order(affine_a1):
    space = symbol_space(2)
    x, y = Poly.variable(space, 1), Poly.variable(space, 2)
    assert yang_baxter_sides(affine_a1, 1, 2, x, y) is None
    report = verify_yang_baxter(affine_a1, 1, 2)
    assert report.passed
    assert report.checked == 0


def test_r_element(a2, b2):
    assert r_element_is_word_independent(a2, longest_element(a2))
    assert r_element_is_word_independent(b2, longest_element(b2))
    assert r_element(a2, ()) == HeckeElement(a2, {identity(a2): Char.one(alpha_space(2))})
    with pytest.raises(SchubertValidationError):
        r_element(a2, (1, 1))


@pytest.mark.parametrize('fixture, word', [('a1', (1,)), ('a2', (1, 2)), ('a2', (2, 1))])
def test_dual_classes_on_bott_samelson_varieties(request, fixture, word):
    cm = request.getfixturevalue(fixture)
    for w in all_elements(cm):
        assert star_euler_matches(cm, word, w)


def test_demazure_checks_with_a_bound_in_infinite_type(affine_a1):
    step = verify_demazure_step(affine_a1, bound=2)
    assert step.passed
    assert step.checked == 2 * len(elements_up_to_length(affine_a1, 2))
    relations = verify_demazure_relations(affine_a1, 1, 2, bound=2)
    assert relations.passed
    assert relations.checked == len(elements_up_to_length(affine_a1, 2))

import pytest

from python_schubert.exceptions import SchubertValidationError
from python_schubert.rootdata import simple_root
from python_schubert.weyl import (
    all_elements,
    apply,
    bruhat_covers_up,
    bruhat_leq,
    demazure_multiply,
    demazure_product,
    elements_up_to_length,
    from_word,
    identity,
    inversion_set,
    is_reduced,
    longest_element,
    parse_word,
    prefix_roots,
    reduced_words,
    reflection_height_bound,
)


@pytest.mark.parametrize('fixture, order, top', [
    ('a1', 2, 1), ('a2', 6, 3), ('b2', 8, 4), ('g2', 12, 6), ('a1xa1', 4, 2),
])
def test_group_orders(request, fixture, order, top):
    cm = request.getfixturevalue(fixture)
    assert len(all_elements(cm)) == order
    assert longest_element(cm).length == top


def test_words_and_lengths(a2):
    assert from_word(a2, (1, 1)).is_identity()
    assert from_word(a2, (1, 2, 1)) == from_word(a2, (2, 1, 2))
    assert from_word(a2, (2, 1, 2)).reduced_word == (1, 2, 1)
    assert str(from_word(a2, (1, 2))) == 's1s2'
    assert str(identity(a2)) == '1'
    assert is_reduced(a2, (1, 2, 1))
    assert not is_reduced(a2, (1, 2, 1, 2))


def test_action_on_roots(a2):
    w0 = longest_element(a2)
    assert apply(w0, simple_root(a2, 1)).coords == (0, -1)
    assert apply(from_word(a2, (1,)), simple_root(a2, 2)).coords == (1, 1)


def test_group_operations(b2):
    for w in all_elements(b2):
        assert (w * w.inverse()).is_identity()
        for i in (1, 2):
            assert w.is_right_descent(i) == (w.right_multiply(i).length < w.length)
            assert w.is_left_descent(i) == (w.left_multiply(i).length < w.length)


def test_bruhat_order(a2):
    s1, s2 = from_word(a2, (1,)), from_word(a2, (2,))
    s1s2, s2s1 = from_word(a2, (1, 2)), from_word(a2, (2, 1))
    assert bruhat_leq(identity(a2), s1s2)
    assert bruhat_leq(s1, s2s1)
    assert not bruhat_leq(s1s2, s2s1)
    assert not bruhat_leq(s2s1, s1)
    assert all(bruhat_leq(w, longest_element(a2)) for w in all_elements(a2))


def test_demazure_monoid(a2):
    s1 = from_word(a2, (1,))
    assert demazure_product(a2, (1, 1)) == s1
    assert demazure_product(a2, (1, 2, 1, 2)) == longest_element(a2)
    assert demazure_product(a2, ()).is_identity()
    assert demazure_multiply(s1, s1) == s1
    assert demazure_multiply(from_word(a2, (1, 2)), from_word(a2, (2, 1))) == \
        longest_element(a2)


def test_inversion_sets(a2):
    assert inversion_set(identity(a2)) == []
    assert [root.coords for root in inversion_set(from_word(a2, (1,)))] == [(1, 0)]
    roots = inversion_set(from_word(a2, (1, 2)))
    assert sorted(root.coords for root in roots) == [(0, 1), (1, 1)]


def test_prefix_roots(b2):
    roots = prefix_roots(b2, (1, 2, 1, 2))
    assert [root.coords for root in roots] == [(1, 0), (2, 1), (1, 1), (0, 1)]


def test_bruhat_covers(a1, a2):
    covers = bruhat_covers_up(identity(a2))
    assert [(str(w), root.coords, coroot.coords) for w, root, coroot in covers] == [
        ('s1', (1, 0), (1, 0)),
        ('s2', (0, 1), (0, 1)),
    ]
    covers = bruhat_covers_up(from_word(a2, (1, 2)))
    assert [w for w, _, _ in covers] == [longest_element(a2)]
    assert bruhat_covers_up(from_word(a1, (1,))) == []


def test_reduced_words(a2, b2):
    assert reduced_words(longest_element(a2)) == [(1, 2, 1), (2, 1, 2)]
    assert reduced_words(identity(a2)) == [()]
    assert len(reduced_words(longest_element(b2))) == 2


def test_elements_up_to_length(affine_a1):
    elements = elements_up_to_length(affine_a1, 3)
    assert [w.length for w in elements] == [0, 1, 1, 2, 2, 3, 3]


def test_bad_words(a2):
    with pytest.raises(SchubertValidationError):
        parse_word('1,3', a2)
    with pytest.raises(SchubertValidationError):
        parse_word('1,x', a2)
    assert parse_word('', a2) == ()
    assert parse_word('2, 1', a2) == (2, 1)


def test_reflection_height_bound(a2, affine_a1):
    assert reflection_height_bound(a2, 2) == 2
    assert reflection_height_bound(affine_a1, 1) == 1
    assert reflection_height_bound(affine_a1, 3) == 5


def test_covers_within_the_reflection_height_bound(a2):
    height = reflection_height_bound(a2, 2)
    for v in elements_up_to_length(a2, 1):
        bounded = [w for w, _, _ in bruhat_covers_up(v, height) if w.length <= 2]
        complete = [w for w, _, _ in bruhat_covers_up(v) if w.length <= 2]
        assert bounded == complete

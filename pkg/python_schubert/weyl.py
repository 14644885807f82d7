# coding: utf-8
"""
Weyl group arithmetic.

An element is stored as its action on the root lattice: column j is w(α_j) in
the simple-root basis. This is faithful for every generalized Cartan matrix, so
equality of elements is equality of columns.
"""
from __future__ import division

import logging
from collections import deque

import attr
from six.moves import range
from typing import TYPE_CHECKING

from python_schubert import helpers, settings
from python_schubert.exceptions import GuardExceededError, SchubertValidationError
from python_schubert.rootdata import (
    CartanMatrix,
    RootVector,
    positive_roots,
    reflect_coroot,
    simple_root,
)

if TYPE_CHECKING:
    from typing import Iterable, List, Optional, Sequence, Tuple  # noqa
    from python_schubert.rootdata import CorootVector  # noqa
    Word = Tuple[int, ...]
    Cover = Tuple[WeylElement, RootVector, CorootVector]


logger = logging.getLogger(__name__)


def _reduce(cm, columns):
    # type: (CartanMatrix, Tuple[Tuple[int, ...], ...]) -> Word
    """
    Strip right descents, smallest index first, until the identity remains.
    """
    stripped = []
    columns = [list(column) for column in columns]
    while True:
        for i in range(cm.rank):
            if any(columns[i]) and all(c <= 0 for c in columns[i]):
                break
        else:
            return tuple(reversed(stripped))
        stripped.append(i + 1)
        columns = _times_simple(cm, columns, i + 1)


def _times_simple(cm, columns, i):
    # type: (CartanMatrix, Sequence[Sequence[int]], int) -> List[List[int]]
    """Columns of w·s_i: w(s_i α_j) = w(α_j) - a_ij w(α_i)."""
    pivot = columns[i - 1]
    row = cm.entries[i - 1]
    return [
        [c - row[j] * p for c, p in zip(column, pivot)]
        for j, column in enumerate(columns)
    ]


@attr.s(slots=True, frozen=True, repr=False)
class WeylElement(object):
    cm = attr.ib(
        validator=attr.validators.instance_of(CartanMatrix)
    )  # type: CartanMatrix
    columns = attr.ib()  # type: Tuple[Tuple[int, ...], ...]
    reduced_word = attr.ib(eq=False)  # type: Word

    @classmethod
    def from_columns(cls, cm, columns):
        # type: (CartanMatrix, Sequence[Sequence[int]]) -> WeylElement
        columns = tuple(tuple(column) for column in columns)
        return cls(cm, columns, _reduce(cm, columns))

    @property
    def length(self):
        # type: () -> int
        return len(self.reduced_word)

    @property
    def matrix(self):
        # type: () -> Tuple[Tuple[int, ...], ...]
        """Row-major form: matrix[i][j] is the α_{i+1} coordinate of w(α_{j+1})."""
        return tuple(zip(*self.columns))

    def is_identity(self):
        # type: () -> bool
        return not self.reduced_word

    def is_right_descent(self, i):
        # type: (int) -> bool
        """w s_i < w, i.e. w(α_i) is a negative root."""
        column = self.columns[i - 1]
        return all(c <= 0 for c in column)

    def is_left_descent(self, i):
        # type: (int) -> bool
        return self.inverse().is_right_descent(i)

    def right_multiply(self, i):
        # type: (int) -> WeylElement
        return WeylElement.from_columns(self.cm, _times_simple(self.cm, self.columns, i))

    def left_multiply(self, i):
        # type: (int) -> WeylElement
        return from_word(self.cm, (i,)) * self

    def inverse(self):
        # type: () -> WeylElement
        return from_word(self.cm, tuple(reversed(self.reduced_word)))

    def __mul__(self, other):
        # type: (WeylElement) -> WeylElement
        if not isinstance(other, WeylElement):
            return NotImplemented
        if other.cm != self.cm:
            raise SchubertValidationError('cannot multiply elements of different groups')
        return WeylElement.from_columns(
            self.cm, [apply(self, RootVector(column)).coords for column in other.columns]
        )

    def sort_key(self):
        # type: () -> Tuple[int, Word]
        return (self.length, self.reduced_word)

    def __str__(self):
        if not self.reduced_word:
            return '1'
        return ''.join('s{}'.format(i) for i in self.reduced_word)

    def __repr__(self):
        return 'WeylElement({})'.format(self)


def identity(cm):
    # type: (CartanMatrix) -> WeylElement
    return WeylElement(
        cm,
        tuple(simple_root(cm, j).coords for j in range(1, cm.rank + 1)),
        (),
    )


def from_word(cm, word):
    # type: (CartanMatrix, Iterable[int]) -> WeylElement
    columns = identity(cm).columns
    for i in validate_word(cm, word):
        columns = _times_simple(cm, columns, i)
    return WeylElement.from_columns(cm, columns)


def validate_word(cm, word):
    # type: (CartanMatrix, Iterable[int]) -> Word
    word = tuple(word)
    for i in word:
        if not 1 <= i <= cm.rank:
            raise SchubertValidationError(
                'word index {} outside 1..{}'.format(i, cm.rank)
            )
    return word


def parse_word(text, cm):
    # type: (str, CartanMatrix) -> Word
    """ "1,2,1" -> (1, 2, 1), validated against the rank of cm."""
    try:
        word = helpers.parse_index_list(text)
    except ValueError:
        raise SchubertValidationError('cannot parse word {!r}'.format(text))
    return validate_word(cm, word)


def format_word(word):
    # type: (Sequence[int]) -> str
    return ','.join(str(i) for i in word)


def is_reduced(cm, word):
    # type: (CartanMatrix, Sequence[int]) -> bool
    return from_word(cm, word).length == len(word)


def length(w):
    # type: (WeylElement) -> int
    return w.length


def is_right_descent(w, i):
    # type: (WeylElement, int) -> bool
    return w.is_right_descent(i)


def reduced_word(w):
    # type: (WeylElement) -> Word
    return w.reduced_word


def apply(w, root):
    # type: (WeylElement, RootVector) -> RootVector
    if len(root.coords) != w.cm.rank:
        raise SchubertValidationError(
            'rank mismatch: {} for rank {}'.format(root, w.cm.rank)
        )
    image = [0] * w.cm.rank
    for coefficient, column in zip(root.coords, w.columns):
        if coefficient:
            for k, c in enumerate(column):
                image[k] += coefficient * c
    return RootVector(image)


def apply_coroot(w, coroot):
    # type: (WeylElement, CorootVector) -> CorootVector
    if len(coroot.coords) != w.cm.rank:
        raise SchubertValidationError(
            'rank mismatch: {} for rank {}'.format(coroot, w.cm.rank)
        )
    for i in reversed(w.reduced_word):
        coroot = reflect_coroot(w.cm, i, coroot)
    return coroot


def multiply(u, v):
    # type: (WeylElement, WeylElement) -> WeylElement
    return u * v


def inverse(w):
    # type: (WeylElement) -> WeylElement
    return w.inverse()


def reflection(cm, root, coroot):
    # type: (CartanMatrix, RootVector, CorootVector) -> WeylElement
    """s_β: column j is α_j - α_j(β^∨)β."""
    columns = []
    for j in range(cm.rank):
        value = sum(coroot.coords[i] * cm.entries[i][j] for i in range(cm.rank))
        column = [-value * b for b in root.coords]
        column[j] += 1
        columns.append(column)
    return WeylElement.from_columns(cm, columns)


@helpers.simple_cache
def bruhat_leq(u, v):
    # type: (WeylElement, WeylElement) -> bool
    """Descent recursion: for vs < v, u <= v iff (us < u ? us <= vs : u <= vs)."""
    if u.cm != v.cm:
        raise SchubertValidationError('cannot compare elements of different groups')
    if u.length > v.length:
        return False
    if v.is_identity():
        return u.is_identity()
    i = v.reduced_word[-1]
    shorter = v.right_multiply(i)
    if u.is_right_descent(i):
        return bruhat_leq(u.right_multiply(i), shorter)
    return bruhat_leq(u, shorter)


def demazure_product(cm, word):
    # type: (CartanMatrix, Iterable[int]) -> WeylElement
    """Fold the word through s̲_i s̲_i = s̲_i."""
    w = identity(cm)
    for i in validate_word(cm, word):
        if not w.is_right_descent(i):
            w = w.right_multiply(i)
    return w


def demazure_multiply(u, v):
    # type: (WeylElement, WeylElement) -> WeylElement
    """u̲·v̲ in the Demazure monoid."""
    w = u
    for i in v.reduced_word:
        if not w.is_right_descent(i):
            w = w.right_multiply(i)
    return w


def prefix_roots(cm, word):
    # type: (CartanMatrix, Sequence[int]) -> List[RootVector]
    """β_j = s_{i_1}⋯s_{i_{j-1}} α_{i_j} for every position j of the word."""
    roots = []
    prefix = identity(cm)
    for i in validate_word(cm, word):
        roots.append(apply(prefix, simple_root(cm, i)))
        prefix = prefix.right_multiply(i)
    return roots


def inversion_set(w):
    # type: (WeylElement) -> List[RootVector]
    """Δ(w) = Δ+ ∩ w^{-1}Δ-, read off a reduced word of w^{-1}."""
    return prefix_roots(w.cm, w.inverse().reduced_word)


def bruhat_covers_up(v, bound=None):
    # type: (WeylElement, Optional[int]) -> List[Cover]
    """
    Every w = v s_β with l(w) = l(v) + 1. Without `bound` the positive roots are
    enumerated completely, which requires finite type; with it only roots of
    height <= bound are tried.
    """
    covers = []
    for root, coroot in positive_roots(v.cm, max_height=bound):
        w = v * reflection(v.cm, root, coroot)
        if w.length == v.length + 1:
            covers.append((w, root, coroot))
    covers.sort(key=lambda cover: cover[0].sort_key())
    return covers


def reflection_height_bound(cm, max_length):
    # type: (CartanMatrix, int) -> int
    """
    Largest height of a root β with v s_β of length <= max_length for some v of
    length < max_length. Such an s_β has length < 2 max_length, so β = u(α_i)
    with l(u) < max_length.
    """
    height = 0
    for u in elements_up_to_length(cm, max_length - 1):
        for i in range(1, cm.rank + 1):
            height = max(height, abs(apply(u, simple_root(cm, i)).height))
    return height


def elements_up_to_length(cm, max_length, guard=None):
    # type: (CartanMatrix, int, Optional[int]) -> List[WeylElement]
    guard = settings.WEYL_GROUP_GUARD if guard is None else guard
    seen = {identity(cm)}
    frontier = deque(seen)
    while frontier:
        w = frontier.popleft()
        if w.length >= max_length:
            continue
        for i in range(1, cm.rank + 1):
            if w.is_right_descent(i):
                continue
            longer = w.right_multiply(i)
            if longer not in seen:
                seen.add(longer)
                frontier.append(longer)
                if len(seen) > guard:
                    raise GuardExceededError(
                        'more than {} Weyl group elements for {}'.format(guard, cm)
                    )
    return sorted(seen, key=WeylElement.sort_key)


def longest_element(cm):
    # type: (CartanMatrix) -> WeylElement
    """w_0, finite type only."""
    bound = len(positive_roots(cm))
    w = identity(cm)
    while True:
        for i in range(1, cm.rank + 1):
            if not w.is_right_descent(i):
                w = w.right_multiply(i)
                break
        else:
            return w
        if w.length > bound:
            raise GuardExceededError('{} has no longest element'.format(cm))


def all_elements(cm):
    # type: (CartanMatrix) -> List[WeylElement]
    """The whole group, finite type only."""
    elements = elements_up_to_length(cm, longest_element(cm).length)
    logger.debug('%d elements in the Weyl group of %s', len(elements), cm)
    return elements


@helpers.simple_cache
def reduced_words(w):
    # type: (WeylElement) -> List[Word]
    """Every reduced word of w, sorted."""
    if w.is_identity():
        return [()]
    words = []
    for i in range(1, w.cm.rank + 1):
        if w.is_right_descent(i):
            words.extend(word + (i,) for word in reduced_words(w.right_multiply(i)))
    return sorted(words)

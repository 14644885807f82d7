# coding: utf-8
"""
Generalized Cartan matrices and the real roots they generate.

Conventions: a[i][j] = α_j(h_i), indices are 1-based in the public API.
"""
from __future__ import division

import logging
import re
from collections import deque
from fractions import Fraction

import attr
from six.moves import range
from typing import TYPE_CHECKING

from python_schubert import helpers, settings
from python_schubert.constants import (
    BUILTIN_FAMILIES,
    COXETER_ORDERS,
    FAMILY_FIXED_RANK,
    FAMILY_MIN_RANK,
)
from python_schubert.exceptions import GuardExceededError, SchubertValidationError
from python_schubert.validators import validate_cartan_entries

if TYPE_CHECKING:
    from typing import List, Optional, Sequence, Tuple  # noqa
    RootPair = Tuple[RootVector, CorootVector]


logger = logging.getLogger(__name__)

_CARTAN_TYPE = re.compile(r'^\s*(?P<family>[A-Za-z])\s*(?P<rank>\d+)\s*$')


def _as_matrix(rows):
    # type: (Sequence[Sequence[int]]) -> Tuple[Tuple[int, ...], ...]
    return tuple(tuple(int(entry) for entry in row) for row in rows)


@attr.s(slots=True, frozen=True)
class CartanMatrix(object):
    """
    A generalized Cartan matrix. `name` is cosmetic and ignored by comparisons.
    """
    entries = attr.ib(converter=_as_matrix, validator=validate_cartan_entries)
    name = attr.ib(default=None, eq=False)  # type: Optional[str]

    @property
    def rank(self):
        # type: () -> int
        return len(self.entries)

    def a(self, i, j):
        # type: (int, int) -> int
        """α_j(h_i), 1-based."""
        return self.entries[i - 1][j - 1]

    def coxeter_order(self, i, j):
        # type: (int, int) -> Optional[int]
        """Order of s_i s_j, None when infinite."""
        if i == j:
            return 1
        return COXETER_ORDERS.get(self.a(i, j) * self.a(j, i))

    def symmetrizer(self):
        # type: () -> Optional[List[Fraction]]
        """d_i > 0 with d_i a_ij = d_j a_ji, or None when not symmetrizable."""
        d = [None] * self.rank  # type: List[Optional[Fraction]]
        for start in range(self.rank):
            if d[start] is not None:
                continue
            d[start] = Fraction(1)
            frontier = deque([start])
            while frontier:
                i = frontier.popleft()
                for j in range(self.rank):
                    a_ij, a_ji = self.entries[i][j], self.entries[j][i]
                    if i == j or not a_ij:
                        continue
                    value = d[i] * a_ij / a_ji
                    if d[j] is None:
                        d[j] = value
                        frontier.append(j)
                    elif d[j] != value:
                        return None
        return d

    def is_finite_type(self):
        # type: () -> bool
        """Finite Weyl group: symmetrizable with a positive definite d_i a_ij."""
        d = self.symmetrizer()
        if d is None:
            return False
        rows = [[d[i] * a for a in row] for i, row in enumerate(self.entries)]
        for k in range(self.rank):
            pivot = rows[k][k]
            if pivot <= 0:
                return False
            for i in range(k + 1, self.rank):
                factor = rows[i][k] / pivot
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[k])]
        return True

    def __str__(self):
        return self.name or str([list(row) for row in self.entries])


@attr.s(slots=True, frozen=True)
class _LatticeVector(object):
    coords = attr.ib(converter=tuple)  # type: Tuple[int, ...]

    def __add__(self, other):
        self._check(other)
        return type(self)(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check(other)
        return type(self)(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return type(self)(tuple(-a for a in self.coords))

    def scaled(self, factor):
        # type: (int) -> _LatticeVector
        return type(self)(tuple(factor * a for a in self.coords))

    def _check(self, other):
        if type(other) is not type(self) or len(other.coords) != len(self.coords):
            raise SchubertValidationError(
                'cannot combine {!r} with {!r}'.format(self, other)
            )

    @property
    def height(self):
        # type: () -> int
        return sum(self.coords)

    def is_positive(self):
        # type: () -> bool
        return any(self.coords) and all(c >= 0 for c in self.coords)

    def is_negative(self):
        # type: () -> bool
        return any(self.coords) and all(c <= 0 for c in self.coords)


class RootVector(_LatticeVector):
    """Coordinates in the simple roots α_1..α_r."""
    __slots__ = ()

    def __str__(self):
        return _render_combination(self.coords, 'a')


class CorootVector(_LatticeVector):
    """Coordinates in the simple coroots h_1..h_r."""
    __slots__ = ()

    def __str__(self):
        return _render_combination(self.coords, 'h')


def _render_combination(coords, symbol):
    # type: (Sequence[int], str) -> str
    parts = []
    for k, c in enumerate(coords):
        if not c:
            continue
        sign = '-' if c < 0 else ('+' if parts else '')
        magnitude = '' if abs(c) == 1 else str(abs(c))
        parts.append('{}{}{}{}'.format(sign, magnitude, symbol, k + 1))
    return ''.join(parts) or '0'


def simple_root(cm, i):
    # type: (CartanMatrix, int) -> RootVector
    coords = [0] * cm.rank
    coords[i - 1] = 1
    return RootVector(coords)


def simple_coroot(cm, i):
    # type: (CartanMatrix, int) -> CorootVector
    coords = [0] * cm.rank
    coords[i - 1] = 1
    return CorootVector(coords)


def pairing(cm, root, coroot):
    # type: (CartanMatrix, RootVector, CorootVector) -> int
    """λ(h) = Σ_{i,j} λ_j h_i a_ij."""
    if len(root.coords) != cm.rank or len(coroot.coords) != cm.rank:
        raise SchubertValidationError(
            'rank mismatch: {} and {} against rank {}'.format(root, coroot, cm.rank)
        )
    return sum(
        root.coords[j] * coroot.coords[i] * cm.entries[i][j]
        for i in range(cm.rank)
        for j in range(cm.rank)
    )


def reflect_root(cm, i, root):
    # type: (CartanMatrix, int, RootVector) -> RootVector
    """s_i(λ) = λ - λ(h_i)α_i."""
    value = sum(root.coords[j] * cm.entries[i - 1][j] for j in range(cm.rank))
    coords = list(root.coords)
    coords[i - 1] -= value
    return RootVector(coords)


def reflect_coroot(cm, i, coroot):
    # type: (CartanMatrix, int, CorootVector) -> CorootVector
    """s_i(h) = h - α_i(h)h_i."""
    value = sum(coroot.coords[k] * cm.entries[k][i - 1] for k in range(cm.rank))
    coords = list(coroot.coords)
    coords[i - 1] -= value
    return CorootVector(coords)


def _chain(rank, bond=None):
    # type: (int, Optional[Tuple[int, int, int]]) -> List[List[int]]
    """Type A chain with one entry replaced: bond = (i, j, value), 1-based."""
    rows = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        rows[i][i] = 2
        if i + 1 < rank:
            rows[i][i + 1] = -1
            rows[i + 1][i] = -1
    if bond is not None:
        i, j, value = bond
        rows[i - 1][j - 1] = value
    return rows


def builtin_cartan(family, rank):
    # type: (str, int) -> CartanMatrix
    """
    Standard matrices. B_n has its short simple root α_1 at the double bond,
    C_n is the transpose of B_n, and G2 has α_1(h_2) = -3.
    """
    family = family.upper()
    if family not in BUILTIN_FAMILIES:
        raise SchubertValidationError('unknown Cartan family {!r}'.format(family))
    fixed = FAMILY_FIXED_RANK.get(family)
    if rank < FAMILY_MIN_RANK[family] or (fixed is not None and rank != fixed):
        raise SchubertValidationError(
            'invalid rank {} for family {}'.format(rank, family)
        )
    if family == 'A':
        rows = _chain(rank)
    elif family == 'B':
        rows = _chain(rank, (1, 2, -2))
    elif family == 'C':
        rows = _chain(rank, (2, 1, -2))
    elif family == 'D':
        rows = _chain(rank)
        rows[rank - 2][rank - 1] = rows[rank - 1][rank - 2] = 0
        rows[rank - 3][rank - 1] = rows[rank - 1][rank - 3] = -1
    elif family == 'F':
        rows = _chain(4, (2, 3, -2))
    else:
        rows = _chain(2, (2, 1, -3))
    return CartanMatrix(rows, name='{}{}'.format(family, rank))


def parse_cartan_type(text):
    # type: (str) -> CartanMatrix
    """Parse "A4", "g2", "C3" into a builtin matrix."""
    match = _CARTAN_TYPE.match(text)
    if match is None:
        raise SchubertValidationError('cannot parse Cartan type {!r}'.format(text))
    return builtin_cartan(match.group('family'), int(match.group('rank')))


def load_cartan(path):
    # type: (str) -> CartanMatrix
    """Read {"rank": r, "matrix": [[...]]}."""
    document = helpers.read_json(path, 'Cartan file')
    try:
        rank = int(document['rank'])
        matrix = [list(row) for row in document['matrix']]
    except (KeyError, TypeError, ValueError):
        raise SchubertValidationError(
            'Cartan file {} needs "rank" and "matrix" keys'.format(path)
        )
    if len(matrix) != rank:
        raise SchubertValidationError(
            'Cartan file {} declares rank {} but has {} rows'
            .format(path, rank, len(matrix))
        )
    return CartanMatrix(matrix, name=document.get('name'))


def _root_order(pair):
    root = pair[0]
    return (root.height, root.coords)


def positive_roots(cm, max_height=None, guard=None):
    # type: (CartanMatrix, Optional[int], Optional[int]) -> List[RootPair]
    """
    Positive real roots with their coroots, by height then lexicographically.

    Without `max_height` the whole set is enumerated, which only terminates in
    finite type; GuardExceededError is raised past `guard` roots.
    """
    guard = settings.ROOT_ENUMERATION_GUARD if guard is None else guard
    found = {}
    queue = deque()
    for i in range(1, cm.rank + 1):
        root = simple_root(cm, i)
        found[root] = simple_coroot(cm, i)
        queue.append(root)
    while queue:
        root = queue.popleft()
        coroot = found[root]
        for i in range(1, cm.rank + 1):
            image = reflect_root(cm, i, root)
            if not image.is_positive() or image in found:
                continue
            if max_height is not None and image.height > max_height:
                continue
            found[image] = reflect_coroot(cm, i, coroot)
            if len(found) > guard:
                raise GuardExceededError(
                    'more than {} positive roots for {}; not of finite type'
                    .format(guard, cm)
                )
            queue.append(image)
    logger.debug('%d positive roots for %s', len(found), cm)
    return sorted(found.items(), key=_root_order)

# coding: utf-8
"""
Bott towers Y_C.

A tower is fixed by an integer list C = {c_ij, i < j}. Its torus-fixed points and
its cells are both indexed by masks ε in {0,1}^N; everything here is computed from
the chain coefficients c_kl(ε) and the weights λ_i(ε) they produce.
"""
from __future__ import division

import itertools
import logging

import attr
import six
from six.moves import range
from typing import TYPE_CHECKING

from python_schubert import helpers, settings
from python_schubert.exceptions import InexactDivisionError, SchubertValidationError
from python_schubert.symalg import (
    Char,
    CharFraction,
    Poly,
    PolyFraction,
    fraction_add,
    fraction_finalize,
    lambda_space,
    poly_fraction_add,
    poly_fraction_finalize,
)
from python_schubert.validators import (
    validate_bits,
    validate_positive,
    validate_upper_triangle,
)

if TYPE_CHECKING:
    from random import Random  # noqa
    from typing import Any, Callable, Dict, Iterable, List, Sequence, Tuple  # noqa
    from python_schubert.symalg import VarSpace  # noqa
    Weight = Callable[[EpsilonMask, int], Any]


logger = logging.getLogger(__name__)


@attr.s(slots=True, frozen=True, repr=False)
class EpsilonMask(object):
    """
    An element of {0,1}^N. Indices into the mask are 1-based.
    """
    bits = attr.ib(converter=tuple, validator=validate_bits)  # type: Tuple[int, ...]

    @classmethod
    def from_string(cls, text):
        # type: (str) -> EpsilonMask
        text = text.strip()
        if not text or any(char not in '01' for char in text):
            raise SchubertValidationError('masks are bit strings, got {!r}'.format(text))
        return cls(int(char) for char in text)

    @classmethod
    def zeros(cls, n):
        # type: (int) -> EpsilonMask
        return cls((0,) * n)

    @classmethod
    def ones(cls, n):
        # type: (int) -> EpsilonMask
        return cls((1,) * n)

    @classmethod
    def unit(cls, n, i):
        # type: (int, int) -> EpsilonMask
        """The mask (i)."""
        return cls.zeros(n).with_bit(i, 1)

    @classmethod
    def from_positions(cls, n, positions):
        # type: (int, Iterable[int]) -> EpsilonMask
        bits = [0] * n
        for i in positions:
            bits[i - 1] = 1
        return cls(bits)

    @property
    def n(self):
        # type: () -> int
        return len(self.bits)

    @property
    def length(self):
        # type: () -> int
        return sum(self.bits)

    @property
    def positive(self):
        # type: () -> Tuple[int, ...]
        """π_+(ε)."""
        return tuple(k + 1 for k, bit in enumerate(self.bits) if bit)

    @property
    def negative(self):
        # type: () -> Tuple[int, ...]
        """π_-(ε)."""
        return tuple(k + 1 for k, bit in enumerate(self.bits) if not bit)

    def __getitem__(self, i):
        # type: (int) -> int
        return self.bits[i - 1]

    def with_bit(self, i, value):
        # type: (int, int) -> EpsilonMask
        bits = list(self.bits)
        bits[i - 1] = value
        return EpsilonMask(bits)

    def is_below(self, other):
        # type: (EpsilonMask) -> bool
        """ε <= ε' iff π_+(ε) ⊂ π_+(ε')."""
        self._check(other)
        return all(a <= b for a, b in zip(self.bits, other.bits))

    def __add__(self, other):
        # type: (EpsilonMask) -> EpsilonMask
        self._check(other)
        return EpsilonMask(a ^ b for a, b in zip(self.bits, other.bits))

    def _check(self, other):
        if other.n != self.n:
            raise SchubertValidationError(
                'mask lengths differ: {} vs {}'.format(self, other)
            )

    def sort_key(self):
        # type: () -> Tuple[int, Tuple[int, ...]]
        return (self.length, self.bits)

    def __str__(self):
        return ''.join(str(bit) for bit in self.bits)

    def __repr__(self):
        return 'EpsilonMask({!r})'.format(str(self))


def all_masks(n):
    # type: (int) -> List[EpsilonMask]
    """Every mask of length n, by l(ε) then lexicographically."""
    masks = [EpsilonMask(bits) for bits in itertools.product((0, 1), repeat=n)]
    return sorted(masks, key=EpsilonMask.sort_key)


def masks_below(mask):
    # type: (EpsilonMask) -> List[EpsilonMask]
    positions = mask.positive
    below = []
    for size in range(len(positions) + 1):
        for chosen in itertools.combinations(positions, size):
            below.append(EpsilonMask.from_positions(mask.n, chosen))
    return sorted(below, key=EpsilonMask.sort_key)


def _as_upper_triangle(rows):
    return tuple(tuple(int(value) for value in row) for row in rows)


@attr.s(slots=True, frozen=True)
class BottTowerSpec(object):
    """
    The list C. `c` is an N x N table read only above the diagonal.
    """
    n = attr.ib(validator=validate_positive)  # type: int
    c = attr.ib(
        converter=_as_upper_triangle, validator=validate_upper_triangle
    )  # type: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_entries(cls, n, entries):
        # type: (int, Iterable[Tuple[int, int, int]]) -> BottTowerSpec
        """entries: (i, j, c_ij) with 1 <= i < j <= n; missing entries are 0."""
        rows = [[0] * n for _ in range(n)]
        for i, j, value in entries:
            if not 1 <= i < j <= n:
                raise SchubertValidationError(
                    'Bott list entry ({}, {}) needs 1 <= i < j <= {}'.format(i, j, n)
                )
            rows[i - 1][j - 1] = value
        return cls(n, rows)

    def entry(self, i, j):
        # type: (int, int) -> int
        return self.c[i - 1][j - 1]

    def entries(self):
        # type: () -> List[Tuple[int, int, int]]
        return [
            (i, j, self.entry(i, j))
            for i in range(1, self.n + 1)
            for j in range(i + 1, self.n + 1)
            if self.entry(i, j)
        ]

    @property
    def space(self):
        return lambda_space(self.n)


def load_bott_tower(path):
    # type: (str) -> BottTowerSpec
    """Read {"N": n, "c": [[i, j, value], ...]}."""
    document = helpers.read_json(path, 'Bott list file')
    try:
        n = int(document['N'])
        entries = [tuple(int(x) for x in triple) for triple in document.get('c', [])]
    except (KeyError, TypeError, ValueError):
        raise SchubertValidationError(
            'Bott list file {} needs "N" and "c" keys'.format(path)
        )
    if any(len(triple) != 3 for triple in entries):
        raise SchubertValidationError(
            'Bott list file {} has entries that are not [i, j, value] triples'
            .format(path)
        )
    return BottTowerSpec.from_entries(n, entries)


def random_bott_tower(n, rng, entry_range=None):
    # type: (int, Random, Tuple[int, int]) -> BottTowerSpec
    low, high = entry_range or settings.VERIFY_BOTT_ENTRY_RANGE
    return BottTowerSpec.from_entries(n, [
        (i, j, rng.randint(low, high))
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
    ])


def _check_mask(spec, mask):
    # type: (BottTowerSpec, EpsilonMask) -> None
    if mask.n != spec.n:
        raise SchubertValidationError(
            'mask {} has length {}, tower has N = {}'.format(mask, mask.n, spec.n)
        )


@helpers.simple_cache
def chain_table(spec, mask):
    # type: (BottTowerSpec, EpsilonMask) -> Dict[Tuple[int, int], int]
    """
    All c_kl(ε), k < l: sums over chains k = i_0 < ... < i_m = l whose
    intermediate indices lie in π_+(ε) of ∏ (-c_{i_t, i_{t+1}}).
    """
    _check_mask(spec, mask)
    table = {}
    for k in range(1, spec.n + 1):
        partial = {k: 1}
        for l in range(k + 1, spec.n + 1):
            total = 0
            for j, value in six.iteritems(partial):
                total -= value * spec.entry(j, l)
            table[(k, l)] = total
            if mask[l]:
                partial[l] = total
    return table


def chain_coeff(spec, mask, k, l):
    # type: (BottTowerSpec, EpsilonMask, int, int) -> int
    if not 1 <= k < l <= spec.n:
        raise SchubertValidationError(
            'chain coefficient needs 1 <= k < l <= {}, got ({}, {})'.format(spec.n, k, l)
        )
    return chain_table(spec, mask)[(k, l)]


@helpers.simple_cache
def lambda_weight_coords(spec, mask, i):
    # type: (BottTowerSpec, EpsilonMask, int) -> Tuple[int, ...]
    if not 1 <= i <= spec.n:
        raise SchubertValidationError('index {} outside 1..{}'.format(i, spec.n))
    table = chain_table(spec, mask)
    sign = 1 if mask[i] else -1
    coords = [0] * spec.n
    coords[i - 1] = sign
    for j in mask.positive:
        if j < i:
            coords[j - 1] = sign * table[(j, i)]
    return tuple(coords)


def lambda_weight(spec, mask, i):
    # type: (BottTowerSpec, EpsilonMask, int) -> Poly
    """λ_i(ε) = (-1)^{ε_i+1}(λ_i + Σ_{j<i, j∈π+(ε)} c_ji(ε) λ_j)."""
    return Poly.linear(spec.space, lambda_weight_coords(spec, mask, i))


def sigma_D(spec, mask, point):
    # type: (BottTowerSpec, EpsilonMask, EpsilonMask) -> Poly
    _check_mask(spec, mask)
    _check_mask(spec, point)
    if not mask.is_below(point):
        return Poly.zero(spec.space)
    value = Poly.one(spec.space)
    for i in mask.positive:
        value = value * lambda_weight(spec, point, i)
    return value


def mu_D(spec, mask, point):
    # type: (BottTowerSpec, EpsilonMask, EpsilonMask) -> Char
    """
    ∏_{i∈π+(ε')} e^{-λ_i(ε')} ∏_{i∈π+(ε)} (e^{λ_i(ε')} - 1),
    zero unless ε <= ε'.
    """
    _check_mask(spec, mask)
    _check_mask(spec, point)
    space = spec.space
    if not mask.is_below(point):
        return Char.zero(space)
    value = Char.one(space)
    for i in point.positive:
        value = value.shift([-x for x in lambda_weight_coords(spec, point, i)])
    for i in mask.positive:
        value = value * (Char.exp(space, lambda_weight_coords(spec, point, i)) - 1)
    return value


@attr.s(slots=True)
class FixedPointTable(object):
    """
    Values indexed by every mask of length n, produced by `evaluator`.

    Up to EAGER_TABLE_MAX_LENGTH bits the table is filled on construction;
    longer tables fill entries on first access.
    """
    n = attr.ib(validator=validate_positive)  # type: int
    evaluator = attr.ib()  # type: Callable[[EpsilonMask], Any]
    values = attr.ib(factory=dict)  # type: Dict[EpsilonMask, Any]

    def __attrs_post_init__(self):
        if self.n <= settings.EAGER_TABLE_MAX_LENGTH and not self.values:
            for mask in all_masks(self.n):
                self.values[mask] = self.evaluator(mask)

    def __getitem__(self, mask):
        # type: (EpsilonMask) -> Any
        if mask.n != self.n:
            raise SchubertValidationError(
                'mask {} does not index a table over N = {}'.format(mask, self.n)
            )
        if mask not in self.values:
            self.values[mask] = self.evaluator(mask)
        return self.values[mask]


# the two table kinds only differ by value type
FixedPointPolyTable = FixedPointTable
FixedPointCharTable = FixedPointTable


def sigma_D_table(spec, mask):
    # type: (BottTowerSpec, EpsilonMask) -> FixedPointTable
    return FixedPointTable(spec.n, lambda point: sigma_D(spec, mask, point))


def mu_D_table(spec, mask):
    # type: (BottTowerSpec, EpsilonMask) -> FixedPointTable
    return FixedPointTable(spec.n, lambda point: mu_D(spec, mask, point))


def _push_down(mask, table, step):
    """
    Collapse the points below ε one P¹ fibre at a time, from the top index of
    π+(ε) down; `step(low, high, point, k)` merges the values at `point`
    (ε'_k = 0) and `point + (k)` into one value at `point`.
    """
    values = {point: table[point] for point in masks_below(mask)}
    for k in reversed(mask.positive):
        values = {
            point: step(value, values[point.with_bit(k, 1)], point, k)
            for point, value in six.iteritems(values)
            if not point[k]
        }
    return values[EpsilonMask.zeros(mask.n)]


def fibre_integral(space, table, mask, weight):
    # type: (VarSpace, Any, EpsilonMask, Weight) -> Poly
    """
    Σ_{ε'<=ε} table(ε') / ∏_{i∈π+(ε)} weight(ε', i).

    weight(ε', i) must depend on ε'_1..ε'_i only and change sign with ε'_i, as the
    tangent weights of an iterated P¹-bundle do. Tables that are not restrictions
    of classes fall back to one sum over a common denominator.
    """
    def step(low, high, point, k):
        difference = low - high
        if difference.is_zero():
            return difference
        return difference.divide_linear(weight(point, k))

    try:
        return _push_down(mask, table, step)
    except InexactDivisionError:
        logger.debug('fibre sum over %s is not exact, summing fractions', mask)
    total = PolyFraction(Poly.zero(space))
    for point in masks_below(mask):
        weights = [weight(point, i) for i in mask.positive]
        total = poly_fraction_add(total, PolyFraction.build(table[point], weights))
    return poly_fraction_finalize(total)


def fibre_euler_char(space, table, mask, weight):
    # type: (VarSpace, Any, EpsilonMask, Weight) -> Char
    """
    Σ_{ε'<=ε} table(ε') / ∏_{i∈π+(ε)} (1 - e^{-weight(ε', i)}), with the same
    conditions on `weight` as fibre_integral.
    """
    def step(low, high, point, k):
        beta = weight(point, k)
        difference = low - high.shift([-b for b in beta])
        if difference.is_zero():
            return difference
        return difference.divide_factor(beta)

    try:
        return _push_down(mask, table, step)
    except InexactDivisionError:
        logger.debug('fibre sum over %s is not exact, summing fractions', mask)
    total = CharFraction(Char.zero(space))
    for point in masks_below(mask):
        weights = [weight(point, i) for i in mask.positive]
        total = fraction_add(total, CharFraction.build(table[point], weights))
    return fraction_finalize(total)


def integrate(spec, table, mask):
    # type: (BottTowerSpec, FixedPointTable, EpsilonMask) -> Poly
    """Σ_{ε'<=ε} table(ε') / ∏_{i∈π+(ε)} λ_i(ε')."""
    _check_mask(spec, mask)
    return fibre_integral(spec.space, table, mask,
                          lambda point, i: lambda_weight(spec, point, i))


def euler_char(spec, table, mask):
    # type: (BottTowerSpec, FixedPointTable, EpsilonMask) -> Char
    """Σ_{ε'<=ε} table(ε') / ∏_{i∈π+(ε)} (1 - e^{-λ_i(ε')})."""
    _check_mask(spec, mask)
    return fibre_euler_char(spec.space, table, mask,
                            lambda point, i: lambda_weight_coords(spec, point, i))


def _divide_sigma_diagonal(spec):
    def divide(value, mask):
        for i in mask.positive:
            value = value.divide_linear(lambda_weight(spec, mask, i))
        return value
    return divide


def _divide_mu_diagonal(spec):
    def divide(value, mask):
        for i in mask.positive:
            value = value.divide_factor(lambda_weight_coords(spec, mask, i))
        return value
    return divide


def hd_expand(spec, values):
    # type: (BottTowerSpec, Callable[[EpsilonMask], Poly]) -> Dict[EpsilonMask, Poly]
    """Coefficients of a fixed-point table in the σ̂^D basis."""
    return helpers.triangular_expand(
        all_masks(spec.n),
        EpsilonMask.is_below,
        lambda mask, point: sigma_D(spec, mask, point),
        _divide_sigma_diagonal(spec),
        values,
    )


def kd_expand(spec, values):
    # type: (BottTowerSpec, Callable[[EpsilonMask], Char]) -> Dict[EpsilonMask, Char]
    """Coefficients of a fixed-point table in the μ̂^D basis."""
    return helpers.triangular_expand(
        all_masks(spec.n),
        EpsilonMask.is_below,
        lambda mask, point: mu_D(spec, mask, point),
        _divide_mu_diagonal(spec),
        values,
    )


def hd_product(spec, first, second):
    # type: (BottTowerSpec, EpsilonMask, EpsilonMask) -> Dict[EpsilonMask, Poly]
    return hd_expand(
        spec, lambda point: sigma_D(spec, first, point) * sigma_D(spec, second, point)
    )


def kd_product(spec, first, second):
    # type: (BottTowerSpec, EpsilonMask, EpsilonMask) -> Dict[EpsilonMask, Char]
    return kd_expand(
        spec, lambda point: mu_D(spec, first, point) * mu_D(spec, second, point)
    )


def multiply_generator(spec, i, mask):
    # type: (BottTowerSpec, int, EpsilonMask) -> Dict[EpsilonMask, Poly]
    """
    σ̂_i σ̂_ε in closed form: σ̂_{ε+(i)} when i ∈ π-(ε), otherwise
    σ_i(ε) σ̂_ε + Σ_{j<i, j∈π-(ε)} c_ji(ε) σ̂_{ε+(j)}.
    """
    _check_mask(spec, mask)
    if not mask[i]:
        return {mask.with_bit(i, 1): Poly.one(spec.space)}
    result = {mask: sigma_D(spec, EpsilonMask.unit(spec.n, i), mask)}
    for j in mask.negative:
        if j < i:
            coefficient = chain_coeff(spec, mask, j, i)
            if coefficient:
                result[mask.with_bit(j, 1)] = Poly.constant(spec.space, coefficient)
    return result


def ordinary_product(spec, first, second):
    # type: (BottTowerSpec, EpsilonMask, EpsilonMask) -> Dict[EpsilonMask, int]
    """Structure constants of H^*(Y_C): the equivariant ones evaluated at zero."""
    result = {}
    for mask, coefficient in six.iteritems(hd_product(spec, first, second)):
        value = coefficient.constant_term()
        if value:
            result[mask] = value
    return result

from typing import TYPE_CHECKING

from python_schubert.constants import VARSPACE_PREFIXES
from python_schubert.exceptions import SchubertValidationError

if TYPE_CHECKING:
    from attr import Attribute  # noqa
    from typing import Any, Sequence, Tuple  # noqa


def validate_positive(instance, attribute, value):
    # type: (Any, Attribute, int) -> None
    if value < 1:
        name = attribute.name
        raise SchubertValidationError(
            '{name} must be a positive integer, got {value}'.format(**locals())
        )


def validate_cartan_entries(instance, attribute, value):
    # type: (Any, Attribute, Tuple[Tuple[int, ...], ...]) -> None
    rank = len(value)
    if rank == 0:
        raise SchubertValidationError('a Cartan matrix needs at least one row')
    for i, row in enumerate(value):
        if len(row) != rank:
            raise SchubertValidationError(
                'Cartan matrix must be square: row {i} has {n} entries, expected {rank}'
                .format(i=i + 1, n=len(row), rank=rank)
            )
        if row[i] != 2:
            raise SchubertValidationError(
                'Cartan matrix diagonal must be 2, got a[{k}][{k}] = {v}'
                .format(k=i + 1, v=row[i])
            )
    for i in range(rank):
        for j in range(rank):
            if i == j:
                continue
            if value[i][j] > 0:
                raise SchubertValidationError(
                    'off-diagonal entry a[{i}][{j}] = {v} must be <= 0'
                    .format(i=i + 1, j=j + 1, v=value[i][j])
                )
            if (value[i][j] == 0) != (value[j][i] == 0):
                raise SchubertValidationError(
                    'a[{i}][{j}] and a[{j}][{i}] must vanish together'
                    .format(i=i + 1, j=j + 1)
                )


def validate_word(instance, attribute, value):
    # type: (Any, Attribute, Sequence[int]) -> None
    rank = instance.cm.rank
    for index in value:
        if not 1 <= index <= rank:
            raise SchubertValidationError(
                'word index {index} outside 1..{rank}'.format(**locals())
            )


def validate_bits(instance, attribute, value):
    # type: (Any, Attribute, Sequence[int]) -> None
    if any(bit not in (0, 1) for bit in value):
        raise SchubertValidationError(
            'mask bits must be 0 or 1, got {value}'.format(**locals())
        )


def validate_varspace_kind(instance, attribute, value):
    # type: (Any, Attribute, str) -> None
    if value not in VARSPACE_PREFIXES:
        kinds = ', '.join(sorted(VARSPACE_PREFIXES))
        raise SchubertValidationError(
            'unknown variable space {value!r}; expected one of {kinds}'
            .format(**locals())
        )


def validate_upper_triangle(instance, attribute, value):
    # type: (Any, Attribute, Tuple[Tuple[Any, ...], ...]) -> None
    n = instance.n
    if len(value) != n or any(len(row) != n for row in value):
        raise SchubertValidationError(
            '{name} must be an {n}x{n} table'.format(name=attribute.name, n=n)
        )

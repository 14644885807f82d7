# coding: utf-8
from __future__ import division

import io
import json
import logging
from functools import wraps

import attr
import six
from typing import TYPE_CHECKING

from python_schubert.exceptions import SchubertValidationError

if TYPE_CHECKING:
    from typing import Any, Callable, Dict, Hashable, Iterable, List  # noqa


logger = logging.getLogger(__name__)

_CACHES = []  # type: List[Dict[Hashable, Any]]


def simple_cache(func):
    # type: (Callable[..., Any]) -> Callable[..., Any]
    """
    A simple unbounded cache, emptied by clear_caches().
    Raises TypeError if any argument is unhashable.
    """
    cache = {}  # type: Dict[Hashable, Any]
    _CACHES.append(cache)

    @wraps(func)
    def decorated_function(*args, **kwargs):
        # type: (*Any, **Any) -> Any
        cache_key = (args, tuple(sorted(six.iteritems(kwargs))))
        if cache_key in cache:
            return cache[cache_key]

        return_value = func(*args, **kwargs)
        cache[cache_key] = return_value
        return return_value

    decorated_function.cache = cache
    return decorated_function


def clear_caches():
    # type: () -> int
    """Empty every simple_cache; returns the number of entries dropped."""
    dropped = 0
    for cache in _CACHES:
        dropped += len(cache)
        cache.clear()
    logger.debug('cleared %d cached values', dropped)
    return dropped


def read_json(path, what):
    # type: (str, str) -> Any
    """Parse a JSON file, reporting unreadable or malformed files as validation errors."""
    try:
        with io.open(path, encoding='utf-8') as file_obj:
            return json.load(file_obj)
    except (IOError, OSError) as exc:
        raise SchubertValidationError('cannot read {} {}: {}'.format(what, path, exc))
    except ValueError as exc:
        raise SchubertValidationError(
            '{} {} is not valid JSON: {}'.format(what, path, exc)
        )


def parse_index_list(text):
    # type: (str) -> tuple
    """
    "1,2,1" -> (1, 2, 1); the empty string is the empty word.
    """
    text = text.strip()
    if not text:
        return ()
    return tuple(int(part) for part in text.split(','))


def triangular_expand(
    keys,        # type: List[Hashable]
    is_below,    # type: Callable[[Hashable, Hashable], bool]
    basis,       # type: Callable[[Hashable, Hashable], Any]
    divide,      # type: Callable[[Any, Hashable], Any]
    table,       # type: Callable[[Hashable], Any]
):
    # type: (...) -> Dict[Hashable, Any]
    """
    Expand a fixed-point table in a basis supported above its index.

    `keys` must list every index before the indices above it. `basis(k, p)` is
    the value of basis element k at point p, zero unless `is_below(k, p)`, and
    `divide(value, k)` divides by the diagonal entry basis(k, k). Returns the
    nonzero coefficients.
    """
    coefficients = {}  # type: Dict[Hashable, Any]
    for key in keys:
        residual = table(key)
        for lower, coefficient in six.iteritems(coefficients):
            if lower != key and is_below(lower, key):
                residual = residual - coefficient * basis(lower, key)
        if residual == 0:
            continue
        coefficients[key] = divide(residual, key)
    logger.debug('triangular expansion over %d points, %d terms', len(keys),
                 len(coefficients))
    return coefficients


@attr.s(slots=True)
class VerificationReport(object):
    """
    Outcome of one verification suite: how many cases ran and which failed.
    """
    name = attr.ib()  # type: str
    checked = attr.ib(default=0)  # type: int
    failures = attr.ib(factory=list)  # type: List[str]

    @property
    def passed(self):
        # type: () -> bool
        return not self.failures

    def check(self, condition, description):
        # type: (bool, str) -> bool
        self.checked += 1
        if not condition:
            logger.info('%s: failed %s', self.name, description)
            self.failures.append(description)
        return condition

    def merge(self, other):
        # type: (VerificationReport) -> None
        self.checked += other.checked
        self.failures.extend(other.failures)

    def __str__(self):
        status = 'passed' if self.passed else 'FAILED'
        lines = ['{}: {} ({} checked, {} failed)'.format(
            self.name, status, self.checked, len(self.failures))]
        lines.extend('  {}'.format(failure) for failure in self.failures)
        return '\n'.join(lines)

# coding: utf-8
import pytest

from python_schubert import settings
from python_schubert.exceptions import SchubertValidationError
from python_schubert.helpers import VerificationReport
from python_schubert.rootdata import builtin_cartan
from python_schubert.verification import run_suite
from python_schubert.weyl import bruhat_leq, reduced_words


@pytest.mark.parametrize('name, fixture, bound', [
    ('tau', 'a2', 3),
    ('yang-baxter', 'g2', None),
    ('duan', 'a2', None),
    ('kk-vs-t', 'a2', None),
    ('basechange', 'a1', None),
    ('localization', 'a2', 2),
    ('euler', 'a2', 2),
    ('word-independence', 'a2', 2),
    ('psi-axioms', 'a1', None),
    ('kk-vs-t', 'affine_a1', 2),
    ('psi-axioms', 'affine_a1', 2),
])
def test_suites_pass_on_small_inputs(request, name, fixture, bound):
    report = run_suite(name, request.getfixturevalue(fixture), bound)
    assert report.name == name
    assert report.checked > 0
    assert report.passed, str(report)


def test_duan_in_b2(b2):
    assert run_suite('duan', b2).passed


def test_default_type():
    report = run_suite('yang-baxter')
    assert report.passed
    assert report.checked == 2


def test_unknown_suite():
    with pytest.raises(SchubertValidationError):
        run_suite('lefschetz', builtin_cartan('A', 2))


def test_report():
    report = VerificationReport('demo')
    assert report.check(True, 'fine')
    assert not report.check(False, 'broken')
    assert report.checked == 2
    assert not report.passed
    other = VerificationReport('other')
    other.check(True, 'also fine')
    report.merge(other)
    assert report.checked == 3
    assert report.failures == ['broken']
    assert str(report).splitlines() == ['demo: FAILED (3 checked, 1 failed)', '  broken']
    assert str(other) == 'other: passed (1 checked, 0 failed)'


@pytest.mark.parametrize('name', ['localization', 'euler'])
def test_bott_suites_at_full_size(name):
    report = run_suite(name)
    assert report.passed, str(report)
    assert report.checked > settings.VERIFY_RANDOM_LISTS


def test_suites_release_cached_values(a2):
    assert run_suite('word-independence', a2, 1).passed
    assert not reduced_words.cache
    assert not bruhat_leq.cache


@pytest.mark.parametrize('name', ['psi-axioms', 'kk-vs-t', 'word-independence'])
def test_whole_group_suites_in_b2(b2, name):
    report = run_suite(name, b2)
    assert report.passed, str(report)

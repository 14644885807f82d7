# coding: utf-8
import json

import pytest
import six

from python_schubert.cli import run


def invoke(*argv):
    stdout, stderr = six.StringIO(), six.StringIO()
    code = run(list(argv), stdout=stdout, stderr=stderr)
    return code, stdout.getvalue(), stderr.getvalue()


def test_billey():
    code, out, _ = invoke('billey', '-t', 'A4', '-w', '3,2', '-v', '2,3,2,1,2')
    assert code == 0
    assert out.strip() == 'a1*a2 + a1*a3 + a2^2 + 2*a2*a3 + a3^2'


def test_pq_as_json():
    code, out, _ = invoke('pq', '-t', 'G2', '-u', '2,1,2', '-v', '1,2,1', '-w', '1,2,1,2',
                          '--json')
    assert code == 0
    assert json.loads(out) == {'w': 's1s2s1s2', 'p': '2*a1^2 + 5*a1*a2 + 3*a2^2'}


def test_psi():
    code, out, _ = invoke('psi', '-t', 'A1', '-w', '1', '-v', '1')
    assert code == 0
    assert out.strip() == '-e^{a1} + 1'


def test_verify():
    code, out, _ = invoke('verify', 'yang-baxter', '-t', 'G2')
    assert code == 0
    assert out.startswith('yang-baxter: passed')


def test_verify_needs_a_suite():
    code, _, err = invoke('verify', '-t', 'A2')
    assert code == 1
    assert err.startswith('error:')


def test_bad_word():
    code, out, err = invoke('billey', '-t', 'A2', '-w', '1,3', '-v', '1,2')
    assert code == 1
    assert out == ''
    assert err.startswith('error:')


def test_missing_word():
    code, _, err = invoke('billey', '-t', 'A2', '-w', '1')
    assert code == 1
    assert '-v' in err


def test_unknown_command():
    with pytest.raises(SystemExit):
        invoke('lefschetz', '-t', 'A2')


def test_bott_k(tmp_path):
    path = tmp_path / 'hirzebruch.json'
    path.write_text(u'{"N": 2, "c": [[1, 2, -1]]}')
    code, out, _ = invoke('bott-k', '--bott-file', str(path), '-e', '10')
    assert code == 0
    assert out.splitlines() == [
        '00 0',
        '01 0',
        '10 1 - e^{-l1}',
        '11 e^{-l1-l2} - e^{-2l1-l2}',
    ]


def test_roots_and_weyl():
    code, out, _ = invoke('roots', '-t', 'A2')
    assert code == 0
    assert len(out.splitlines()) == 3
    code, out, _ = invoke('weyl', '-t', 'A2', '--json')
    assert code == 0
    assert sorted(record['length'] for record in json.loads(out)) == [0, 1, 1, 2, 2, 3]


def test_basechange():
    code, out, _ = invoke('basechange', '-t', 'A1', '-w', '1')
    assert code == 0
    assert out.splitlines() == ['1: 1', 's1: 1']


def test_pq_as_text():
    code, out, _ = invoke('pq', '-t', 'A5', '-u', '5,2', '-v', '4,5,3,4',
                          '-w', '4,5,2,3,4')
    assert code == 0
    assert out.strip() == 'a4 + a5'


def test_malformed_cartan_file(tmp_path):
    path = tmp_path / 'broken.json'
    path.write_text(u'{"rank": 2, "matrix": [[2, -1], [-1, 2]')
    code, out, err = invoke('roots', '-C', str(path))
    assert code == 1
    assert out == ''
    assert err.startswith('error:')


def test_missing_bott_file(tmp_path):
    missing = str(tmp_path / 'missing.json')
    code, _, err = invoke('bott-k', '--bott-file', missing, '-e', '1')
    assert code == 1
    assert err.startswith('error:')
    assert 'missing.json' in err


def test_roots_in_infinite_type_use_the_default_height(tmp_path):
    path = tmp_path / 'affine.json'
    path.write_text(u'{"rank": 2, "matrix": [[2, -2], [-2, 2]]}')
    code, out, _ = invoke('roots', '-C', str(path), '--json')
    assert code == 0
    heights = sorted(record['height'] for record in json.loads(out))
    assert heights == [1, 1, 3, 3, 5, 5, 7, 7, 9, 9]
    code, out, _ = invoke('roots', '-C', str(path), '--bound', '3')
    assert code == 0
    assert len(out.splitlines()) == 4

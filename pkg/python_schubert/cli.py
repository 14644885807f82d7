# coding: utf-8
"""
Command-line front end.

    python -m python_schubert billey -t A4 -w 3,2 -v 2,3,2,1,2
    python -m python_schubert pq -t G2 -u 2,1,2 -v 1,2,1 -w 1,2,1,2 --json
    python -m python_schubert verify yang-baxter -t G2
"""
from __future__ import division, print_function

import argparse
import json
import logging
import sys
from collections import OrderedDict

from typing import TYPE_CHECKING

from python_schubert import settings
from python_schubert.botttower import (
    EpsilonMask,
    all_masks,
    load_bott_tower,
    mu_D,
    sigma_D,
)
from python_schubert.constants import CLI_COMMANDS, EXIT_CODES, VERIFY_SUITES
from python_schubert.exceptions import SchubertError, SchubertValidationError
from python_schubert.flagcoh import billey
from python_schubert.flagk import change_of_basis, psi
from python_schubert.rootdata import load_cartan, parse_cartan_type, positive_roots
from python_schubert.structconst import product_in_basis, struct_const
from python_schubert.verification import run_suite
from python_schubert.weyl import (
    all_elements,
    elements_up_to_length,
    format_word,
    from_word,
    parse_word,
)

if TYPE_CHECKING:
    from typing import Dict, List, Optional, Sequence, Tuple  # noqa
    from python_schubert.rootdata import CartanMatrix  # noqa
    Record = Dict[str, object]


logger = logging.getLogger(__name__)


def build_parser():
    # type: () -> argparse.ArgumentParser
    parser = argparse.ArgumentParser(
        prog='python_schubert',
        description='Equivariant cohomology and K-theory of Bott towers, '
                    'Bott-Samelson varieties and flag varieties.',
    )
    parser.add_argument('command', choices=CLI_COMMANDS)
    parser.add_argument('suite', nargs='?', choices=VERIFY_SUITES,
                        help='verification suite (verify only)')
    parser.add_argument('-t', '--type', dest='cartan_type',
                        help='builtin Cartan type such as A4, B2, G2')
    parser.add_argument('-C', '--cartan-file', help='JSON file with a Cartan matrix')
    parser.add_argument('-w', help='word (comma separated, 1-based) for w')
    parser.add_argument('-u', help='word for u')
    parser.add_argument('-v', help='word for v')
    parser.add_argument('-e', dest='mask', help='mask as a bit string, e.g. 101')
    parser.add_argument('--bott-file', help='JSON file with a Bott list')
    parser.add_argument('--json', action='store_true', help='emit JSON records')
    parser.add_argument('--bound', type=int,
                        help='length or height bound for enumerations')
    parser.add_argument('--log-level', choices=sorted(settings.LOG_LEVEL_OPTIONS),
                        default='QUIET')
    return parser


def _cartan(args, required=True):
    # type: (argparse.Namespace, bool) -> Optional[CartanMatrix]
    if args.cartan_file:
        return load_cartan(args.cartan_file)
    if args.cartan_type:
        return parse_cartan_type(args.cartan_type)
    if required:
        raise SchubertValidationError('{} needs -t TYPE or -C FILE'.format(args.command))
    return None


def _word(args, name, cm):
    # type: (argparse.Namespace, str, CartanMatrix) -> Tuple[int, ...]
    text = getattr(args, name)
    if text is None:
        raise SchubertValidationError('{} needs -{}'.format(args.command, name))
    return parse_word(text, cm)


def _element(args, name, cm):
    return from_word(cm, _word(args, name, cm))


def _mask(args):
    # type: (argparse.Namespace) -> EpsilonMask
    if args.mask is None:
        raise SchubertValidationError('{} needs -e MASK'.format(args.command))
    return EpsilonMask.from_string(args.mask)


def _record(*pairs):
    return OrderedDict(pairs)


def command_roots(args):
    cm = _cartan(args)
    bound = args.bound
    if bound is None and not cm.is_finite_type():
        bound = settings.DEFAULT_COVER_HEIGHT_BOUND
    records = [
        _record(('root', str(root)), ('coroot', str(coroot)), ('height', root.height))
        for root, coroot in positive_roots(cm, max_height=bound)
    ]
    lines = ['{} {}'.format(record['root'], record['coroot']) for record in records]
    return records, lines


def command_weyl(args):
    cm = _cartan(args)
    if args.w is not None:
        elements = [_element(args, 'w', cm)]
    elif args.bound is not None:
        elements = elements_up_to_length(cm, args.bound)
    else:
        elements = all_elements(cm)
    records = [
        _record(('element', str(w)), ('word', format_word(w.reduced_word)),
                ('length', w.length))
        for w in elements
    ]
    lines = ['{} {}'.format(record['element'], record['length']) for record in records]
    return records, lines


def command_billey(args):
    cm = _cartan(args)
    w = _element(args, 'w', cm)
    v_word = _word(args, 'v', cm)
    value = str(billey(cm, w, v_word))
    return _record(('w', str(w)), ('v', format_word(v_word)), ('xi', value)), [value]


def command_psi(args):
    cm = _cartan(args)
    w = _element(args, 'w', cm)
    v_word = _word(args, 'v', cm)
    value = str(psi(cm, w, v_word))
    return _record(('w', str(w)), ('v', format_word(v_word)), ('psi', value)), [value]


def command_pq(args):
    cm = _cartan(args)
    u = _element(args, 'u', cm)
    v = _element(args, 'v', cm)
    w_word = _word(args, 'w', cm)
    value = str(struct_const(cm, u, v, w_word))
    return _record(('w', str(from_word(cm, w_word))), ('p', value)), [value]


def command_product(args):
    cm = _cartan(args)
    u = _element(args, 'u', cm)
    v = _element(args, 'v', cm)
    w0_word = _word(args, 'w', cm) if args.w is not None else None
    expansion = product_in_basis(cm, u, v, w0_word)
    records = [
        _record(('w', str(w)), ('p', str(expansion[w])))
        for w in sorted(expansion, key=lambda element: element.sort_key())
    ]
    lines = ['{}: {}'.format(record['w'], record['p']) for record in records]
    return records, lines


def _bott_table(args, evaluate):
    if not args.bott_file:
        raise SchubertValidationError('{} needs --bott-file'.format(args.command))
    spec = load_bott_tower(args.bott_file)
    mask = _mask(args)
    records = [
        _record(('point', str(point)), ('value', str(evaluate(spec, mask, point))))
        for point in all_masks(spec.n)
    ]
    lines = ['{} {}'.format(record['point'], record['value']) for record in records]
    return records, lines


def command_bott_restrict(args):
    return _bott_table(args, sigma_D)


def command_bott_k(args):
    return _bott_table(args, mu_D)


def command_basechange(args):
    cm = _cartan(args)
    w = _element(args, 'w', cm)
    coefficients = change_of_basis(cm, w)
    records = [
        _record(('v', str(v)), ('b', str(coefficients[v])))
        for v in sorted(coefficients, key=lambda element: element.sort_key())
    ]
    lines = ['{}: {}'.format(record['v'], record['b']) for record in records]
    return records, lines


COMMANDS = {
    'roots': command_roots,
    'weyl': command_weyl,
    'billey': command_billey,
    'psi': command_psi,
    'pq': command_pq,
    'product': command_product,
    'bott-restrict': command_bott_restrict,
    'bott-k': command_bott_k,
    'basechange': command_basechange,
}


def _emit(args, records, lines, stream):
    if args.json:
        print(json.dumps(records, indent=2), file=stream)
    else:
        for line in lines:
            print(line, file=stream)


def _verify(args, stdout):
    # type: (argparse.Namespace, object) -> int
    if args.suite is None:
        raise SchubertValidationError(
            'verify needs a suite: {}'.format(', '.join(VERIFY_SUITES))
        )
    report = run_suite(args.suite, _cartan(args, required=False), args.bound)
    record = _record(('suite', report.name), ('checked', report.checked),
                     ('passed', report.passed), ('failures', list(report.failures)))
    _emit(args, record, str(report).splitlines(), stdout)
    return EXIT_CODES['OK'] if report.passed else EXIT_CODES['VERIFICATION_FAILED']


def run(argv=None, stdout=None, stderr=None):
    # type: (Optional[Sequence[str]], object, object) -> int
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    args = build_parser().parse_args(argv)
    logging.basicConfig(format=settings.LOG_FORMAT,
                        level=settings.LOG_LEVEL_OPTIONS[args.log_level])
    logger.debug('running %s', args.command)
    try:
        if args.command == 'verify':
            return _verify(args, stdout)
        records, lines = COMMANDS[args.command](args)
    except SchubertError as error:
        print('error: {}'.format(error), file=stderr)
        return EXIT_CODES['DOMAIN_ERROR']
    _emit(args, records, lines, stdout)
    return EXIT_CODES['OK']


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()

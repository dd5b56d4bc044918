'''Main entrypoint'''

import argparse
import json
import logging
import sys

import job_config
from commands import COMMANDS
from common import ORDERS
from exceptions import StructuralError
from log_utils import init_logging
from verify import error_report, run


def parse_args(argv=None):
    parser = argparse.ArgumentParser(
        description='Verify crossed products by inverse semigroup actions at finite scale')
    parser.add_argument('command', choices=sorted(COMMANDS))
    group = parser.add_mutually_exclusive_group()
    group.add_argument('-p', '--params', dest='params',
                       help='A JSON encoded string',
                       metavar="'{\"fixture\": \"I3\"}'")
    group.add_argument('-f', '--file', dest='file',
                       help='A path to a JSON file', type=argparse.FileType('r', encoding='utf-8'),
                       metavar='./input.json')
    group.add_argument('--fixture', dest='fixture',
                       help='The name of a bundled fixture', metavar='I3')
    parser.add_argument('--seed', type=int, help='Seed of randomized checks')
    parser.add_argument('--tol', type=float, help='Exact-side tolerance')
    parser.add_argument('--spectral-tol', dest='spectral_tol', type=float,
                        help='Spectral-side tolerance')
    parser.add_argument('--cap', type=int, help='Size cap of closures')
    parser.add_argument('--order', choices=ORDERS, help='Total order on the semigroup')
    parser.add_argument('--out', help='Also write the report to this path')
    parser.add_argument('--timeout', type=float, help='Time budget in seconds')
    parser.add_argument('--log-level', dest='log_level', default='INFO',
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'])
    return parser.parse_args(argv)


def read_document(args):
    '''
    The input document, or a malformed-JSON error report with its position.
    '''
    if args.fixture:
        return {'fixture': args.fixture}, None
    try:
        if args.params:
            return json.loads(args.params), None
        if args.file:
            return json.load(args.file), None
    except json.JSONDecodeError as err:
        return None, error_report(StructuralError(f'malformed JSON: {err.msg}'),
                                  line=err.lineno, column=err.colno, position=err.pos)
    return {}, None


def write_report(report, out=None):
    text = json.dumps(report, sort_keys=True, indent=2)
    print(text)
    if out:
        with open(out, 'w', encoding='utf-8') as out_file:
            out_file.write(text + '\n')


def main(argv=None):
    args = parse_args(argv)
    init_logging({'command': args.command, 'seed': args.seed},
                 getattr(logging, args.log_level))

    flags = {name: getattr(args, name)
             for name in ('seed', 'tol', 'spectral_tol', 'cap', 'order', 'out', 'timeout')}
    document, failure = read_document(args)
    if failure:
        write_report(failure, args.out)
        return 2

    try:
        config = job_config.from_object(document, job_config.DEFAULTS, flags)
        out = config.out
    except StructuralError as err:
        write_report(error_report(err), args.out)
        return 2

    status, report = run(args.command, document, config)
    write_report(report, out)
    return status


if __name__ == '__main__':
    sys.exit(main())

import argparse
import logging
import sys
from typing import Callable, Sequence

from higher_bell.commands import (
    METHODS,
    cmd_asympt,
    cmd_compare,
    cmd_poly,
    cmd_selfcheck,
    cmd_table,
    cmd_value,
)
from higher_bell.errors import InvalidArgumentError
from higher_bell.exception_catcher import exception_catcher
from higher_bell.rendering import FORMATS, OutputDocument
from higher_bell.settings import settings


def natural(raw: str) -> int:
    try:
        value = int(raw)

    except ValueError:
        raise argparse.ArgumentTypeError(f'not an integer: {raw!r}') from None

    if value < 0:
        raise argparse.ArgumentTypeError(f'must be >= 0: {raw!r}')

    return value


def emit(document: OutputDocument) -> int:
    sys.stdout.write(document.payload)
    sys.stdout.flush()
    return document.exit_code


def single(name: str, values: list[int] | None) -> int:
    if not values or len(values) != 1:
        raise InvalidArgumentError(f'{name} needs exactly one --{name.lower()} value')

    return values[0]


def required(name: str, value: int | None) -> int:
    if value is None:
        raise InvalidArgumentError(f'--{name} is required for this command')

    return value


@exception_catcher(1)
def handler_table(arguments: argparse.Namespace) -> int:
    return emit(cmd_table(arguments.n_max, arguments.m_max, arguments.format, arguments.method, arguments.border))


@exception_catcher(2)
def handler_value(arguments: argparse.Namespace) -> int:
    n = required('n', arguments.n)
    m = single('M', arguments.m)
    return emit(cmd_value(n, m, arguments.method, arguments.format))


@exception_catcher(3)
def handler_poly(arguments: argparse.Namespace) -> int:
    n = required('n', arguments.n)
    return emit(cmd_poly(n, arguments.format, arguments.allow_degenerate))


@exception_catcher(4)
def handler_asympt(arguments: argparse.Namespace) -> int:
    n = required('n', arguments.n)
    m = single('M', arguments.m)
    return emit(cmd_asympt(n, m, arguments.digits, arguments.format))


@exception_catcher(5)
def handler_compare(arguments: argparse.Namespace) -> int:
    n = settings.compare_n if arguments.n is None else arguments.n
    return emit(cmd_compare(n, arguments.m or list(settings.compare_m), arguments.format))


@exception_catcher(6)
def handler_selfcheck(arguments: argparse.Namespace) -> int:
    return emit(cmd_selfcheck(arguments.format))


ACTIONS: dict[str, Callable[[argparse.Namespace], int]] = {
    'table': handler_table,
    'value': handler_value,
    'poly': handler_poly,
    'asympt': handler_asympt,
    'compare': handler_compare,
    'selfcheck': handler_selfcheck,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='bell',
        description='Exact higher-order Bell numbers B_n^(m), their polynomials in m and leading-term asymptotics.',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog='''
        Some examples:
        bell table --n-max 8 --m-max 5 --format tsv
        bell value --n 3 --m 100000000
        bell poly --n 3 --format json
        bell asympt --n 3 --m 100 --digits 6
        bell compare --n 3 --m 100 --m 100000 --m 100000000
        bell selfcheck''',
    )

    parser.add_argument('command', choices=ACTIONS, help=': Choice of command.')
    parser.add_argument('--n', type=natural, help=': Choice of n.')
    parser.add_argument('--m', type=natural, action='append', help=': Choice of m (repeat it for compare).')
    parser.add_argument('--n-max', type=natural, default=settings.n_max, help=': Last column of the table.')
    parser.add_argument('--m-max', type=natural, default=settings.m_max, help=': Last row of the table.')
    parser.add_argument('--method', choices=METHODS, default=settings.method, help=': Route used for B_n^(m).')
    parser.add_argument('--format', choices=FORMATS, default=settings.output_format, help=': Output format.')
    parser.add_argument('--digits', type=natural, default=settings.digits, help=': Decimal places of the ratio.')
    parser.add_argument('--border', action='store_true', help=': Add the m = 0 row and n = 0 column to the table.')
    parser.add_argument('--allow-degenerate', action='store_true', help=': Accept n = 0 for poly.')
    parser.add_argument('-v', '--verbose', action='store_true', help=': Debug logging on stderr.')

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    arguments = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if arguments.verbose else settings.log_level,
        format=settings.log_format,
    )

    return ACTIONS[arguments.command](arguments)


def run() -> None:
    sys.exit(main())


if __name__ == '__main__':
    run()

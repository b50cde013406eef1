"""The `bell` subcommands as pure functions returning an OutputDocument."""
import logging
from typing import Callable, Sequence

from higher_bell.bell_numbers import bell_via_egf, bell_via_recursion
from higher_bell.combinatorics import require_natural
from higher_bell.errors import InvalidArgumentError
from higher_bell.polynomial import asymptotic_report, bell_polynomial, leading_coefficient, theorem_leading_coefficient
from higher_bell.rendering import FORMATS, OutputDocument, Value, decimal_expansion, render_grid, render_record
from higher_bell.selfcheck import run_selfcheck
from higher_bell.settings import settings


logger = logging.getLogger(__name__)


def bell_via_polynomial(n: int, m: int) -> int:
    return bell_polynomial(n).evaluate(m)


VALUE_METHODS: dict[str, Callable[[int, int], int]] = {
    'egf': bell_via_egf,
    'recursion': bell_via_recursion,
    'poly': bell_via_polynomial,
}
METHODS = (*VALUE_METHODS, 'auto')


def resolve_method(method: str, m: int) -> str:
    if method == 'auto':
        return 'poly' if m > settings.auto_poly_threshold else 'recursion'

    if method not in VALUE_METHODS:
        raise InvalidArgumentError(f'unknown method {method!r}, choose one of {", ".join(METHODS)}')

    return method


def compute_value(n: int, m: int, method: str = 'auto') -> int:
    require_natural('n', n)
    require_natural('m', m)
    resolved = resolve_method(method, m)
    logger.debug(f'B_{n}^({m}) via {resolved}')
    return VALUE_METHODS[resolved](n, m)


def _check_format(output_format: str) -> None:
    if output_format not in FORMATS:
        raise InvalidArgumentError(f'unknown format {output_format!r}, choose one of {", ".join(FORMATS)}')


def cmd_table(
    n_max: int,
    m_max: int,
    output_format: str = 'tsv',
    method: str = 'recursion',
    border: bool = False,
) -> OutputDocument:
    """Grid of B_n^(m), one row per m; `border` adds the m = 0 row and the n = 0 column."""
    _check_format(output_format)
    if n_max < 1 or m_max < 1:
        raise InvalidArgumentError(f'table bounds must be >= 1, got n_max={n_max}, m_max={m_max}')

    first = 0 if border else 1
    columns = [f'n={n}' for n in range(first, n_max + 1)]
    rows = [
        (str(m), [str(compute_value(n, m, method)) for n in range(first, n_max + 1)])
        for m in range(first, m_max + 1)
    ]
    return OutputDocument(output_format, render_grid('m', columns, rows, output_format))


def cmd_value(n: int, m: int, method: str = 'auto', output_format: str = 'tsv') -> OutputDocument:
    _check_format(output_format)
    resolved = resolve_method(method, m)
    value = compute_value(n, m, resolved)
    if output_format == 'tsv':
        return OutputDocument(output_format, f'{value}\n')

    record: dict[str, Value] = {'n': str(n), 'm': str(m), 'method': resolved, 'value': str(value)}
    return OutputDocument(output_format, render_record(record, output_format))


def cmd_poly(n: int, output_format: str = 'json', allow_degenerate: bool = False) -> OutputDocument:
    """Coefficients c_0..c_{n-1} next to the theorem's leading value n!/2^(n-1)."""
    _check_format(output_format)
    require_natural('n', n)
    if n == 0 and not allow_degenerate:
        raise InvalidArgumentError('poly needs n >= 1 (use --allow-degenerate for the constant B_0^(m) = 1)')

    bell = bell_polynomial(n)
    if n == 0:
        # the constant 1 is its own leading coefficient
        theorem, match = bell.poly.leading, True
    else:
        theorem = theorem_leading_coefficient(n)
        match = bell.poly.leading == theorem == leading_coefficient(n)

    record: dict[str, Value] = {
        'n': n,
        'coefficients': bell.poly.format_coefficients(),
        'leading_theorem': str(theorem),
        'match': match,
    }
    return OutputDocument(output_format, render_record(record, output_format))


def cmd_asympt(n: int, m: int, digits: int, output_format: str = 'tsv') -> OutputDocument:
    """Exact value, leading term and their ratio (exact and to `digits` places)."""
    _check_format(output_format)
    require_natural('digits', digits)
    report = asymptotic_report(n, m)
    record: dict[str, Value] = {
        'n': str(n),
        'm': str(m),
        'exact': str(report.exact),
        'leading': str(report.leading),
        'ratio': str(report.ratio),
        'ratio_decimal': decimal_expansion(report.ratio, digits),
    }
    return OutputDocument(output_format, render_record(record, output_format))


def cmd_compare(n: int, ms: Sequence[int], output_format: str = 'tsv') -> OutputDocument:
    """B_n^(m) next to (n!/2^(n-1)) m^(n-1) for several m, one column per m."""
    _check_format(output_format)
    if not ms:
        raise InvalidArgumentError('compare needs at least one m')

    reports = [asymptotic_report(n, m) for m in ms]
    rows = [
        (f'B_{n}^(m)', [str(report.exact) for report in reports]),
        (f'({n}!/2^{n - 1})m^{n - 1}', [str(report.leading) for report in reports]),
    ]
    return OutputDocument(output_format, render_grid('m', [str(m) for m in ms], rows, output_format))


def cmd_selfcheck(output_format: str = 'tsv') -> OutputDocument:
    """Run the invariant suite; exit code 1 names the first failed invariant."""
    _check_format(output_format)
    report = run_selfcheck()
    record: dict[str, Value] = {'ok': report.ok, 'passed': report.passed}
    if not report.ok:
        record['failed'] = report.failed or ''
        record['detail'] = report.detail

    return OutputDocument(output_format, render_record(record, output_format), exit_code=0 if report.ok else 1)

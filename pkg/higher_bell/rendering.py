"""Byte-stable rendering of tables and records as TSV, JSON or Markdown.

Nothing here goes through binary floating point: integers are printed in full,
rationals as reduced 'p/q' strings and decimal expansions by exact long division.
"""
from dataclasses import dataclass
from fractions import Fraction
import json
from typing import Sequence, Union


FORMATS = ('tsv', 'json', 'markdown')

Value = Union[str, int, bool, None, Sequence[str]]
Row = tuple[str, Sequence[str]]


@dataclass(frozen=True)
class OutputDocument:
    format: str
    payload: str
    exit_code: int = 0


def decimal_expansion(value: Fraction, digits: int) -> str:
    """`value` to `digits` places, round-half-even on the last digit."""
    numerator, denominator = abs(value.numerator), value.denominator
    scaled, remainder = divmod(numerator * 10**digits, denominator)
    if 2 * remainder > denominator or (2 * remainder == denominator and scaled % 2):
        scaled += 1

    sign = '-' if value < 0 and scaled else ''
    if not digits:
        return f'{sign}{scaled}'

    integer_part, fraction_part = divmod(scaled, 10**digits)
    return f'{sign}{integer_part}.{fraction_part:0{digits}d}'


def _text(value: Value) -> str:
    if isinstance(value, bool):
        return 'true' if value else 'false'

    if value is None:
        return ''

    return str(value)


def _lines(lines: Sequence[str]) -> str:
    return '\n'.join(lines) + '\n'


def _markdown_row(cells: Sequence[str]) -> str:
    return '| ' + ' | '.join(cells) + ' |'


def render_grid(corner: str, columns: Sequence[str], rows: Sequence[Row], output_format: str) -> str:
    """A labelled grid: one header row of column labels, then one row per (label, cells)."""
    if output_format == 'tsv':
        return _lines(['\t'.join([corner, *columns])] + ['\t'.join([label, *cells]) for label, cells in rows])

    if output_format == 'markdown':
        header = [_markdown_row([corner, *columns]), _markdown_row(['---'] * (len(columns) + 1))]
        return _lines(header + [_markdown_row([label, *cells]) for label, cells in rows])

    if output_format == 'json':
        document = {
            'corner': corner,
            'columns': list(columns),
            'rows': [{'label': label, 'values': list(cells)} for label, cells in rows],
        }
        return json.dumps(document, indent=2) + '\n'

    raise ValueError(f'unknown output format: {output_format!r}')


def render_record(record: dict[str, Value], output_format: str) -> str:
    """Key/value record; list values become extra tab-separated cells (TSV) or a comma list (Markdown)."""
    if output_format == 'json':
        return json.dumps(record, indent=2) + '\n'

    def cells(value: Value) -> list[str]:
        if isinstance(value, (list, tuple)):
            return [_text(item) for item in value]
        return [_text(value)]

    if output_format == 'tsv':
        return _lines(['\t'.join([key, *cells(value)]) for key, value in record.items()])

    if output_format == 'markdown':
        header = [_markdown_row(['field', 'value']), _markdown_row(['---', '---'])]
        return _lines(header + [_markdown_row([key, ', '.join(cells(value))]) for key, value in record.items()])

    raise ValueError(f'unknown output format: {output_format!r}')

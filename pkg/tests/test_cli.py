from fractions import Fraction
import json
import time

import pytest

from higher_bell.main import main


REFERENCE_GRID_TSV = (
    'm\tn=1\tn=2\tn=3\tn=4\tn=5\tn=6\tn=7\tn=8\n'
    '1\t1\t2\t5\t15\t52\t203\t877\t4140\n'
    '2\t1\t3\t12\t60\t358\t2471\t19302\t167894\n'
    '3\t1\t4\t22\t154\t1304\t12915\t146115\t1855570\n'
    '4\t1\t5\t35\t315\t3455\t44590\t660665\t11035095\n'
    '5\t1\t6\t51\t561\t7556\t120196\t2201856\t45592666\n'
)
REFERENCE_COMPARISON_TSV = (
    'm\t100\t100000\t100000000\n'
    'B_3^(m)\t15251\t15000250001\t15000000250000001\n'
    '(3!/2^2)m^2\t15000\t15000000000\t15000000000000000\n'
)


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_table_reproduces_reference_table(capsys):
    code, out = run(capsys, 'table', '--n-max', '8', '--m-max', '5', '--format', 'tsv')
    assert code == 0
    assert out == REFERENCE_GRID_TSV


def test_table_defaults_are_the_reference_bounds(capsys):
    assert run(capsys, 'table') == (0, REFERENCE_GRID_TSV)


@pytest.mark.parametrize('method', ['egf', 'recursion', 'poly', 'auto'])
def test_table_every_route_agrees(capsys, method):
    assert run(capsys, 'table', '--method', method) == (0, REFERENCE_GRID_TSV)


def test_table_cells(capsys):
    _, out = run(capsys, 'table')
    rows = [line.split('\t') for line in out.splitlines()]
    assert rows[4][6] == '44590'
    assert rows[2][1:] == ['1', '3', '12', '60', '358', '2471', '19302', '167894']


def test_table_single_cell(capsys):
    assert run(capsys, 'table', '--n-max', '1', '--m-max', '1') == (0, 'm\tn=1\n1\t1\n')


def test_table_with_border(capsys):
    _, out = run(capsys, 'table', '--n-max', '2', '--m-max', '2', '--border')
    assert out == 'm\tn=0\tn=1\tn=2\n0\t1\t1\t1\n1\t1\t1\t2\n2\t1\t1\t3\n'


def test_table_markdown(capsys):
    _, out = run(capsys, 'table', '--n-max', '2', '--m-max', '1', '--format', 'markdown')
    assert out == '| m | n=1 | n=2 |\n| --- | --- | --- |\n| 1 | 1 | 2 |\n'


def test_table_zero_bounds_is_usage_error(capsys):
    assert run(capsys, 'table', '--n-max', '0')[0] == 2


@pytest.mark.parametrize(
    'argv, expected',
    [
        (['--n', '3', '--m', '100000000'], '15000000250000001\n'),
        (['--n', '5', '--m', '5', '--method', 'egf'], '7556\n'),
        (['--n', '0', '--m', '12'], '1\n'),
        (['--n', '8', '--m', '5', '--method', 'poly'], '45592666\n'),
    ],
)
def test_value(capsys, argv, expected):
    assert run(capsys, 'value', *argv) == (0, expected)


def test_value_json_uses_strings(capsys):
    _, out = run(capsys, 'value', '--n', '3', '--m', '100000000', '--format', 'json')
    document = json.loads(out)
    assert document == {'n': '3', 'm': '100000000', 'method': 'poly', 'value': '15000000250000001'}


def test_value_unknown_method_is_usage_error():
    with pytest.raises(SystemExit) as error:
        main(['value', '--n', '3', '--m', '2', '--method', 'closed-form'])
    assert error.value.code == 2


def test_value_missing_n_is_usage_error(capsys):
    assert run(capsys, 'value', '--m', '3')[0] == 2


def test_negative_argument_is_usage_error():
    with pytest.raises(SystemExit) as error:
        main(['value', '--n', '-3', '--m', '2'])
    assert error.value.code == 2


@pytest.mark.parametrize(
    'n, coefficients, leading',
    [(3, ['1', '5/2', '3/2'], '3/2'), (1, ['1'], '1'), (5, None, '15/2')],
)
def test_poly_json(capsys, n, coefficients, leading):
    code, out = run(capsys, 'poly', '--n', str(n), '--format', 'json')
    document = json.loads(out)
    assert code == 0
    assert document['n'] == n
    assert document['leading_theorem'] == leading
    assert document['match'] is True
    assert document['coefficients'][-1] == leading
    if coefficients is not None:
        assert document['coefficients'] == coefficients


def test_poly_zero_needs_extension_flag(capsys):
    assert run(capsys, 'poly', '--n', '0')[0] == 2
    code, out = run(capsys, 'poly', '--n', '0', '--format', 'json', '--allow-degenerate')
    assert code == 0
    assert json.loads(out)['coefficients'] == ['1']


def test_poly_round_trip_against_value(capsys):
    for n in range(1, 7):
        _, out = run(capsys, 'poly', '--n', str(n), '--format', 'json')
        coefficients = [Fraction(c) for c in json.loads(out)['coefficients']]
        for m in range(n + 1):
            evaluated = sum(c * m**j for j, c in enumerate(coefficients))
            _, value = run(capsys, 'value', '--n', str(n), '--m', str(m), '--method', 'recursion')
            assert str(evaluated) + '\n' == value


def test_asympt(capsys):
    code, out = run(capsys, 'asympt', '--n', '3', '--m', '100', '--digits', '6', '--format', 'json')
    assert code == 0
    assert json.loads(out) == {
        'n': '3',
        'm': '100',
        'exact': '15251',
        'leading': '15000',
        'ratio': '15251/15000',
        'ratio_decimal': '1.016733',
    }


def test_asympt_tsv(capsys):
    _, out = run(capsys, 'asympt', '--n', '3', '--m', '100000', '--digits', '8')
    assert 'exact\t15000250001\n' in out
    assert 'leading\t15000000000\n' in out


def test_asympt_n_1_ratio_is_exactly_one(capsys):
    _, out = run(capsys, 'asympt', '--n', '1', '--m', '5', '--digits', '3')
    assert 'ratio\t1\n' in out
    assert 'ratio_decimal\t1.000\n' in out


def test_asympt_zero_m_is_usage_error(capsys):
    assert run(capsys, 'asympt', '--n', '3', '--m', '0')[0] == 2


def test_compare_reproduces_reference_comparison(capsys):
    assert run(capsys, 'compare') == (0, REFERENCE_COMPARISON_TSV)
    explicit = ['--n', '3', '--m', '100', '--m', '100000', '--m', '100000000']
    assert run(capsys, 'compare', *explicit) == (0, REFERENCE_COMPARISON_TSV)


@pytest.mark.parametrize('command, expected', [('table', REFERENCE_GRID_TSV), ('compare', REFERENCE_COMPARISON_TSV)])
def test_reference_commands_finish_within_a_second(capsys, command, expected):
    started = time.perf_counter()
    code, out = run(capsys, command)
    elapsed = time.perf_counter() - started

    assert (code, out) == (0, expected)
    assert elapsed < 1


@pytest.mark.parametrize(
    'argv',
    [
        ['table', '--format', 'json'],
        ['poly', '--n', '6', '--format', 'markdown'],
        ['asympt', '--n', '4', '--m', '12345', '--digits', '20'],
        ['compare', '--format', 'json'],
    ],
)
def test_output_is_byte_stable(capsys, argv):
    _, first = run(capsys, *argv)
    _, second = run(capsys, *argv)
    assert first == second
    assert '\r' not in first
    assert first.endswith('\n') and not first.endswith('\n\n')

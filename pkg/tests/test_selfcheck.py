import time

from higher_bell.combinatorics import StirlingTable
from higher_bell.main import main
from higher_bell.selfcheck import INVARIANTS, run_selfcheck


def test_selfcheck_passes_within_a_minute(capsys):
    started = time.perf_counter()
    code = main(['selfcheck'])
    elapsed = time.perf_counter() - started

    out = capsys.readouterr().out
    assert code == 0
    assert out.startswith('ok\ttrue\n')
    assert elapsed < 60


def test_every_invariant_is_registered_once():
    names = [name for name, _ in INVARIANTS]
    assert len(names) == len(set(names))
    assert names[0] == 'cross-method equivalence'
    assert 'dual construction' in names
    assert 'asymptotic theorem: leading coefficient' in names


def test_perturbed_stirling_recurrence_is_caught(monkeypatch, capsys):
    original = StirlingTable._next_row

    def perturbed(previous):
        row = list(original(previous))
        if len(row) > 3:
            row[2] += 1
        return tuple(row)

    monkeypatch.setattr(StirlingTable, '_next_row', staticmethod(perturbed))

    report = run_selfcheck()
    assert not report.ok
    assert report.failed == 'cross-method equivalence'

    code = main(['selfcheck', '--format', 'json'])
    assert code == 1
    assert '"failed": "cross-method equivalence"' in capsys.readouterr().out

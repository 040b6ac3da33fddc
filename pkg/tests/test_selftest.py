import pytest

from idcode import bounds, cli, selftest


def test_quick_selftest_passes(capsys):
    assert cli.main(["selftest", "--quick"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out


def test_mutated_bound_table_is_caught(capsys, monkeypatch):
    real = bounds.min_ic_odd_cycle

    def broken(k, r):
        res = real(k, r)
        if res.case == "Thm3c":
            return bounds.BoundResult(res.value + 1, res.case)
        return res

    monkeypatch.setattr(bounds, "min_ic_odd_cycle", broken)
    assert cli.main(["selftest", "--quick"]) == 1
    out = capsys.readouterr().out
    assert "FAIL  sweep matrix" in out and "Thm3c" in out


def test_crashing_check_is_reported(monkeypatch):
    def boom():
        raise RuntimeError("kaput")

    monkeypatch.setattr(selftest, "plan", lambda quick: [boom])
    (check,) = selftest.run(quick=True)
    assert not check.ok and "kaput" in check.detail


@pytest.mark.slow
def test_full_selftest_passes():
    assert all(c.ok for c in selftest.run(quick=False))

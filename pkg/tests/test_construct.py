from math import gcd

import pytest

from idcode import construct
from idcode.bounds import min_ic_cycle, min_ic_path, min_ld2_cycle
from idcode.construct import (build, build_ic_cycle, build_ic_odd_cycle, build_ic_path,
                              build_ld2_cycle, forced_completion, full_streams, parity_selection,
                              stream)
from idcode.errors import ConstructionError, InputError
from idcode.topology import Topology
from idcode.verify import check_cycle_characterization, check_path_characterization, is_r_ic, is_r_ld

import brute


def test_stream_examples():
    s = stream(21, 5, 1)
    assert (s.body, s.tail) == ((1, 6, 11, 16, 21), 5)
    s = stream(21, 5, 5)
    assert (s.body, s.tail) == ((5, 10, 15, 20), 4)
    s = stream(9, 3, 2, "path")
    assert (s.body, s.tail) == ((2, 5, 8), None)
    with pytest.raises(InputError):
        stream(9, 3, 4)


@pytest.mark.parametrize("n,s", [(21, 5), (21, 9), (23, 5), (19, 7), (30, 4), (9, 3), (7, 7)])
def test_stream_tails_lead_into_streams(n, s):
    for i in range(1, s + 1):
        st = stream(n, s, i)
        assert st.body[-1] <= n < st.body[-1] + s
        assert 1 <= st.tail <= s


def test_full_stream_examples():
    fs = full_streams(21, 9)
    assert len(fs) == 3
    assert fs[2].vertices == (3, 12, 21, 9, 18, 6, 15, 3)
    fs = full_streams(21, 5)
    assert len(fs) == 1 and len(fs[0].constraints) == 21
    fs = full_streams(9, 3)
    assert [f.vertices for f in fs] == [(1, 4, 7, 1), (2, 5, 8, 2), (3, 6, 9, 3)]


@pytest.mark.parametrize("n,s", [(21, 5), (21, 9), (23, 5), (19, 4), (17, 17), (36, 8), (11, 2)])
def test_stream_algebra(n, s):
    fs = full_streams(n, s)
    g = gcd(s, n)
    assert len(fs) == g
    assert all(len(f.vertices) == n // g + 1 and f.vertices[0] == f.vertices[-1] for f in fs)
    lefts = sorted(a for f in fs for a, _ in f.constraints)
    assert lefts == list(range(1, n + 1))
    ends = [v for f in fs for c in f.constraints for v in c]
    assert all(ends.count(v) == 2 for v in range(1, n + 1))


def test_parity_selection_examples():
    D = parity_selection(full_streams(21, 9))
    assert {12, 9, 6, 3} <= D
    assert len(parity_selection([full_streams(9, 3)[0]])) == 2
    # n = s: full stream i is (i, i) and one of i+1, i+2 is odd, so all of it is kept
    assert parity_selection(full_streams(6, 6)) == {1, 2, 3, 4, 5, 6}
    with pytest.raises(ConstructionError):
        parity_selection([construct.FullStream((1, 2, 1))])


def test_forced_completion_examples():
    D = forced_completion(23, 5, 1)
    assert len(D) == 12 and check_cycle_characterization(23, 2, D).ok
    # C_19 with r = 2 has q = 2r, which needs k+2 = 11 vertices: ten never suffice
    D = forced_completion(19, 5, 5)
    assert len(D) == 10 and not is_r_ic(Topology.cycle(19), D, 2).ok
    D = forced_completion(19, 7, 7)
    assert len(D) == 10 and is_r_ic(Topology.cycle(19), D, 3).ok
    with pytest.raises(InputError):
        forced_completion(21, 9, 1)


@pytest.mark.parametrize("n,s,a", [(23, 5, 1), (19, 5, 5), (25, 7, 3), (13, 4, 2), (31, 11, 9)])
def test_forced_completion_doubles_exactly_one_constraint(n, s, a):
    D = forced_completion(n, s, a)
    assert len(D) == (n + 1) // 2
    (fs,) = full_streams(n, s)
    hits = [(x in D) + (y in D) for x, y in fs.constraints]
    assert min(hits) == 1 and hits.count(2) == 1
    assert {a, (a - 1 + s) % n + 1} <= D


def test_build_examples():
    c = build_ic_odd_cycle(5, 2)  # k = 5 = 5*1 + 0
    assert (c.size, c.case) == (7, "Thm3b") and is_r_ic(Topology.cycle(11), c.code, 2).ok
    c = build_ic_odd_cycle(6, 2)  # k = 6 = 5*1 + 1
    assert (c.size, c.case) == (7, "Thm3c") and is_r_ic(Topology.cycle(13), c.code, 2).ok
    c = build_ic_odd_cycle(10, 4)
    assert (c.size, c.case) == (12, "Thm3a")
    c = build_ic_odd_cycle(4, 3)
    assert c.labels == [1, 2, 4, 5, 7, 8] and c.case == "Thm21"
    c = build_ic_path(12, 2)
    assert c.size == 7 and check_path_characterization(12, 2, c.code).ok
    c = build_ic_path(9, 2)
    assert c.size == 5 and is_r_ic(Topology.path(9), c.code, 2).ok


def test_ld_build_examples():
    assert build_ld2_cycle(11).labels == [1, 2, 5, 9]
    assert build_ld2_cycle(6).labels == [1, 3, 5]
    assert build_ld2_cycle(9).labels == [1, 3, 7, 8]
    assert build_ld2_cycle(12).labels == [4, 6, 10, 12]


def test_build_rejects_undefined():
    with pytest.raises(InputError):
        build_ic_odd_cycle(3, 3)
    with pytest.raises(InputError):
        build_ic_path(4, 2)
    with pytest.raises(InputError):
        build_ic_cycle(10, 1)
    with pytest.raises(InputError):
        build(Topology.path(9), 2, "ld")
    with pytest.raises(InputError):
        build_ld2_cycle(2)


@pytest.mark.parametrize("r", range(1, 7))
def test_constructions_valid_and_optimal(r):
    for n in range(2 * r + 3, 302, 2):
        c = build_ic_cycle(n, r)
        assert c.size == min_ic_cycle(n, r).value, (n, r, c.case)
        assert is_r_ic(Topology.cycle(n), c.code, r).ok
    for n in range(2 * r + 1, 302):
        c = build_ic_path(n, r)
        assert c.size == min_ic_path(n, r).value, (n, r, c.case)
        assert is_r_ic(Topology.path(n), c.code, r).ok


def test_ld_constructions_valid_and_optimal():
    for n in range(3, 400):
        c = build_ld2_cycle(n)
        assert c.size == min_ld2_cycle(n).value
        assert is_r_ld(Topology.cycle(n), c.code, 2).ok


def test_constructions_pass_independent_checker():
    for r in (1, 2, 3):
        for n in range(2 * r + 3, 60, 2):
            assert brute.is_code(n, r, True, build_ic_cycle(n, r).code)
        for n in range(2 * r + 1, 60):
            assert brute.is_code(n, r, False, build_ic_path(n, r).code)
    for n in range(3, 60):
        assert brute.is_code(n, 2, True, build_ld2_cycle(n).code, ld=True)


def test_repairs_are_recorded():
    repaired = [build_ic_path(n, 1) for n in range(3, 60)]
    repaired = [c for c in repaired if c.repaired]
    assert repaired, "the verbatim path bullets are known to need repair somewhere"
    for c in repaired:
        rec = c.deviation_record()
        assert rec["case"] == c.case and rec["code"] == c.labels and rec["deviations"]
    clean = build_ic_odd_cycle(10, 4)
    assert not clean.repaired and clean.deviation_record() is None


def test_failed_repair_raises(monkeypatch):
    from idcode import repair
    monkeypatch.setattr(repair, "repair", lambda *a, **k: (None, "disabled"))
    with pytest.raises(ConstructionError):
        for n in range(3, 60):
            build_ic_path(n, 1)

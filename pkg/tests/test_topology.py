from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from idcode.errors import InputError
from idcode.topology import (Kind, Topology, admits_r_ic, ball, ball_masks, distance,
                             from_mask, to_mask)


def test_distance_examples():
    assert distance(Topology.cycle(10), 1, 6) == 5
    assert distance(Topology.path(9), 2, 7) == 5
    assert distance(Topology.cycle(7), 1, 7) == 1


def test_ball_examples():
    assert ball(Topology.cycle(7), 1, 2) == {6, 7, 1, 2, 3}
    assert ball(Topology.path(5), 1, 2) == {1, 2, 3}
    assert ball(Topology.cycle(5), 3, 2) == {1, 2, 3, 4, 5}


def test_admits_examples():
    assert not admits_r_ic(Topology.cycle(7), 3)
    assert admits_r_ic(Topology.path(5), 2)
    assert admits_r_ic(Topology.cycle(8), 3)


@pytest.mark.parametrize("bad", [
    lambda: Topology.cycle(0),
    lambda: Topology.path(-3),
    lambda: distance(Topology.cycle(5), 0, 2),
    lambda: distance(Topology.path(5), 1, 6),
    lambda: ball(Topology.cycle(5), 1, 0),
])
def test_input_errors(bad):
    with pytest.raises(InputError):
        bad()


def test_kind_and_str():
    assert str(Topology.cycle(9)) == "C_9"
    assert str(Topology(Kind("path"), 4)) == "P_4"
    assert Topology.cycle(9).is_cycle and not Topology.path(9).is_cycle


def test_mask_roundtrip():
    assert from_mask(to_mask({1, 3, 64})) == {1, 3, 64}
    t = Topology.cycle(7)
    assert [from_mask(m) for m in ball_masks(t, 2)] == [ball(t, v, 2) for v in t.vertices]


topologies = st.builds(lambda cyc, n: Topology.cycle(n) if cyc else Topology.path(n),
                       st.booleans(), st.integers(1, 40))


@given(topologies, st.integers(1, 12), st.data())
def test_ball_symmetry_and_distance(t, r, data):
    u = data.draw(st.integers(1, t.n))
    v = data.draw(st.integers(1, t.n))
    assert distance(t, u, v) == distance(t, v, u)
    assert (distance(t, u, v) == 0) == (u == v)
    assert (v in ball(t, u, r)) == (u in ball(t, v, r))
    assert ball(t, u, r) == {y for y in t.vertices if distance(t, u, y) <= r}


@given(st.integers(1, 40), st.integers(1, 12), st.data())
def test_ball_sizes(n, r, data):
    v = data.draw(st.integers(1, n))
    assert len(ball(Topology.cycle(n), v, r)) == min(n, 2 * r + 1)
    assert len(ball(Topology.path(n), v, r)) == min(n, v + r) - max(1, v - r) + 1


@pytest.mark.parametrize("kind", ["cycle", "path"])
def test_admits_matches_pairwise_ball_comparison(kind):
    for n in range(1, 31):
        t = Topology(Kind(kind), n)
        for r in range(1, 11):
            balls = [ball(t, v, r) for v in t.vertices]
            distinct = all(a != b for a, b in combinations(balls, 2))
            assert admits_r_ic(t, r) == distinct, (t, r)

import os
import subprocess
import sys

import pytest

from idcode import kernel
from idcode.oracle import _hitting
from idcode.topology import Topology, ball_masks

compiled = pytest.mark.skipif(kernel.BACKEND != "cython", reason="compiled kernel not built")

INSTANCES = [("cycle", 9, 1, "ic"), ("cycle", 13, 2, "ic"), ("path", 11, 2, "ic"),
             ("cycle", 10, 2, "ld"), ("path", 12, 1, "ld"), ("cycle", 15, 3, "ic")]


def _args(kind, n, r, k, prune):
    t = Topology.cycle(n) if kind == "cycle" else Topology.path(n)
    return ball_masks(t, r), n, k == "ld", _hitting(t, r, k, prune)


@compiled
@pytest.mark.parametrize("inst", INSTANCES)
@pytest.mark.parametrize("prune", [True, False])
def test_backends_agree_on_search(inst, prune):
    balls, n, ld, hitting = _args(*inst, prune)
    for c in range(n + 1):
        for first in (-1, 0, 2):
            a = kernel.search(balls, n, c, ld, hitting, first, -1, backend="cython")
            b = kernel.search(balls, n, c, ld, hitting, first, -1, backend="python")
            assert a == b, (inst, c, first)


@compiled
@pytest.mark.parametrize("inst", INSTANCES[:4])
def test_backends_agree_on_enumeration(inst):
    balls, n, ld, hitting = _args(*inst, True)
    for c in range(n + 1):
        a = kernel.enumerate_all(balls, n, c, ld, hitting, backend="cython")
        b = kernel.enumerate_all(balls, n, c, ld, hitting, backend="python")
        assert list(a) == list(b)


@compiled
def test_limit_is_honoured_by_both():
    balls, n, ld, hitting = _args("cycle", 15, 1, "ic", False)
    for backend in ("cython", "python"):
        mask, explored = kernel.search(balls, n, 9, ld, hitting, -1, 50, backend=backend)
        assert mask == kernel.LIMIT_HIT and explored > 50


def test_wide_instances_fall_back_to_python():
    # 70 vertices do not fit a machine word; the dispatcher uses the Python kernel
    t = Topology.cycle(70)
    balls = ball_masks(t, 1)
    assert kernel.search(balls, 70, 1, False, [], backend="cython") == (-1, 70)


def test_empty_subset_belongs_to_no_partition():
    balls, n, ld, hitting = _args("cycle", 9, 1, "ic", False)
    assert kernel.search(balls, n, 0, ld, hitting) == (-1, 1)
    assert kernel.search(balls, n, 0, ld, hitting, first=0) == (-1, 0)


def test_pure_python_fallback_selected_by_env():
    env = dict(os.environ, IDCODE_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "from idcode import kernel; print(kernel.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"

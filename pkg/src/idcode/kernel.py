"""Selects the subset-search kernel at import time.

The compiled ``_search`` extension is used when it was built; otherwise the
pure-Python ``_search_py`` takes over. ``IDCODE_PURE_PYTHON=1`` forces the
fallback. Both expose ``search`` and ``enumerate_all`` with identical results.
"""

import os

from . import _search_py

COMPILED_MAX_N = 64

_compiled = None
if os.environ.get("IDCODE_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _search as _compiled
    except ImportError:  # extension not built
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"
LIMIT_HIT = _search_py.LIMIT_HIT


def _pick(n, backend):
    if backend == "python" or _compiled is None or n > COMPILED_MAX_N:
        return _search_py
    return _compiled


def search(balls, n, c, ld, hitting, first=-1, limit=-1, backend=None):
    if c == 0 and first >= 0:
        return -1, 0  # the empty set has no first element
    return _pick(n, backend).search(list(balls), n, c, ld, list(hitting), first, limit)


def enumerate_all(balls, n, c, ld, hitting, backend=None):
    return list(_pick(n, backend).enumerate_all(list(balls), n, c, ld, list(hitting)))

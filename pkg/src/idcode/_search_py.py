"""Pure-Python subset search kernel (fallback for the compiled ``_search``).

Both kernels walk the c-subsets of ``range(n)`` in lexicographic order and
prune with a hitting family: every mask in ``hitting`` must meet the chosen
set. A mask is tested as soon as all of its bits are decided, i.e. once the
scan has moved past its top bit. ``explored`` counts the subsets that reach
the full signature check, identically in both kernels.
"""

LIMIT_HIT = -2


def _by_top(n, hitting):
    groups = [[] for _ in range(n)]
    for h in hitting:
        groups[h.bit_length() - 1].append(h)
    return groups


def _full_ok(balls, n, S, ld):
    seen = set()
    for v in range(n):
        if ld and (S >> v) & 1:
            continue
        sig = balls[v] & S
        if not sig or sig in seen:
            return False
        seen.add(sig)
    return True


def _walk(balls, n, c, ld, hitting, first, limit, collect):
    groups = _by_top(n, hitting)
    found = []
    explored = 0

    def leaf_ok(S, start):
        for t in range(start, n):
            for h in groups[t]:
                if not h & S:
                    return False
        return True

    def rec(depth, start, S):
        # returns True to stop the whole walk
        nonlocal explored
        rem = c - depth
        if rem == 0:
            if not leaf_ok(S, start):
                return False
            explored += 1
            if 0 <= limit < explored:
                found.append(LIMIT_HIT)
                return True
            if _full_ok(balls, n, S, ld):
                found.append(S)
                return not collect
            return False
        lo, hi = start, n - rem
        if depth == 0 and first >= 0:
            lo, hi = first, min(first, hi)
        # masks lying wholly below the scan position must already be hit
        for t in range(start, lo):
            for h in groups[t]:
                if not h & S:
                    return False
        for v in range(lo, hi + 1):
            if v > lo:
                for h in groups[v - 1]:
                    if not h & S:
                        return False
            if rec(depth + 1, v + 1, S | (1 << v)):
                return True
        return False

    rec(0, 0, 0)
    return found, explored


def search(balls, n, c, ld, hitting, first=-1, limit=-1):
    """First valid c-subset mask in lexicographic order.

    Returns ``(mask, explored)``; mask is -1 when none exists and
    ``LIMIT_HIT`` when ``limit`` candidates were exceeded.
    """
    found, explored = _walk(balls, n, c, ld, hitting, first, limit, collect=False)
    return (found[0] if found else -1), explored


def enumerate_all(balls, n, c, ld, hitting):
    found, _ = _walk(balls, n, c, ld, hitting, -1, -1, collect=True)
    return found

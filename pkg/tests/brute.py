"""Plain brute force used as a second opinion. Shares no code with the package."""

from itertools import combinations


def balls(n, r, cycle):
    if cycle:
        return [frozenset((x + d) % n for d in range(-r, r + 1)) for x in range(n)]
    return [frozenset(range(max(0, x - r), min(n, x + r + 1))) for x in range(n)]


def valid(B, D, ld=False):
    seen = set()
    for x, b in enumerate(B):
        if ld and x in D:
            continue
        s = b & D
        if not s or s in seen:
            return False
        seen.add(s)
    return True


def minimum(n, r, cycle, ld=False):
    B = balls(n, r, cycle)
    for c in range(n + 1):
        for D in combinations(range(n), c):
            if valid(B, frozenset(D), ld):
                return c
    return None


def is_code(n, r, cycle, labels, ld=False):
    return valid(balls(n, r, cycle), frozenset(v - 1 for v in labels), ld)

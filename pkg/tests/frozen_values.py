"""Minimum sizes computed by the package oracle and confirmed by an
independent itertools brute force (no masks, no pruning, 0-based sets).

Keys: (n, r) for identifying codes, n for 2-locating-dominating sets.
"""

CYCLE_IC = {
    (5, 1): 3, (7, 1): 5, (9, 1): 6, (11, 1): 7, (13, 1): 8, (15, 1): 9, (17, 1): 10, (19, 1): 11,
    (7, 2): 4, (9, 2): 5, (11, 2): 7, (13, 2): 7, (15, 2): 10, (17, 2): 9, (19, 2): 11,
    (9, 3): 6, (11, 3): 6, (13, 3): 7, (15, 3): 9, (17, 3): 9, (19, 3): 10,
    (11, 4): 7, (13, 4): 7, (15, 4): 9, (17, 4): 9, (19, 4): 11,
}

PATH_IC = {
    (3, 1): 2, (4, 1): 3, (5, 1): 3, (6, 1): 4, (7, 1): 4, (8, 1): 5, (9, 1): 5, (10, 1): 6,
    (11, 1): 6, (12, 1): 7, (13, 1): 7, (14, 1): 8, (15, 1): 8, (16, 1): 9, (17, 1): 9, (18, 1): 10,
    (5, 2): 4, (6, 2): 5, (7, 2): 5, (8, 2): 5, (9, 2): 5, (10, 2): 6, (11, 2): 6, (12, 2): 7,
    (13, 2): 8, (14, 2): 8, (15, 2): 9, (16, 2): 10, (17, 2): 10, (18, 2): 10,
    (7, 3): 6, (8, 3): 7, (9, 3): 7, (10, 3): 7, (11, 3): 7, (12, 3): 7, (13, 3): 7,
    (14, 3): 8, (15, 3): 8, (16, 3): 9, (17, 3): 10, (18, 3): 11,
}

LD2_CYCLE = {
    3: 2, 4: 3, 5: 4, 6: 3, 7: 3, 8: 3, 9: 4, 10: 4, 11: 4, 12: 4,
    13: 5, 14: 5, 15: 6, 16: 6, 17: 6, 18: 6,
}

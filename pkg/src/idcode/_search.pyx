# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled subset search kernel; mirrors ``_search_py`` exactly (n <= 64)."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free

cdef enum:
    MAXN = 64

LIMIT_HIT = -2


cdef bint _full_ok(uint64_t* balls, int n, uint64_t S, bint ld) noexcept:
    cdef uint64_t sig[MAXN]
    cdef int m = 0, v, i, j
    cdef uint64_t x
    for v in range(n):
        if ld and (S >> v) & 1:
            continue
        x = balls[v] & S
        if x == 0:
            return False
        # insertion sort, rejecting duplicates on the way
        i = m
        while i > 0 and sig[i - 1] > x:
            sig[i] = sig[i - 1]
            i -= 1
        if i > 0 and sig[i - 1] == x:
            return False
        sig[i] = x
        m += 1
    return True


cdef class _Walk:
    cdef int n, c
    cdef bint ld
    cdef uint64_t balls[MAXN]
    cdef uint64_t* hm
    cdef int off[MAXN + 1]

    def __cinit__(self, balls, int n, int c, bint ld, hitting):
        cdef int i, t, k
        self.hm = NULL
        if n > MAXN:
            raise ValueError("compiled kernel supports n <= 64")
        self.n = n
        self.c = c
        self.ld = ld
        for i in range(n):
            self.balls[i] = balls[i]
        tops = sorted((int(h).bit_length() - 1, int(h)) for h in hitting)
        self.hm = <uint64_t*> malloc((len(tops) + 1) * sizeof(uint64_t))
        for i in range(n + 1):
            self.off[i] = 0
        k = 0
        for t, h in tops:
            self.hm[k] = h
            self.off[t + 1] += 1
            k += 1
        for i in range(n):
            self.off[i + 1] += self.off[i]

    def __dealloc__(self):
        if self.hm != NULL:
            free(self.hm)

    cdef inline bint _group_hit(self, int t, uint64_t S) noexcept:
        cdef int i
        for i in range(self.off[t], self.off[t + 1]):
            if (self.hm[i] & S) == 0:
                return False
        return True

    cdef tuple run(self, int first, long long limit, bint collect, list out):
        cdef int n = self.n, c = self.c
        cdef int depth, v, t, lo, hi
        cdef int pos[MAXN + 1]
        cdef int start[MAXN + 1]
        cdef int checked[MAXN + 1]
        cdef uint64_t S[MAXN + 1]
        cdef uint64_t Snew
        cdef long long explored = 0
        cdef bint ok

        if c == 0:
            ok = True
            for t in range(n):
                if not self._group_hit(t, 0):
                    ok = False
                    break
            if ok:
                explored = 1
                if 0 <= limit < explored:
                    return LIMIT_HIT, explored
                if _full_ok(self.balls, n, 0, self.ld):
                    out.append(0)
                    return 0, explored
            return -1, explored

        depth = 0
        S[0] = 0
        start[0] = 0
        checked[0] = 0
        pos[0] = (first if first >= 0 else 0) - 1
        while depth >= 0:
            v = pos[depth] + 1
            lo = start[depth]
            hi = n - (c - depth)
            if depth == 0 and first >= 0:
                lo = first
                if first < hi:
                    hi = first
            if v < lo:
                v = lo
            ok = True
            while checked[depth] < v:
                if not self._group_hit(checked[depth], S[depth]):
                    ok = False
                    break
                checked[depth] += 1
            if not ok or v > hi:
                depth -= 1
                continue
            pos[depth] = v
            Snew = S[depth] | ((<uint64_t> 1) << v)
            if depth + 1 == c:
                ok = True
                for t in range(v + 1, n):
                    if not self._group_hit(t, Snew):
                        ok = False
                        break
                if ok:
                    explored += 1
                    if 0 <= limit < explored:
                        return LIMIT_HIT, explored
                    if _full_ok(self.balls, n, Snew, self.ld):
                        out.append(Snew)
                        if not collect:
                            return Snew, explored
            else:
                depth += 1
                S[depth] = Snew
                start[depth] = v + 1
                checked[depth] = v + 1
                pos[depth] = v
        return -1, explored


def search(balls, int n, int c, bint ld, hitting, int first=-1, long long limit=-1):
    cdef list out = []
    cdef _Walk w = _Walk(balls, n, c, ld, hitting)
    mask, explored = w.run(first, limit, False, out)
    return mask, explored


def enumerate_all(balls, int n, int c, bint ld, hitting):
    cdef list out = []
    cdef _Walk w = _Walk(balls, n, c, ld, hitting)
    w.run(-1, -1, True, out)
    return out

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled census kernel: classify lattice tuples by lambda-sum.

Mirrors _census_py.count_range exactly; table entry -1 encodes the
infinite sentinel.
"""

from cpython cimport array
import array


cdef long long _ncomb(long long b, int r) noexcept nogil:
    cdef long long out = 1
    cdef int i
    for i in range(1, r + 1):
        out = out * (b + i) // i
    return out


cdef long long _rec(long long* table, int rest, long long budget,
                    long long acc, long long* hist) noexcept nogil:
    cdef long long k, v, inf = 0
    if rest == 1:
        for k in range(budget + 1):
            v = table[k]
            if v < 0:
                inf += 1
            else:
                hist[acc + v] += 1
        return inf
    for k in range(budget + 1):
        v = table[k]
        if v < 0:
            inf += _ncomb(budget - k, rest - 1)
        else:
            inf += _rec(table, rest - 1, budget - k, acc + v, hist)
    return inf


def count_range(table, int m, long long x, long long lo, long long hi):
    cdef array.array tarr = array.array('q', table)
    cdef array.array harr = array.array('q', bytes(8 * (x + 1)))
    cdef long long[::1] tv = tarr
    cdef long long[::1] hv = harr
    cdef long long inf = 0, k1, v
    if hi > x + 1:
        hi = x + 1
    if lo < 0:
        lo = 0
    with nogil:
        if m == 1:
            for k1 in range(lo, hi):
                v = tv[k1]
                if v < 0:
                    inf += 1
                else:
                    hv[v] += 1
        else:
            for k1 in range(lo, hi):
                v = tv[k1]
                if v < 0:
                    inf += _ncomb(x - k1, m - 1)
                else:
                    inf += _rec(&tv[0], m - 1, x - k1, v, &hv[0])
    return list(harr), inf

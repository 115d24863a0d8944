"""Pure-Python census kernel; same contract as the compiled one.

``table[r]`` holds the lambda value of the torus factor for exponent r,
with -1 encoding the infinite sentinel (r = 0).
"""

from __future__ import annotations


def _ncomb(b: int, r: int) -> int:
    # number of r-tuples of non-negative ints with sum <= b
    out = 1
    for i in range(1, r + 1):
        out = out * (b + i) // i
    return out


def count_range(table, m: int, x: int, lo: int, hi: int):
    """Classify every tuple in Z_{>=0}^m with sum <= x whose first coordinate
    lies in [lo, hi).  Returns (hist, inf_count) where hist[v] counts tuples
    with finite lambda-sum v."""
    hist = [0] * (x + 1)
    inf = 0
    hi = min(hi, x + 1)

    if m == 1:
        for k in range(lo, hi):
            v = table[k]
            if v < 0:
                inf += 1
            else:
                hist[v] += 1
        return hist, inf

    def rec(rest: int, budget: int, acc: int) -> int:
        bad = 0
        if rest == 1:
            for k in range(budget + 1):
                v = table[k]
                if v < 0:
                    bad += 1
                else:
                    hist[acc + v] += 1
            return bad
        for k in range(budget + 1):
            v = table[k]
            if v < 0:
                bad += _ncomb(budget - k, rest - 1)
            else:
                bad += rec(rest - 1, budget - k, acc + v)
        return bad

    for k1 in range(lo, hi):
        v = table[k1]
        if v < 0:
            inf += _ncomb(x - k1, m - 1)
        else:
            inf += rec(m - 1, x - k1, v)
    return hist, inf

"""Composition combinatorics, theoretical lambda densities, and the
empirical census over the one-generator-per-block braid family.

Two theoretical columns are carried everywhere: ``theory_sum`` (derived by
summing per-coordinate densities over compositions) and ``theory_closed``
(a printed closed form).  They disagree for some lambda >= 2; the census
arbitrates empirically instead of silently picking one.
"""

from __future__ import annotations

import hashlib
import json
import struct
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from math import comb

from . import _kernel
from .braid import FamilyTuple
from .burau import alexander_family_burau
from .errors import BudgetExceeded, NotOddPrime, VerificationFailure
from .iwasawa import (
    INFINITY,
    complete,
    invariants_exact,
    is_odd_prime,
    lambda_family_fast,
    v_p,
)

Rational = Fraction

DEFAULT_TUPLE_BUDGET = 10**8


def _require_odd_prime(p: int) -> None:
    if not is_odd_prime(p):
        raise NotOddPrime(f"{p} is not an odd prime")


# -- compositions ----------------------------------------------------------


def _p_powers_upto(limit: int, p: int) -> list[int]:
    out = []
    q = 1
    while q <= limit:
        out.append(q)
        q *= p
    return out


def count_compositions_p_power(j: int, lam: int, p: int) -> int:
    """Number of ordered length-j tuples of p-powers summing to lam,
    by dynamic programming over (length, remaining sum)."""
    _require_odd_prime(p)
    if j < 0 or lam < 0:
        raise ValueError("j and lam must be non-negative")
    powers = _p_powers_upto(lam, p)
    prev = [1] + [0] * lam
    for _ in range(j):
        cur = [0] * (lam + 1)
        for m in range(1, lam + 1):
            s = 0
            for q in powers:
                if q > m:
                    break
                s += prev[m - q]
            cur[m] = s
        prev = cur
    return prev[lam] if j > 0 else (1 if lam == 0 else 0)


def list_compositions_p_power(j: int, lam: int, p: int) -> list[tuple[int, ...]]:
    """The tuples themselves, lexicographic by exponent tuples."""
    _require_odd_prime(p)
    out: list[tuple[int, ...]] = []
    parts: list[int] = []

    def rec(rest: int, remaining: int) -> None:
        if rest == 0:
            if remaining == 0:
                out.append(tuple(parts))
            return
        q = 1
        while q <= remaining - (rest - 1):
            parts.append(q)
            rec(rest - 1, remaining - q)
            parts.pop()
            q *= p
    if j >= 1 and lam >= 1:
        rec(j, lam)
    elif j == 0 and lam == 0:
        out.append(())
    return out


def a_set_count(n: int, j: int, lam: int, p: int) -> int:
    """Size of the j-nonzero-entry slice of the length-(n-1) composition set:
    binomial(n-1, j) placements times the p-power composition count."""
    if not 1 <= j <= n - 1:
        raise ValueError("need 1 <= j <= n-1")
    return comb(n - 1, j) * count_compositions_p_power(j, lam, p)


# -- theoretical densities -------------------------------------------------


def _is_p_power(m: int, p: int) -> bool:
    if m < 1:
        return False
    while m % p == 0:
        m //= p
    return m == 1


def density_F(lam: int, p: int) -> Fraction:
    """Limiting density of torus exponents r with lambda value lam:
    1/2 at lam = 0, (1 - 1/p)/(2 lam) at p-powers, 0 elsewhere."""
    _require_odd_prime(p)
    if lam == 0:
        return Fraction(1, 2)
    if _is_p_power(lam, p):
        return Fraction(p - 1, 2 * lam * p)
    return Fraction(0)


def density_tuple(lams, p: int) -> Fraction:
    """Joint density of a per-coordinate lambda pattern: the product of the
    single-coordinate densities."""
    out = Fraction(1)
    for lam in lams:
        out *= density_F(lam, p)
        if out == 0:
            break
    return out


def _a_set(n_parts: int, lam: int, p: int):
    # compositions of lam into n_parts entries from {0} union {p-powers}
    values = [0] + _p_powers_upto(lam, p)
    parts: list[int] = []

    def rec(rest: int, remaining: int):
        if rest == 0:
            if remaining == 0:
                yield tuple(parts)
            return
        for v in values:
            if v <= remaining:
                parts.append(v)
                yield from rec(rest - 1, remaining - v)
                parts.pop()

    yield from rec(n_parts, lam)


def density_n_sum(n: int, lam: int, p: int) -> Fraction:
    """Density of lambda = lam over the n-strand family, summed over all
    admissible per-coordinate patterns (the composition route)."""
    _require_odd_prime(p)
    if n < 2 or lam < 0:
        raise ValueError("need n >= 2 and lam >= 0")
    if lam == 0:
        return Fraction(1, 2 ** (n - 1))
    return sum(
        (density_tuple(pattern, p) for pattern in _a_set(n - 1, lam, p)),
        Fraction(0),
    )


def density_n_closed_paper(n: int, lam: int, p: int) -> Fraction:
    """The printed closed form, evaluated literally:
    (1 / (2^{n-1} p^lam)) * sum_j C(n-1, j) (1 - 1/p)^j #C_{j, lam}."""
    _require_odd_prime(p)
    if n < 2 or lam < 0:
        raise ValueError("need n >= 2 and lam >= 0")
    if lam == 0:
        return Fraction(1, 2 ** (n - 1))
    total = Fraction(0)
    for j in range(1, n):
        cnt = count_compositions_p_power(j, lam, p)
        if cnt:
            total += comb(n - 1, j) * Fraction(p - 1, p) ** j * cnt
    return total / (2 ** (n - 1) * p**lam)


# -- census ----------------------------------------------------------------


def build_lambda_table(x: int, p: int) -> list[int]:
    """lambda values of torus exponents 0..x; -1 encodes the infinite case."""
    _require_odd_prime(p)
    table = [0] * (x + 1)
    if x >= 0:
        table[0] = -1
    for r in range(2, x + 1, 2):
        if r % p:
            table[r] = 1
        else:
            v = p
            rr = r // p
            while rr % p == 0:
                rr //= p
                v *= p
            table[r] = v
    return table


def _decimal12(fr: Fraction) -> str:
    with localcontext() as ctx:
        ctx.prec = 12
        return str(Decimal(fr.numerator) / Decimal(fr.denominator))


def _rational_json(fr: Fraction) -> dict:
    return {
        "num": str(fr.numerator),
        "den": str(fr.denominator),
        "decimal": _decimal12(fr),
    }


@dataclass
class CensusReport:
    n: int
    p: int
    x: int
    total: int
    buckets: dict  # finite lambda -> count, plus INFINITY -> count
    theory_sum: dict[int, Fraction] = field(default_factory=dict)
    theory_closed: dict[int, Fraction] = field(default_factory=dict)
    mode: str = "exhaustive"
    samples: int | None = None
    seed: int | None = None

    def finite_lambdas(self) -> list[int]:
        return sorted(k for k in self.buckets if k is not INFINITY)

    def inf_count(self) -> int:
        return self.buckets.get(INFINITY, 0)

    def empirical(self, lam) -> Fraction:
        return Fraction(self.buckets.get(lam, 0), self.total)

    def to_json(self) -> str:
        obj = {
            "n": self.n,
            "p": self.p,
            "x": self.x,
            "total": self.total,
            "mode": self.mode,
            "buckets": {
                ("inf" if k is INFINITY else str(k)): v
                for k, v in self.buckets.items()
            },
            "theory_sum": {str(k): _rational_json(v) for k, v in self.theory_sum.items()},
            "theory_closed": {
                str(k): _rational_json(v) for k, v in self.theory_closed.items()
            },
        }
        if self.mode == "montecarlo":
            obj["samples"] = self.samples
            obj["seed"] = self.seed
        return json.dumps(obj, sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "CensusReport":
        obj = json.loads(text)
        buckets = {
            (INFINITY if k == "inf" else int(k)): v for k, v in obj["buckets"].items()
        }
        rat = lambda d: Fraction(int(d["num"]), int(d["den"]))
        return cls(
            n=obj["n"],
            p=obj["p"],
            x=obj["x"],
            total=obj["total"],
            buckets=buckets,
            theory_sum={int(k): rat(v) for k, v in obj["theory_sum"].items()},
            theory_closed={int(k): rat(v) for k, v in obj["theory_closed"].items()},
            mode=obj["mode"],
            samples=obj.get("samples"),
            seed=obj.get("seed"),
        )


def _attach_theory(report: CensusReport) -> None:
    for lam in report.finite_lambdas():
        report.theory_sum[lam] = density_n_sum(report.n, lam, report.p)
        report.theory_closed[lam] = density_n_closed_paper(report.n, lam, report.p)


def _partition_bounds(x: int, workers: int) -> list[tuple[int, int]]:
    # contiguous first-coordinate ranges; merge order is fixed, so the
    # aggregated report is independent of the worker count
    count = x + 1
    workers = max(1, min(workers, count))
    base, extra = divmod(count, workers)
    bounds = []
    lo = 0
    for w in range(workers):
        hi = lo + base + (1 if w < extra else 0)
        bounds.append((lo, hi))
        lo = hi
    return bounds


def census_exhaustive(
    n: int,
    p: int,
    x: int,
    workers: int = 1,
    budget: int = DEFAULT_TUPLE_BUDGET,
    verify_slow: bool = False,
    verify_seed: int = 0,
) -> CensusReport:
    """Enumerate every exponent tuple with sum <= x and bucket by lambda.

    Tuples containing a zero exponent land in the infinite bucket but stay
    in the total, matching the all-lattice-points denominator.
    """
    _require_odd_prime(p)
    if n < 2 or x < 0:
        raise ValueError("need n >= 2 and x >= 0")
    m = n - 1
    total = comb(x + m, m)
    if total > budget:
        raise BudgetExceeded(
            f"{total} tuples exceed the budget of {budget}; use sampling"
        )
    table = build_lambda_table(x, p)
    bounds = _partition_bounds(x, workers)
    if len(bounds) == 1:
        results = [_kernel.count_range(table, m, x, *bounds[0])]
    else:
        with ThreadPoolExecutor(max_workers=len(bounds)) as pool:
            results = list(
                pool.map(lambda b: _kernel.count_range(table, m, x, *b), bounds)
            )
    hist = [0] * (x + 1)
    inf = 0
    for h, i in results:
        inf += i
        for idx, c in enumerate(h):
            if c:
                hist[idx] += c
    buckets = {lam: c for lam, c in enumerate(hist) if c}
    if inf:
        buckets[INFINITY] = inf
    report = CensusReport(n=n, p=p, x=x, total=total, buckets=buckets)
    _attach_theory(report)
    if verify_slow:
        _verify_subsample(report, table, verify_seed)
    return report


def _verify_subsample(report: CensusReport, table: list[int], seed: int) -> None:
    # re-run ~0.1% of tuples through the full Burau pipeline
    m = report.n - 1
    samples = max(1, report.total // 1000)
    for idx in range(samples):
        u = _uniform_index(seed, idx, report.total)
        k = _unrank(u, m, report.x)
        fast = (
            INFINITY
            if any(table[ki] < 0 for ki in k)
            else sum(table[ki] for ki in k)
        )
        t = FamilyTuple(report.n, k)
        inv = invariants_exact(complete(alexander_family_burau(t)), report.p)
        slow = inv.lam
        if fast is INFINITY:
            ok = slow is INFINITY
        else:
            ok = slow == fast and inv.mu == 0
        if not ok:
            raise VerificationFailure(
                f"fast path lambda={fast} disagrees with exact pipeline "
                f"({inv.mu}, {slow}) on tuple {k}"
            )


# -- Monte-Carlo sampling ---------------------------------------------------


def _uniform_index(seed: int, idx: int, bound: int) -> int:
    """Deterministic uniform draw from [0, bound), keyed by (seed, idx).

    Counter-based: rejection sampling on blake2b output, so samples are
    reproducible and order-independent.
    """
    if bound <= 0:
        raise ValueError("bound must be positive")
    nbytes = (bound.bit_length() + 7) // 8 + 8
    if nbytes > 64:
        raise ValueError("sampling range too large")
    space = 1 << (8 * nbytes)
    limit = space - space % bound
    ctr = 0
    while True:
        digest = hashlib.blake2b(
            struct.pack("<qqq", seed, idx, ctr), digest_size=nbytes
        ).digest()
        value = int.from_bytes(digest, "big")
        if value < limit:
            return value % bound
        ctr += 1


def _unrank(index: int, m: int, x: int) -> tuple[int, ...]:
    """Decode a lexicographic rank into the tuple of m coordinates with
    sum <= x (stars-and-bars bijection)."""
    out = []
    budget = x
    for pos in range(m):
        rem = m - pos
        if rem == 1:
            out.append(index)
            break
        total_here = comb(budget + rem, rem)

        def cumulative(v: int) -> int:
            # tuples whose first coordinate is <= v
            return total_here - comb(budget - v - 1 + rem, rem)

        lo, hi = 0, budget  # smallest v with cumulative(v) > index
        while lo < hi:
            mid = (lo + hi) // 2
            if cumulative(mid) > index:
                hi = mid
            else:
                lo = mid + 1
        v = lo
        if v:
            index -= cumulative(v - 1)
        out.append(v)
        budget -= v
    return tuple(out)


def census_montecarlo(
    n: int, p: int, x: int, samples: int, seed: int = 0
) -> CensusReport:
    """Estimate the census by uniform sampling of lattice tuples.

    Deterministic given the seed; identical parameters reproduce the report
    byte for byte.
    """
    _require_odd_prime(p)
    if n < 2 or x < 0:
        raise ValueError("need n >= 2 and x >= 0")
    if samples < 1:
        raise ValueError("need samples >= 1")
    m = n - 1
    population = comb(x + m, m)
    table = build_lambda_table(x, p)
    buckets: dict = {}
    for idx in range(samples):
        u = _uniform_index(seed, idx, population)
        k = _unrank(u, m, x)
        if any(table[ki] < 0 for ki in k):
            key = INFINITY
        else:
            key = sum(table[ki] for ki in k)
        buckets[key] = buckets.get(key, 0) + 1
    report = CensusReport(
        n=n,
        p=p,
        x=x,
        total=samples,
        buckets=buckets,
        mode="montecarlo",
        samples=samples,
        seed=seed,
    )
    _attach_theory(report)
    return report


# -- comparison table -------------------------------------------------------


def compare_report(report: CensusReport) -> list[dict]:
    """Per-lambda rows: empirical density, both theoretical columns, and the
    absolute deviations; flags which formula the data sides with."""
    rows = []
    for lam in report.finite_lambdas():
        count = report.buckets[lam]
        emp = Fraction(count, report.total)
        ts = report.theory_sum.get(lam, density_n_sum(report.n, lam, report.p))
        tc = report.theory_closed.get(
            lam, density_n_closed_paper(report.n, lam, report.p)
        )
        dev_sum = abs(emp - ts)
        dev_closed = abs(emp - tc)
        if dev_sum < dev_closed:
            closer = "sum"
        elif dev_closed < dev_sum:
            closer = "closed"
        else:
            closer = "tie"
        rows.append(
            {
                "lambda": lam,
                "count": count,
                "empirical": emp,
                "theory_sum": ts,
                "theory_closed": tc,
                "dev_sum": dev_sum,
                "dev_closed": dev_closed,
                "formulas_disagree": ts != tc,
                "closer": closer,
            }
        )
    inf = report.inf_count()
    if inf:
        rows.append(
            {
                "lambda": INFINITY,
                "count": inf,
                "empirical": Fraction(inf, report.total),
                "theory_sum": None,
                "theory_closed": None,
                "dev_sum": None,
                "dev_closed": None,
                "formulas_disagree": False,
                "closer": None,
            }
        )
    return rows


def render_rows_csv(rows: list[dict]) -> str:
    def cell(v):
        if v is None:
            return ""
        if v is INFINITY:
            return "inf"
        if isinstance(v, Fraction):
            return f"{v.numerator}/{v.denominator}"
        return str(v)

    lines = ["lambda,count,empirical,theory_sum,theory_closed,dev_sum,dev_closed"]
    for r in rows:
        lines.append(
            ",".join(
                cell(r[c])
                for c in (
                    "lambda",
                    "count",
                    "empirical",
                    "theory_sum",
                    "theory_closed",
                    "dev_sum",
                    "dev_closed",
                )
            )
        )
    return "\n".join(lines) + "\n"


def render_rows_text(rows: list[dict]) -> str:
    def fmt(v):
        if v is None:
            return "-"
        if v is INFINITY:
            return "inf"
        if isinstance(v, Fraction):
            return f"{v.numerator}/{v.denominator} ({_decimal12(v)})"
        return str(v)

    lines = []
    header = f"{'lambda':>8} {'count':>12} {'empirical':>32} {'theory_sum':>28} {'theory_closed':>28} {'closer':>8}"
    lines.append(header)
    for r in rows:
        lines.append(
            f"{fmt(r['lambda']):>8} {r['count']:>12} {fmt(r['empirical']):>32} "
            f"{fmt(r['theory_sum']):>28} {fmt(r['theory_closed']):>28} "
            f"{fmt(r['closer']):>8}"
        )
    disagree = [r for r in rows if r["formulas_disagree"]]
    if disagree:
        lams = ", ".join(str(r["lambda"]) for r in disagree)
        lines.append(
            f"note: the two theoretical formulas disagree at lambda = {lams}; "
            "see the 'closer' column for which one the data supports"
        )
    return "\n".join(lines) + "\n"

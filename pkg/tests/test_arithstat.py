import itertools
import math
import random
from fractions import Fraction

import pytest

from braidstat import _census_py, _kernel
from braidstat.arithstat import (
    CensusReport,
    _uniform_index,
    _unrank,
    a_set_count,
    build_lambda_table,
    census_exhaustive,
    census_montecarlo,
    compare_report,
    count_compositions_p_power,
    density_F,
    density_n_closed_paper,
    density_n_sum,
    density_tuple,
    list_compositions_p_power,
    render_rows_csv,
    render_rows_text,
)
from braidstat.errors import BudgetExceeded, NotOddPrime
from braidstat.iwasawa import INFINITY


def brute_force_compositions(j, lam, p):
    # independent oracle: enumerate compositions of lam into j positive
    # parts recursively, keeping only all-p-power prefixes
    def is_power(m):
        while m % p == 0:
            m //= p
        return m == 1

    def rec(rest, remaining):
        if rest == 0:
            return 1 if remaining == 0 else 0
        return sum(
            rec(rest - 1, remaining - q)
            for q in range(1, remaining - rest + 2)
            if is_power(q)
        )

    return rec(j, lam)


class TestCompositions:
    def test_worked_example(self):
        assert count_compositions_p_power(3, 31, 5) == 6
        assert count_compositions_p_power(7, 31, 5) == 14

    def test_single_part(self):
        assert count_compositions_p_power(1, 25, 5) == 1
        assert count_compositions_p_power(1, 2, 3) == 0

    def test_dp_matches_brute_force(self):
        for p in (3, 5):
            for j in range(0, 7):
                for lam in range(0, 41):
                    assert count_compositions_p_power(j, lam, p) == (
                        brute_force_compositions(j, lam, p)
                    ), (j, lam, p)

    def test_list_matches_count(self):
        for p in (3, 5):
            for j in range(1, 5):
                for lam in range(1, 30):
                    items = list_compositions_p_power(j, lam, p)
                    assert len(items) == count_compositions_p_power(j, lam, p)
                    for c in items:
                        assert len(c) == j and sum(c) == lam
                    assert items == sorted(items)

    def test_list_example(self):
        assert list_compositions_p_power(3, 31, 5) == [
            (1, 5, 25),
            (1, 25, 5),
            (5, 1, 25),
            (5, 25, 1),
            (25, 1, 5),
            (25, 5, 1),
        ]

    def test_requires_odd_prime(self):
        with pytest.raises(NotOddPrime):
            count_compositions_p_power(2, 4, 2)


class TestASetCount:
    def test_worked_example(self):
        assert a_set_count(8, 3, 31, 5) == 35 * 6
        assert a_set_count(8, 7, 31, 5) == 14

    def test_non_power(self):
        assert a_set_count(3, 1, 2, 3) == 0

    def test_brute_force(self):
        # direct enumeration of length-(n-1) tuples from {0} union p-powers
        n, lam, p = 4, 10, 3
        values = [0, 1, 3, 9]
        for j in range(1, n):
            expect = sum(
                1
                for t in itertools.product(values, repeat=n - 1)
                if sum(t) == lam and sum(1 for v in t if v) == j
            )
            assert a_set_count(n, j, lam, p) == expect


class TestDensityF:
    def test_values(self):
        assert density_F(0, 3) == Fraction(1, 2)
        assert density_F(3, 3) == Fraction(1, 9)
        assert density_F(2, 3) == 0
        assert density_F(1, 5) == Fraction(2, 5)

    def test_tuple_product(self):
        assert density_tuple((1, 1), 3) == Fraction(1, 9)
        assert density_tuple((0, 0, 0), 5) == Fraction(1, 8)
        assert density_tuple((2, 1), 3) == 0

    def test_mass_sums_to_one(self):
        # 1/2 + sum over p-powers is a geometric series with total 1/2
        for p in (3, 5, 7):
            powers = []
            q = 1
            while q < 10**6:
                powers.append(q)
                q *= p
            partial = density_F(0, p) + sum(density_F(q, p) for q in powers)
            tail = Fraction(1, 2 * powers[-1] * p)
            assert partial + tail == 1


class TestDensityN:
    def test_sum_examples(self):
        assert density_n_sum(2, 0, 3) == Fraction(1, 2)
        assert density_n_sum(3, 1, 3) == Fraction(1, 3)
        assert density_n_sum(3, 2, 3) == Fraction(1, 9)

    def test_closed_examples(self):
        assert density_n_closed_paper(3, 2, 3) == Fraction(1, 81)
        assert density_n_closed_paper(2, 1, 3) == Fraction(1, 9)
        assert density_n_closed_paper(2, 0, 3) == Fraction(1, 2)

    def test_n2_collapses_to_density_F(self):
        for lam in range(0, 50):
            assert density_n_sum(2, lam, 3) == density_F(lam, 3)
            assert density_n_sum(2, lam, 5) == density_F(lam, 5)

    def test_formulas_agree_at_zero(self):
        for n in range(2, 6):
            for p in (3, 5):
                assert density_n_sum(n, 0, p) == density_n_closed_paper(n, 0, p)

    def test_formulas_disagree_for_positive_lambda(self):
        # the closed form carries a 1/p^lambda prefactor where the sum route
        # has 1/(product of parts); they differ whenever those differ
        assert density_n_sum(2, 1, 3) == Fraction(1, 3)
        assert density_n_closed_paper(2, 1, 3) == Fraction(1, 9)
        assert density_n_sum(3, 2, 3) != density_n_closed_paper(3, 2, 3)

    def test_partial_sums_converge_to_one(self):
        # nondecreasing, bounded by 1, and the deficit is controlled by the
        # per-coordinate tail beyond the largest p-power <= L (union bound)
        L = 10**4
        p = 3
        powers = [q for q in (3**i for i in range(15)) if q <= L]
        support = {0}
        for _ in range(3):
            support = {a + b for a in support for b in [0] + powers if a + b <= L}
        for n in (2, 3, 4):
            total = Fraction(0)
            prev = Fraction(0)
            for lam in sorted(support):
                d = density_n_sum(n, lam, p)
                assert d >= 0
                total += d
                assert total >= prev and total <= 1
                prev = total
            # a missed pattern has total > L, hence some coordinate
            # exceeding L/(n-1); union-bound the deficit by that tail
            threshold = L // (n - 1)
            tail_F = Fraction(1, 2) - sum(
                density_F(q, p) for q in powers if q <= threshold
            )
            assert 1 - total <= (n - 1) * tail_F
        # off-support densities vanish
        rng = random.Random(61)
        off = [lam for lam in rng.sample(range(L), 50) if lam not in support]
        for lam in off:
            assert density_n_sum(4, lam, p) == 0


class TestLambdaTable:
    def test_values(self):
        table = build_lambda_table(12, 3)
        assert table[0] == -1
        assert [table[r] for r in range(1, 13)] == [
            0, 1, 0, 1, 0, 3, 0, 1, 0, 1, 0, 3,
        ]


class TestKernels:
    def test_pure_matches_selected_backend(self):
        rng = random.Random(67)
        for _ in range(30):
            x = rng.randint(0, 40)
            m = rng.randint(1, 4)
            table = build_lambda_table(x, rng.choice([3, 5]))
            lo = rng.randint(0, x)
            hi = rng.randint(lo, x + 1)
            assert _kernel.count_range(table, m, x, lo, hi) == (
                _census_py.count_range(table, m, x, lo, hi)
            )

    def test_pure_against_direct_enumeration(self):
        table = build_lambda_table(8, 3)
        m = 2
        hist = [0] * 9
        inf = 0
        for k in itertools.product(range(9), repeat=m):
            if sum(k) > 8:
                continue
            if any(table[ki] < 0 for ki in k):
                inf += 1
            else:
                hist[sum(table[ki] for ki in k)] += 1
        assert _census_py.count_range(table, m, 8, 0, 9) == (hist, inf)


class TestCensusExhaustive:
    def test_n2_example(self):
        report = census_exhaustive(2, 3, 12)
        assert report.total == 13
        assert report.buckets == {0: 6, 1: 4, 3: 2, INFINITY: 1}

    def test_x_zero(self):
        report = census_exhaustive(2, 3, 0)
        assert report.total == 1
        assert report.buckets == {INFINITY: 1}
        rows = compare_report(report)
        assert len(rows) == 1 and rows[0]["lambda"] is INFINITY

    def test_simplex_count(self):
        report = census_exhaustive(3, 3, 2)
        assert report.total == 6
        assert sum(report.buckets.values()) == report.total

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            census_exhaustive(4, 3, 1000, budget=10**6)

    def test_worker_independence(self):
        base = census_exhaustive(3, 3, 50, workers=1).to_json()
        for w in (2, 3, 8):
            assert census_exhaustive(3, 3, 50, workers=w).to_json() == base

    def test_verify_slow(self):
        census_exhaustive(3, 3, 30, verify_slow=True)

    def test_lambdas_are_p_power_sums(self):
        report = census_exhaustive(4, 3, 40)
        reachable = {0}
        powers = [1, 3, 9, 27]
        for _ in range(3):
            reachable = {
                a + b for a in reachable for b in [0] + powers if a + b <= 120
            }
        for lam in report.finite_lambdas():
            assert lam in reachable

    def test_matches_direct_classification(self):
        from braidstat.iwasawa import lambda_family_fast
        from braidstat.braid import FamilyTuple

        report = census_exhaustive(3, 5, 15)
        buckets: dict = {}
        for k in itertools.product(range(16), repeat=2):
            if sum(k) > 15:
                continue
            key = lambda_family_fast(FamilyTuple(3, k), 5)
            buckets[key] = buckets.get(key, 0) + 1
        assert report.buckets == buckets


class TestUnrank:
    def test_bijection(self):
        for m, x in ((1, 9), (2, 7), (3, 5)):
            total = math.comb(x + m, m)
            seen = set()
            for idx in range(total):
                k = _unrank(idx, m, x)
                assert len(k) == m and sum(k) <= x
                seen.add(k)
            assert len(seen) == total

    def test_uniform_index_deterministic(self):
        assert _uniform_index(0, 5, 1000) == _uniform_index(0, 5, 1000)
        values = {_uniform_index(0, i, 10) for i in range(200)}
        assert values == set(range(10))


class TestCensusMonteCarlo:
    def test_deterministic(self):
        a = census_montecarlo(2, 3, 12, 500, seed=7)
        b = census_montecarlo(2, 3, 12, 500, seed=7)
        assert a.to_json() == b.to_json()

    def test_seed_changes_sample(self):
        a = census_montecarlo(2, 3, 12, 500, seed=1)
        b = census_montecarlo(2, 3, 12, 500, seed=2)
        assert a.buckets != b.buckets

    def test_three_sigma_vs_exhaustive(self):
        exact = census_exhaustive(2, 3, 12)
        samples = 13 * 10**4
        mc = census_montecarlo(2, 3, 12, samples, seed=0)
        for lam, count in exact.buckets.items():
            f = Fraction(count, exact.total)
            sigma = math.sqrt(float(f) * (1 - float(f)) / samples)
            emp = mc.buckets.get(lam, 0) / samples
            assert abs(emp - float(f)) <= 3 * sigma, lam


class TestReportSerialization:
    def test_json_round_trip(self):
        report = census_exhaustive(3, 3, 20)
        text = report.to_json()
        again = CensusReport.from_json(text)
        assert again.to_json() == text
        assert again.buckets == report.buckets

    def test_montecarlo_round_trip(self):
        report = census_montecarlo(2, 3, 12, 100, seed=3)
        text = report.to_json()
        assert CensusReport.from_json(text).to_json() == text

    def test_csv_and_text(self):
        report = census_exhaustive(3, 3, 20)
        rows = compare_report(report)
        csv = render_rows_csv(rows)
        header = csv.splitlines()[0]
        assert header == (
            "lambda,count,empirical,theory_sum,theory_closed,dev_sum,dev_closed"
        )
        assert len(csv.splitlines()) == len(rows) + 1
        text = render_rows_text(rows)
        assert "closer" in text
        # the two theory columns disagree at lambda = 2, and the report says so
        assert "disagree" in text

    def test_compare_rows(self):
        report = census_exhaustive(3, 3, 3000 // 10)
        rows = {r["lambda"]: r for r in compare_report(report)}
        assert rows[0]["theory_sum"] == Fraction(1, 4)
        assert rows[2]["theory_sum"] == Fraction(1, 9)
        assert rows[2]["theory_closed"] == Fraction(1, 81)
        assert rows[2]["formulas_disagree"]

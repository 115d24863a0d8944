import itertools
import random

import pytest

from braidstat.braid import BraidWord, FamilyTuple, family_word
from braidstat.burau import (
    alexander_closed_braid,
    alexander_family_burau,
    alexander_family_product,
    burau_generator,
    burau_image,
    reduced_burau_generator,
    torus_f,
)
from braidstat.errors import IndexOutOfRange
from braidstat.laurent import ONE, ZERO, LaurentMatrix, LaurentPoly


def lp(low, *coeffs):
    return LaurentPoly(low, coeffs)


def const_mat(rows):
    return LaurentMatrix.from_rows(
        [[c if isinstance(c, LaurentPoly) else lp(0, c) for c in row] for row in rows]
    )


T = lp(1, 1)
MT = lp(1, -1)
OMT = lp(0, 1, -1)


class TestGenerators:
    def test_unreduced_u1(self):
        assert burau_generator(3, 1) == const_mat(
            [[OMT, T, 0], [1, 0, 0], [0, 0, 1]]
        )

    def test_unreduced_u2(self):
        assert burau_generator(3, 2) == const_mat(
            [[1, 0, 0], [0, OMT, T], [0, 1, 0]]
        )

    def test_unreduced_inverse(self):
        assert burau_generator(2, 1, inverse=True) == const_mat(
            [[0, 1], [lp(-1, 1), lp(-1, -1, 1)]]
        )

    def test_reduced_n2(self):
        assert reduced_burau_generator(2, 1) == const_mat([[MT]])

    def test_reduced_first(self):
        assert reduced_burau_generator(4, 1) == const_mat(
            [[MT, 0, 0], [1, 1, 0], [0, 0, 1]]
        )

    def test_reduced_last(self):
        assert reduced_burau_generator(4, 3) == const_mat(
            [[1, 0, 0], [0, 1, T], [0, 0, MT]]
        )

    def test_reduced_middle(self):
        assert reduced_burau_generator(4, 2) == const_mat(
            [[1, T, 0], [0, MT, 0], [0, 1, 1]]
        )

    def test_index_validation(self):
        with pytest.raises(IndexOutOfRange):
            burau_generator(3, 3)
        with pytest.raises(IndexOutOfRange):
            reduced_burau_generator(3, 0)

    def test_inverses_multiply_to_identity(self):
        for n in range(2, 7):
            for i in range(1, n):
                for gen in (burau_generator, reduced_burau_generator):
                    g = gen(n, i)
                    assert g * gen(n, i, inverse=True) == LaurentMatrix.identity(g.dim)


def braid_relations_hold(gen, n):
    for i in range(1, n):
        for j in range(i + 2, n):
            assert gen(n, i) * gen(n, j) == gen(n, j) * gen(n, i)
    for i in range(1, n - 1):
        a, b = gen(n, i), gen(n, i + 1)
        assert a * b * a == b * a * b


class TestBraidRelations:
    def test_unreduced(self):
        for n in range(2, 7):
            braid_relations_hold(burau_generator, n)

    def test_reduced(self):
        for n in range(2, 7):
            braid_relations_hold(reduced_burau_generator, n)


class TestImage:
    def test_cube_in_b2(self):
        m = burau_image(BraidWord(2, (1, 1, 1)), reduced=True)
        assert m.entries[0][0] == lp(3, -1)

    def test_empty_word(self):
        assert burau_image(BraidWord(3, ()), reduced=True) == LaurentMatrix.identity(2)

    def test_inverse_cancellation(self):
        assert burau_image(BraidWord(3, (1, -1)), reduced=True) == (
            LaurentMatrix.identity(2)
        )

    def test_matches_plain_matrix_product(self):
        rng = random.Random(41)
        for _ in range(50):
            n = rng.randint(2, 5)
            letters = tuple(
                rng.choice([-1, 1]) * rng.randint(1, n - 1)
                for _ in range(rng.randint(0, 8))
            )
            b = BraidWord(n, letters)
            for reduced, gen in (
                (True, reduced_burau_generator),
                (False, burau_generator),
            ):
                expect = LaurentMatrix.identity(n - 1 if reduced else n)
                for g in letters:
                    expect = expect * gen(n, abs(g), g < 0)
                assert burau_image(b, reduced=reduced) == expect


class TestAlexander:
    def test_trefoil(self):
        assert alexander_closed_braid(BraidWord(2, (1, 1, 1))) == lp(0, 1, -1, 1)

    def test_hopf_link(self):
        assert alexander_closed_braid(BraidWord(2, (1, 1))) == lp(0, 1, -1)

    def test_unlink(self):
        assert alexander_closed_braid(BraidWord(2, ())) == ZERO

    def test_mirror_invariance_up_to_unit(self):
        # reversing all crossings preserves the canonical form here
        assert alexander_closed_braid(BraidWord(2, (-1, -1, -1))) == lp(0, 1, -1, 1)


class TestTorusF:
    def test_values(self):
        assert torus_f(1) == ONE
        assert torus_f(3) == lp(0, 1, -1, 1)
        assert torus_f(0) == ZERO

    def test_closed_form(self):
        one_plus_t = lp(0, 1, 1)
        for r in range(1, 40):
            sgn = -1 if r % 2 else 1
            num = lp(0, 1) - LaurentPoly(r, (sgn,))
            assert torus_f(r) * one_plus_t == num

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            torus_f(-1)


class TestFamilyProduct:
    def test_f2_times_f3(self):
        assert alexander_family_product(FamilyTuple(3, (2, 3))) == lp(
            0, 1, -2, 2, -1
        )

    def test_single_factor(self):
        assert alexander_family_product(FamilyTuple(2, (3,))) == lp(0, 1, -1, 1)

    def test_zero_entry(self):
        assert alexander_family_product(FamilyTuple(3, (0, 5))) == ZERO


class TestOracleEquivalence:
    def test_small_grid(self):
        for n in range(2, 5):
            for k in itertools.product(range(1, 4), repeat=n - 1):
                t = FamilyTuple(n, k)
                assert alexander_family_burau(t) == alexander_family_product(t)

    def test_zero_entries_give_zero(self):
        for k in ((0,), (0, 2), (3, 0), (1, 0, 2)):
            t = FamilyTuple.from_exponents(k)
            assert alexander_family_burau(t) == ZERO


class TestDegreeLaw:
    def test_degree_is_sum_minus_n_plus_1(self):
        for n in range(2, 5):
            for k in itertools.product(range(1, 5), repeat=n - 1):
                delta = alexander_family_product(FamilyTuple(n, k))
                assert delta.degree == sum(k) - n + 1


class TestInjectivity:
    def test_unreduced_images_distinct(self):
        for n in range(2, 5):
            seen = {}
            for k in itertools.product(range(5), repeat=n - 1):
                m = burau_image(family_word(FamilyTuple(n, k)), reduced=False)
                assert m not in seen, (k, seen[m])
                seen[m] = k


class TestRelationInvariance:
    def test_commutation_rewrite(self):
        rng = random.Random(43)
        for _ in range(30):
            n = rng.randint(4, 6)
            u = [rng.randint(1, n - 1) for _ in range(rng.randint(0, 5))]
            v = [rng.randint(1, n - 1) for _ in range(rng.randint(0, 5))]
            i = rng.randint(1, n - 3)
            j = rng.randint(i + 2, n - 1)
            w1 = BraidWord(n, tuple(u + [i, j] + v))
            w2 = BraidWord(n, tuple(u + [j, i] + v))
            assert alexander_closed_braid(w1) == alexander_closed_braid(w2)

    def test_yang_baxter_rewrite(self):
        rng = random.Random(47)
        for _ in range(30):
            n = rng.randint(3, 6)
            u = [rng.randint(1, n - 1) for _ in range(rng.randint(0, 5))]
            v = [rng.randint(1, n - 1) for _ in range(rng.randint(0, 5))]
            i = rng.randint(1, n - 2)
            w1 = BraidWord(n, tuple(u + [i, i + 1, i] + v))
            w2 = BraidWord(n, tuple(u + [i + 1, i, i + 1] + v))
            assert alexander_closed_braid(w1) == alexander_closed_braid(w2)

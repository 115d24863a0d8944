"""Cross-check suites: independent routes to the same values, runnable from
the CLI (`braidstat verify <suite>`) and reused by the test suite."""

from __future__ import annotations

import random
from itertools import product

from .braid import FamilyTuple, family_word
from .burau import (
    alexander_closed_braid,
    alexander_family_product,
    burau_generator,
    burau_image,
    reduced_burau_generator,
)
from .iwasawa import (
    complete,
    completed_torus_f,
    invariants_exact,
    lambda_F_fast,
)
from .burau import torus_f


def suite_braid_relations(max_n: int = 6) -> tuple[int, list[str]]:
    """Both Burau representations satisfy the braid relations exactly."""
    checked = 0
    failures: list[str] = []
    for n in range(2, max_n + 1):
        for gen in (burau_generator, reduced_burau_generator):
            name = gen.__name__
            for i in range(1, n):
                # generator times its inverse
                if gen(n, i) * gen(n, i, True) != _identity_like(gen(n, i)):
                    failures.append(f"{name}: sigma_{i} inverse fails at n={n}")
                checked += 1
            for i, j in product(range(1, n), repeat=2):
                if abs(i - j) >= 2:
                    if gen(n, i) * gen(n, j) != gen(n, j) * gen(n, i):
                        failures.append(f"{name}: far commutation {i},{j} fails at n={n}")
                    checked += 1
            for i in range(1, n - 1):
                lhs = gen(n, i) * gen(n, i + 1) * gen(n, i)
                rhs = gen(n, i + 1) * gen(n, i) * gen(n, i + 1)
                if lhs != rhs:
                    failures.append(f"{name}: braid relation {i} fails at n={n}")
                checked += 1
    return checked, failures


def _identity_like(m):
    from .laurent import LaurentMatrix

    return LaurentMatrix.identity(m.dim)


def suite_burau_vs_product(
    grid_max_n: int = 5,
    grid_max_k: int = 6,
    random_tuples: int = 500,
    random_max_n: int = 6,
    random_max_k: int = 12,
    seed: int = 12345,
) -> tuple[int, list[str]]:
    """Burau-route Alexander polynomial equals the torus-factor product,
    exhaustively on a small grid plus random larger tuples."""
    checked = 0
    failures: list[str] = []

    def check(t: FamilyTuple) -> None:
        nonlocal checked
        checked += 1
        via_burau = alexander_closed_braid(family_word(t))
        via_product = alexander_family_product(t)
        if via_burau != via_product:
            failures.append(f"mismatch at {t}: {via_burau} != {via_product}")

    for n in range(2, grid_max_n + 1):
        for k in product(range(1, grid_max_k + 1), repeat=n - 1):
            check(FamilyTuple(n, k))
    rng = random.Random(seed)
    for _ in range(random_tuples):
        n = rng.randint(2, random_max_n)
        k = tuple(rng.randint(1, random_max_k) for _ in range(n - 1))
        check(FamilyTuple(n, k))
    return checked, failures


def suite_lemma_lambda(
    max_r: int = 2000, primes: tuple[int, ...] = (3, 5, 7)
) -> tuple[int, list[str]]:
    """Closed-form lambda of the torus factors vs the exact pipeline."""
    checked = 0
    failures: list[str] = []
    # the O(r) completed-polynomial construction agrees with the generic
    # substitution on a prefix, then carries the full sweep
    for r in range(0, 201):
        checked += 1
        if completed_torus_f(r) != complete(torus_f(r)):
            failures.append(f"completed_torus_f({r}) != complete(torus_f({r}))")
    for r in range(1, max_r + 1):
        fhat = completed_torus_f(r)
        for p in primes:
            checked += 1
            exact = invariants_exact(fhat, p)
            if exact.mu != 0 or exact.lam != lambda_F_fast(r, p):
                failures.append(
                    f"r={r}, p={p}: exact ({exact.mu}, {exact.lam}) vs "
                    f"fast {lambda_F_fast(r, p)}"
                )
    return checked, failures


SUITES = {
    "braid-relations": suite_braid_relations,
    "burau-vs-product": suite_burau_vs_product,
    "lemma-lambda": suite_lemma_lambda,
}


def run_suite(name: str) -> tuple[int, list[str]]:
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name]()

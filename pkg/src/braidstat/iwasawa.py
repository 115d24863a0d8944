"""Completed Alexander polynomials and the mu/lambda invariants at an odd
prime, with a modular fast path and closed-form shortcuts for the braid
family handled by this package."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .braid import BraidWord, FamilyTuple
from .burau import alexander_closed_braid, torus_f
from .errors import (
    BudgetExceeded,
    InfiniteInvariants,
    NotAPolynomial,
    NotOddPrime,
)
from .laurent import ZERO, LaurentPoly


class _Infinity:
    """Distinguished sentinel for the infinite mu/lambda case (zero polynomial)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"


INFINITY = _Infinity()


def is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _require_odd_prime(p: int) -> None:
    if not is_odd_prime(p):
        raise NotOddPrime(f"{p} is not an odd prime")


def v_p(m: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if m == 0:
        raise ValueError("v_p(0) is infinite")
    v = 0
    while m % p == 0:
        m //= p
        v += 1
    return v


@dataclass(frozen=True)
class IwasawaInvariants:
    p: int
    mu: int | _Infinity
    lam: int | _Infinity

    def __post_init__(self):
        _require_odd_prime(self.p)
        if (self.mu is INFINITY) != (self.lam is INFINITY):
            raise ValueError("mu and lambda must be infinite together")

    def is_infinite(self) -> bool:
        return self.mu is INFINITY

    def to_json_dict(self) -> dict:
        return {
            "p": self.p,
            "mu": "inf" if self.mu is INFINITY else self.mu,
            "lambda": "inf" if self.lam is INFINITY else self.lam,
        }


def complete(delta: LaurentPoly) -> LaurentPoly:
    """Completed polynomial: canonical unit normalization, then t -> 1+T."""
    return delta.normalize_unit().substitute_1plusT()


def invariants_exact(fhat: LaurentPoly, p: int) -> IwasawaInvariants:
    """mu = min coefficient valuation, lambda = first index attaining it."""
    _require_odd_prime(p)
    if fhat.is_zero():
        return IwasawaInvariants(p, INFINITY, INFINITY)
    if fhat.low < 0:
        raise NotAPolynomial("expected a polynomial in T (low >= 0)")
    mu = None
    lam = None
    for i, c in enumerate(fhat.coeffs):
        if c == 0:
            continue
        v = v_p(c, p)
        if mu is None or v < mu:
            mu = v
            lam = fhat.low + i
            if mu == 0:
                break
    return IwasawaInvariants(p, mu, lam)


@lru_cache(maxsize=512)
def completed_torus_f(r: int) -> LaurentPoly:
    """Exact completed torus polynomial (1 - (-1)^r (1+T)^r) / (2+T).

    Equal to complete(torus_f(r)), built in O(r) big-integer steps from the
    binomial row instead of the O(r^2) generic substitution.
    """
    if r < 0:
        raise ValueError("r must be non-negative")
    if r == 0:
        return ZERO
    row = [1] * (r + 1)
    c = 1
    for i in range(1, r + 1):
        c = c * (r - i + 1) // i
        row[i] = c
    sgn = -1 if r % 2 else 1
    h = [1 - sgn * row[0]] + [-sgn * row[i] for i in range(1, r + 1)]
    q: list[int] = []
    prev = 0
    for i in range(r):
        num = h[i] - prev
        if num % 2:
            raise AssertionError("division by (2+T) not exact")
        prev = num // 2
        q.append(prev)
    if q[-1] != h[r]:
        raise AssertionError("division by (2+T) left a remainder")
    return LaurentPoly(0, q)


def lambda_F_fast(r: int, p: int) -> int | _Infinity:
    """Lambda of the completed torus polynomial: 0 for odd r, p^{v_p(r)} for
    even r > 0, infinite for r = 0."""
    _require_odd_prime(p)
    if r < 0:
        raise ValueError("r must be non-negative")
    if r == 0:
        return INFINITY
    if r % 2:
        return 0
    return p ** v_p(r, p)


def lambda_family_fast(t: FamilyTuple, p: int) -> int | _Infinity:
    """Lambda of the family braid: the sum of the per-exponent values."""
    _require_odd_prime(p)
    total = 0
    for ki in t.k:
        term = lambda_F_fast(ki, p)
        if term is INFINITY:
            return INFINITY
        total += term
    return total


def family_invariants_fast(t: FamilyTuple, p: int) -> IwasawaInvariants:
    """(mu, lambda) for a family tuple through the closed-form path."""
    lam = lambda_family_fast(t, p)
    if lam is INFINITY:
        return IwasawaInvariants(p, INFINITY, INFINITY)
    return IwasawaInvariants(p, 0, lam)


def e_count_and_lambda_check(t: FamilyTuple, p: int) -> tuple[int, bool]:
    """Count of even exponents e, and whether lambda = e is certified
    (no even exponent divisible by p)."""
    _require_odd_prime(p)
    from .errors import ZeroEntry

    if any(ki == 0 for ki in t.k):
        raise ZeroEntry("all exponents must be positive")
    evens = [ki for ki in t.k if ki % 2 == 0]
    e = len(evens)
    return e, all(ki % p != 0 for ki in evens)


def growth_prediction(inv: IwasawaInvariants, nu: int, r: int) -> int:
    """Predicted p-valuation of the branched-cover homology order:
    mu * p^r + lambda * r + nu (nu is caller-supplied)."""
    if r < 1:
        raise ValueError("r must be positive")
    if inv.is_infinite():
        raise InfiniteInvariants("growth prediction needs finite invariants")
    return inv.mu * inv.p**r + inv.lam * r + nu


# -- modular fast path ----------------------------------------------------


def _polymul_mod(a: list[int], b: list[int], mod: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % mod
    return out


def _completed_torus_coeffs_mod(r: int, p: int, mod: int) -> list[int]:
    # (1 - (-1)^r (1+T)^r) / (2+T) with coefficients reduced mod p^budget.
    pw = [1]
    base = [1, 1]
    e = r
    while e:
        if e & 1:
            pw = _polymul_mod(pw, base, mod)
        e >>= 1
        if e:
            base = _polymul_mod(base, base, mod)
    sgn = -1 if r % 2 else 1
    h = [(1 - sgn * pw[0]) % mod] + [(-sgn * c) % mod for c in pw[1:]]
    inv2 = pow(2, -1, mod)
    q = []
    prev = 0
    for i in range(r):
        prev = ((h[i] - prev) * inv2) % mod
        q.append(prev)
    return q


def invariants_modular(
    target: LaurentPoly | FamilyTuple | BraidWord, p: int, budget: int = 64
) -> IwasawaInvariants:
    """Invariants from coefficient residues mod p^B, escalating B up to
    ``budget``.  Agrees with invariants_exact whenever it returns; raises
    BudgetExceeded when mu >= budget cannot be ruled out."""
    _require_odd_prime(p)
    if budget < 1:
        raise ValueError("budget must be >= 1")
    mod = p**budget

    if isinstance(target, FamilyTuple):
        if any(ki == 0 for ki in target.k):
            return IwasawaInvariants(p, INFINITY, INFINITY)
        coeffs = [1]
        for ki in target.k:
            coeffs = _polymul_mod(coeffs, _completed_torus_coeffs_mod(ki, p, mod), mod)
    else:
        if isinstance(target, BraidWord):
            fhat = complete(alexander_closed_braid(target))
        else:
            fhat = target
            if not fhat.is_zero() and fhat.low < 0:
                raise NotAPolynomial("expected a polynomial in T (low >= 0)")
        if fhat.is_zero():
            return IwasawaInvariants(p, INFINITY, INFINITY)
        coeffs = [0] * fhat.low + [c % mod for c in fhat.coeffs]

    for b in range(1, budget + 1):
        mb = p**b
        mu = None
        lam = None
        for i, c in enumerate(coeffs):
            rc = c % mb
            if rc == 0:
                continue
            v = v_p(rc, p)
            if mu is None or v < mu:
                mu = v
                lam = i
                if mu == 0:
                    break
        if mu is not None and mu < b:
            return IwasawaInvariants(p, mu, lam)
    raise BudgetExceeded(f"mu >= {budget} not ruled out at budget {budget}")

"""Exact arithmetic functions over arbitrary-precision integers.

gcd, factorization by trial division with a sieved prime table, the
multiplicative statistics built on it (omega, mu, phi, squarefree
divisors), exact prime counting, and a windowed omega scan for short
intervals of large integers.  Nothing here returns a probabilistic
answer: the Miller-Rabin test is used only with a witness set that is
deterministic for every integer below 3.3e24.
"""

from __future__ import annotations

import math
import os
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

import numpy as np

from .errors import DomainError, FactorBudgetError

DEFAULT_FACTOR_BUDGET = 10**7
DEFAULT_SIEVE_BUDGET = 10**8
FACTOR_BUDGET_ENV = "OSTRO_FACTOR_BUDGET"

# Witnesses proven deterministic for n < 3_317_044_064_679_887_385_961_981.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_LIMIT = 3_317_044_064_679_887_385_961_981


def factor_budget() -> int:
    """Trial-division bound; overridable via OSTRO_FACTOR_BUDGET."""
    raw = os.environ.get(FACTOR_BUDGET_ENV)
    if raw is None:
        return DEFAULT_FACTOR_BUDGET
    try:
        value = int(raw)
    except ValueError as exc:
        raise DomainError(f"bad {FACTOR_BUDGET_ENV}: {raw!r}") from exc
    if value < 2:
        raise DomainError(f"{FACTOR_BUDGET_ENV} must be >= 2")
    return value


class _PrimeTable:
    """Monotonically grown sieve; built single-threaded, then read-only."""

    def __init__(self):
        self._lock = threading.Lock()
        self._limit = 0
        self._flags: np.ndarray | None = None
        self._primes: np.ndarray | None = None

    def ensure(self, limit: int) -> None:
        if limit <= self._limit:
            return
        with self._lock:
            if limit <= self._limit:
                return
            limit = max(limit, 1 << 10, self._limit * 2)
            flags = np.ones(limit + 1, dtype=bool)
            flags[:2] = False
            for p in range(2, isqrt(limit) + 1):
                if flags[p]:
                    flags[p * p:: p] = False
            self._flags = flags
            self._primes = np.flatnonzero(flags).astype(np.int64)
            self._limit = limit

    def primes_leq(self, n: int) -> np.ndarray:
        self.ensure(n)
        idx = np.searchsorted(self._primes, n, side="right")
        return self._primes[:idx]

    def count_leq(self, n: int) -> int:
        self.ensure(n)
        return int(np.count_nonzero(self._flags[: n + 1]))


_TABLE = _PrimeTable()


def primes_up_to(n: int) -> np.ndarray:
    """All primes <= n, ascending (shared read-only array)."""
    if n < 2:
        return np.empty(0, dtype=np.int64)
    return _TABLE.primes_leq(n)


def is_prime(n: int) -> bool:
    """Deterministic primality for n < 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    if n >= _MR_LIMIT:
        raise DomainError("primality test limit exceeded")
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def gcd(a: int, b: int) -> int:
    """gcd(|a|, |b|); the all-zero input has no greatest common divisor."""
    if a == 0 and b == 0:
        raise DomainError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


@dataclass(frozen=True)
class Factorization:
    """n as a product of prime powers, primes strictly increasing."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        prev = 1
        for p, e in self.factors:
            if e < 1 or p <= prev:
                raise DomainError("malformed factorization")
            prev = p
            prod *= p**e
        if prod != self.n:
            raise DomainError("factorization does not reproduce n")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


def _trial_division(n: int, budget: int) -> tuple[list[tuple[int, int]], int]:
    """Divide out all primes <= budget, with early primality shortcuts."""
    factors: list[tuple[int, int]] = []
    rem = n
    # Checkpoints keep us from trial-dividing a huge prime cofactor by
    # every prime in the table.
    checkpoints = [10**3, 10**4, 10**5, 10**6]
    lo = 2
    for cp in checkpoints + [budget]:
        hi = min(cp, budget)
        if hi < lo:
            continue
        cap = isqrt(rem)
        if cap < lo:
            break
        arr = primes_up_to(min(hi, cap))
        for p in map(int, arr[np.searchsorted(arr, lo):]):
            if p * p > rem:
                break
            if rem % p == 0:
                e = 0
                while rem % p == 0:
                    rem //= p
                    e += 1
                factors.append((p, e))
        lo = hi + 1
        if rem == 1 or lo > budget:
            break
        if rem < lo * lo or is_prime(rem):
            break
    if rem > 1 and rem < lo * lo:
        # Trial division was exhaustive, so the cofactor is prime.
        factors.append((rem, 1))
        rem = 1
    return factors, rem


def factorize(n: int, budget: int | None = None) -> Factorization:
    """Full factorization within the trial budget.

    Raises FactorBudgetError when the cofactor left after trial division
    is composite and not the square of a prime.
    """
    if n < 1:
        raise DomainError("factorize requires n >= 1")
    b = budget if budget is not None else factor_budget()
    factors, rem = _trial_division(n, b)
    if rem > 1:
        if is_prime(rem):
            factors.append((rem, 1))
        else:
            s = isqrt(rem)
            if s * s == rem and is_prime(s):
                factors.append((s, 2))
            else:
                raise FactorBudgetError(
                    f"factor budget exceeded: composite cofactor {rem}")
    factors.sort()
    return Factorization(n, tuple(factors))


def _cofactor_omega(rem: int, budget: int) -> int:
    """Distinct-prime count of a cofactor free of primes <= budget."""
    if rem == 1:
        return 0
    if is_prime(rem):
        return 1
    s = isqrt(rem)
    if s * s == rem:
        return 1
    if rem <= budget**3:
        # No factor <= budget and composite: exactly two distinct primes.
        return 2
    raise FactorBudgetError(
        f"factor budget exceeded: omega undecidable for cofactor {rem}")


def omega(n: int, budget: int | None = None) -> int:
    """Number of distinct prime factors; omega(1) = 0."""
    if n < 1:
        raise DomainError("omega requires n >= 1")
    b = budget if budget is not None else factor_budget()
    factors, rem = _trial_division(n, b)
    return len(factors) + _cofactor_omega(rem, b)


def mobius(n: int, budget: int | None = None) -> int:
    """0 on non-squarefree n, else (-1)**omega(n)."""
    fac = factorize(n, budget)
    if any(e >= 2 for _, e in fac.factors):
        return 0
    return -1 if len(fac.factors) % 2 else 1


def euler_phi(n: int, budget: int | None = None) -> int:
    """Euler totient, computed exactly from the factorization."""
    fac = factorize(n, budget)
    out = n
    for p, _ in fac.factors:
        out = out // p * (p - 1)
    return out


def prime_count(x: int, sieve_budget: int = DEFAULT_SIEVE_BUDGET) -> int:
    """Exact count of primes <= x by sieve."""
    if x < 1:
        raise DomainError("prime_count requires x >= 1")
    if x > sieve_budget:
        raise DomainError(f"sieve budget exceeded: {x} > {sieve_budget}")
    if x < 2:
        return 0
    return _TABLE.count_leq(x)


def squarefree_divisors(n: int, budget: int | None = None) -> list[int]:
    """All divisors d | n with mu(d) != 0, ascending; 2**omega(n) of them."""
    fac = factorize(n, budget)
    divs = [1]
    for p in fac.primes:
        divs += [d * p for d in divs]
    return sorted(divs)


def omega_window(lo: int, hi: int, budget: int | None = None) -> list[int]:
    """Exact omega(n) for every n in [lo, hi].

    One sieve pass marks every prime <= min(budget, isqrt(hi)) that has a
    multiple in the window; the cofactors are then settled individually.
    """
    if lo < 1 or hi < lo:
        raise DomainError("need 1 <= lo <= hi")
    if hi >= 1 << 62:
        raise DomainError("window endpoint too large for the sieve pass")
    b = budget if budget is not None else factor_budget()
    bound = min(b, isqrt(hi))
    counts = [0] * (hi - lo + 1)
    rem = list(range(lo, hi + 1))
    ps = primes_up_to(bound)
    if ps.size:
        first = ((lo + ps - 1) // ps) * ps
        hits = np.flatnonzero(first <= hi)
        for j in hits:
            p = int(ps[j])
            start = int(first[j]) - lo
            for idx in range(start, hi - lo + 1, p):
                counts[idx] += 1
                v = rem[idx]
                while v % p == 0:
                    v //= p
                rem[idx] = v
    for idx, v in enumerate(rem):
        if v > 1:
            if v < (bound + 1) ** 2:
                counts[idx] += 1  # cofactor below trial square: prime
            else:
                counts[idx] += _cofactor_omega(v, b)
    return counts


# -- deterministic prime sums for the classical spot checks -----------------

_FIXED_BITS = 96


def sum_recip_primes(x: int, exact_limit: int = 10**5) -> Fraction:
    """Sum of 1/p over primes p <= x.

    Exact rationals up to exact_limit, then 96-bit fixed point: the result
    is identical on every platform.
    """
    ps = primes_up_to(x)
    small = [int(p) for p in ps if p <= exact_limit]
    big = [int(p) for p in ps if p > exact_limit]

    def tree(terms: list[int]) -> tuple[int, int]:
        if not terms:
            return 0, 1
        if len(terms) == 1:
            return 1, terms[0]
        mid = len(terms) // 2
        n1, d1 = tree(terms[:mid])
        n2, d2 = tree(terms[mid:])
        return n1 * d2 + n2 * d1, d1 * d2

    num, den = tree(small)
    total = Fraction(num, den)
    scale = 1 << _FIXED_BITS
    fixed = sum(scale // p for p in big)
    return total + Fraction(fixed, scale)


def prod_one_minus_recip_primes(x: int, exact_limit: int = 10**5) -> Fraction:
    """Product of (1 - 1/p) over primes p <= x, same hybrid scheme."""
    ps = primes_up_to(x)
    num = 1
    den = 1
    for p in (int(q) for q in ps if q <= exact_limit):
        num *= p - 1
        den *= p
    total = Fraction(num, den)
    scale = 1 << _FIXED_BITS
    acc = scale
    for p in (int(q) for q in ps if q > exact_limit):
        acc = acc * (p - 1) // p
    return total * Fraction(acc, scale)

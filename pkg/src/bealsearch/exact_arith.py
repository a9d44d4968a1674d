"""Exact integer and rational kernels.

Arbitrary-precision building blocks used everywhere else: floor n-th roots,
perfect-power detection, base reduction, radical-rationality classification,
and bounded integer factorization.  Integers are plain Python ints, rationals
are ``fractions.Fraction`` (always normalized, denominator >= 1).

All functions here are pure and safe to call from any number of workers.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import BudgetExceeded

FactorList = list[tuple[int, int]]

RATIONAL = "rational"
IRRATIONAL = "irrational"
NO_REAL_ROOT = "no_real_root"


def iroot(n: int, k: int) -> tuple[int, bool]:
    """Floor k-th root of a non-negative integer.

    Returns (root, exact) with root**k <= n < (root+1)**k and
    exact iff root**k == n.
    """
    if k < 1:
        raise ValueError(f"root degree must be >= 1, got {k}")
    if n < 0:
        raise ValueError(f"iroot requires n >= 0, got {n}")
    if n == 0 or k == 1:
        return n, True
    if k == 2:
        r = math.isqrt(n)
        return r, r * r == n
    if n.bit_length() < 50:
        # float seed is within one of the true root at this size
        r = int(n ** (1.0 / k))
        if r < 1:
            r = 1
        while r ** k > n:
            r -= 1
        while (r + 1) ** k <= n:
            r += 1
        return r, r ** k == n
    # Integer Newton iteration from an overestimate.
    r = 1 << -(-n.bit_length() // k)
    while True:
        nxt = ((k - 1) * r + n // r ** (k - 1)) // k
        if nxt >= r:
            break
        r = nxt
    while r ** k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r, r ** k == n


def is_perfect_power(n: int) -> tuple[int, int] | None:
    """Decompose n >= 2 as base**exponent with the maximal exponent >= 2.

    Returns None when n is not a perfect power.  The returned base is never
    itself a perfect power: if it were c**f, then n = c**(e*f) would have
    been found first at the larger exponent.
    """
    if n < 2:
        raise ValueError(f"is_perfect_power requires n >= 2, got {n}")
    for e in range(n.bit_length() - 1, 1, -1):
        root, exact = iroot(n, e)
        if exact:
            return root, e
    return None


def reduce_base(base: int, exp: int) -> tuple[int, int]:
    """Rewrite base**exp so the base is not a perfect power.

    Example: (8, 5) -> (2, 15).  Idempotent; value-preserving.
    """
    if base < 2:
        raise ValueError(f"reduce_base requires base >= 2, got {base}")
    if exp < 1:
        raise ValueError(f"reduce_base requires exp >= 1, got {exp}")
    decomp = is_perfect_power(base)
    if decomp is None:
        return base, exp
    root, e = decomp
    return root, e * exp


@dataclass(frozen=True)
class RadicalClass:
    """Outcome of classifying sign * radicand**(1/degree).

    kind is one of "rational", "irrational", "no_real_root"; value is the
    exact root and is present iff kind == "rational".
    """

    kind: str
    value: Fraction | None = None

    @classmethod
    def rational(cls, value: Fraction) -> "RadicalClass":
        return cls(RATIONAL, Fraction(value))

    @classmethod
    def irrational(cls) -> "RadicalClass":
        return cls(IRRATIONAL)

    @classmethod
    def no_real_root(cls) -> "RadicalClass":
        return cls(NO_REAL_ROOT)

    @property
    def is_rational(self) -> bool:
        return self.kind == RATIONAL

    def __str__(self) -> str:
        if self.is_rational:
            return f"rational({self.value})"
        return self.kind


def classify_radical(sign: int, radicand: Fraction | int, degree: int) -> RadicalClass:
    """Decide whether sign * radicand**(1/degree) is a rational number.

    With radicand = p/q in lowest terms, the root is rational iff p and q are
    both perfect degree-th powers (a rational root of an integer-coefficient
    monomial is integral on each side).  A negative sign needs an odd degree
    for a real root to exist at all, except for radicand 0.
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    if degree < 1:
        raise ValueError(f"degree must be >= 1, got {degree}")
    radicand = Fraction(radicand)
    if radicand < 0:
        raise ValueError(f"radicand must be >= 0, got {radicand}")
    if radicand == 0:
        return RadicalClass.rational(Fraction(0))
    if sign == -1 and degree % 2 == 0:
        return RadicalClass.no_real_root()
    p, q = radicand.numerator, radicand.denominator
    root_p, exact_p = iroot(p, degree)
    if not exact_p:
        return RadicalClass.irrational()
    root_q, exact_q = iroot(q, degree)
    if not exact_q:
        return RadicalClass.irrational()
    value = Fraction(sign * root_p, root_q)
    assert value ** degree == sign * radicand
    return RadicalClass.rational(value)


@dataclass(frozen=True)
class Radical:
    """A real radical sign * radicand**(1/degree) kept in exact form.

    radicand is a non-negative rational; classification is computed lazily
    and cached.  Numeric evaluation lives in the intervals module.
    """

    sign: int
    radicand: Fraction
    degree: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        if self.degree < 1:
            raise ValueError(f"degree must be >= 1, got {self.degree}")
        object.__setattr__(self, "radicand", Fraction(self.radicand))
        if self.radicand < 0:
            raise ValueError(f"radicand must be >= 0, got {self.radicand}")

    @classmethod
    def of(cls, signed_radicand: Fraction | int, degree: int) -> "Radical":
        """Build from a signed radicand, splitting off the sign."""
        signed_radicand = Fraction(signed_radicand)
        sign = -1 if signed_radicand < 0 else 1
        return cls(sign, abs(signed_radicand), degree)

    @cached_property
    def classification(self) -> RadicalClass:
        return classify_radical(self.sign, self.radicand, self.degree)

    @property
    def exact_value(self) -> Fraction | None:
        """The exact rational value, or None when irrational / unreal."""
        return self.classification.value

    def __str__(self) -> str:
        prefix = "-" if self.sign == -1 else ""
        return f"{prefix}({self.radicand})^(1/{self.degree})"


# --- factorization -----------------------------------------------------------

_TRIAL_LIMIT = 10 ** 6
_small_primes: list[int] | None = None

# Deterministic Miller-Rabin witness set: exact for all n < 3.3 * 10**24,
# which covers the guaranteed 2**64 budget with a wide margin.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

DEFAULT_FACTOR_BUDGET = 2 ** 22


def _primes_below(limit: int) -> list[int]:
    sieve = bytearray(b"\x01") * limit
    sieve[:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit - 1) + 1):
        if sieve[p]:
            start = p * p
            sieve[start::p] = b"\x00" * ((limit - 1 - start) // p + 1)
    return [i for i, flag in enumerate(sieve) if flag]


def _trial_primes() -> list[int]:
    global _small_primes
    if _small_primes is None:
        _small_primes = _primes_below(_TRIAL_LIMIT)
    return _small_primes


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin with a fixed witness set (deterministic below 3.3e24)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int, rng: random.Random, max_steps: int) -> tuple[int | None, int]:
    """One Brent-cycle attempt at a nontrivial factor of odd composite n.

    Returns (factor_or_None, steps_spent).
    """
    y = rng.randrange(1, n)
    c = rng.randrange(1, n)
    m = 128
    g = r = q = 1
    steps = 0
    x = ys = y
    while g == 1 and steps < max_steps:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        steps += r
        r *= 2
    if g == n:
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            steps += 1
            if steps >= max_steps:
                break
    return (g if 1 < g < n else None), max(steps, 1)


def factorize(n: int, budget: int = DEFAULT_FACTOR_BUDGET, seed: int = 0) -> FactorList:
    """Full prime factorization as a sorted [(prime, multiplicity), ...] list.

    Trial division up to 10**6, then perfect-power reduction and Brent's
    rho with an rng seeded deterministically from (n, seed).  Raises
    BudgetExceeded when the rho step budget runs out; callers degrade to
    gcd-only reporting in that case.
    """
    if n < 2:
        raise ValueError(f"factorize requires n >= 2, got {n}")
    factors: dict[int, int] = {}
    for p in _trial_primes():
        if p * p > n:
            break
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        if n == 1:
            break
    if n > 1:
        if n < _TRIAL_LIMIT * _TRIAL_LIMIT or is_probable_prime(n):
            # below the trial limit squared any survivor is prime
            factors[n] = factors.get(n, 0) + 1
        else:
            rng = random.Random(n * 0x9E3779B97F4A7C15 + seed)
            remaining = budget
            stack = [(n, 1)]
            while stack:
                m, mult = stack.pop()
                if is_probable_prime(m):
                    factors[m] = factors.get(m, 0) + mult
                    continue
                power = is_perfect_power(m)
                if power is not None:
                    base, e = power
                    stack.append((base, mult * e))
                    continue
                factor = None
                while factor is None:
                    if remaining <= 0:
                        raise BudgetExceeded(n, budget)
                    factor, spent = _brent_rho(m, rng, remaining)
                    remaining -= spent
                stack.append((factor, mult))
                stack.append((m // factor, mult))
    return sorted(factors.items())

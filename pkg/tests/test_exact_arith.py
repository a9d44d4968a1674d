"""Kernel tests: roots, perfect powers, radical classification, factorization."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bealsearch.errors import BudgetExceeded
from bealsearch.exact_arith import (Radical, RadicalClass, classify_radical,
                                    factorize, iroot, is_perfect_power,
                                    is_probable_prime, reduce_base)


# --- iroot ---------------------------------------------------------------------

def test_iroot_examples():
    assert iroot(2744, 3) == (14, True)
    assert 14 * 14 * 14 == 2744  # oracle: plain multiplication
    assert iroot(35, 3) == (3, False)
    assert 3 ** 3 <= 35 < 4 ** 3
    assert iroot(1, 5) == (1, True)
    assert iroot(0, 4) == (0, True)


def test_iroot_matches_exhaustive_floor_oracle():
    # Incremental oracle: maintain root with root**k <= n < (root+1)**k by
    # repeated multiplication only, for every n up to 10**6 and k in [1, 6].
    limit = 10 ** 6
    for k in range(1, 7):
        root = 0
        current_power = 0
        next_power = 1
        for n in range(limit + 1):
            if n == next_power:
                root += 1
                current_power = next_power
                next_power = (root + 1) ** k
            assert iroot(n, k) == (root, n == current_power), (n, k)


def test_iroot_rejects_bad_arguments():
    with pytest.raises(ValueError):
        iroot(10, 0)
    with pytest.raises(ValueError):
        iroot(-1, 3)


@settings(deadline=None)
@given(st.integers(min_value=0, max_value=10 ** 50), st.integers(min_value=1, max_value=16))
def test_iroot_bracket_property(n, k):
    root, exact = iroot(n, k)
    assert root ** k <= n < (root + 1) ** k
    assert exact == (root ** k == n)


@settings(deadline=None)
@given(st.integers(min_value=1, max_value=10 ** 12), st.integers(min_value=1, max_value=10))
def test_iroot_inverts_powers(base, k):
    assert iroot(base ** k, k) == (base, True)


# --- perfect powers ------------------------------------------------------------

def test_is_perfect_power_examples():
    assert is_perfect_power(6561) == (3, 8)
    assert 3 ** 8 == 6561
    assert is_perfect_power(2) is None
    assert is_perfect_power(64) == (2, 6)  # maximal: not (8, 2) or (4, 3)


def test_is_perfect_power_small_range_oracle():
    # enumerate all powers below the limit by multiplication
    limit = 20000
    powers = {}
    for base in range(2, int(limit ** 0.5) + 1):
        value = base * base
        exponent = 2
        while value <= limit:
            if value not in powers or powers[value][1] < exponent:
                powers[value] = (base, exponent)
            value *= base
            exponent += 1
    for n in range(2, limit + 1):
        assert is_perfect_power(n) == powers.get(n), n


@settings(deadline=None)
@given(st.integers(min_value=2, max_value=10 ** 6), st.integers(min_value=2, max_value=20))
def test_is_perfect_power_roundtrip(base, e):
    root, exponent = is_perfect_power(base ** e)
    assert root ** exponent == base ** e
    assert exponent % e == 0 or exponent >= e  # maximal exponent absorbs e
    assert is_perfect_power(root) is None


# --- reduce_base ----------------------------------------------------------------

def test_reduce_base_examples():
    assert reduce_base(8, 5) == (2, 15)
    assert reduce_base(2, 15) == (2, 15)
    assert reduce_base(27, 4) == (3, 12)


@settings(deadline=None)
@given(st.integers(min_value=2, max_value=10 ** 9), st.integers(min_value=1, max_value=50))
def test_reduce_base_preserves_value_and_is_idempotent(base, exp):
    reduced, new_exp = reduce_base(base, exp)
    assert reduced ** new_exp == base ** exp
    assert reduce_base(reduced, new_exp) == (reduced, new_exp)
    assert is_perfect_power(reduced) is None if reduced >= 2 else True


# --- classify_radical ------------------------------------------------------------

def test_classify_radical_examples():
    assert classify_radical(1, Fraction(71, 216), 3) == RadicalClass.irrational()
    assert classify_radical(1, Fraction(8), 3) == RadicalClass.rational(Fraction(2))
    assert classify_radical(-1, Fraction(6), 3) == RadicalClass.irrational()
    assert classify_radical(-1, Fraction(4), 2) == RadicalClass.no_real_root()


def test_classify_radical_edge_cases():
    # zero radicand is rational 0 regardless of sign and degree parity
    assert classify_radical(-1, Fraction(0), 2) == RadicalClass.rational(Fraction(0))
    # degree 1 is the identity root
    assert classify_radical(-1, Fraction(7, 3), 1) == RadicalClass.rational(Fraction(-7, 3))
    # negative sign with odd degree can still be rational
    assert classify_radical(-1, Fraction(8, 27), 3) == RadicalClass.rational(Fraction(-2, 3))


def brute_force_root_tables(limit: int, degrees) -> dict[int, dict[Fraction, Fraction]]:
    """Candidate-root tables: all a/b with a**n, b**n <= limit, by multiplication."""
    tables = {}
    for n in degrees:
        table = {}
        a = 1
        while a ** n <= limit:
            b = 1
            while b ** n <= limit:
                table.setdefault(Fraction(a ** n, b ** n), Fraction(a, b))
                b += 1
            a += 1
        tables[n] = table
    return tables


def test_classify_radical_matches_brute_force_small():
    limit = 60
    tables = brute_force_root_tables(limit, range(2, 7))
    for p in range(1, limit + 1):
        for q in range(1, limit + 1):
            radicand = Fraction(p, q)
            for degree in range(2, 7):
                expected = tables[degree].get(radicand)
                got = classify_radical(1, radicand, degree)
                if expected is None:
                    assert not got.is_rational, (p, q, degree)
                else:
                    assert got == RadicalClass.rational(expected), (p, q, degree)


@settings(deadline=None)
@given(st.fractions(min_value=0, max_value=1000, max_denominator=1000),
       st.integers(min_value=1, max_value=8),
       st.sampled_from([1, -1]))
def test_classify_radical_remultiplication(radicand, degree, sign):
    result = classify_radical(sign, radicand, degree)
    if result.is_rational:
        assert result.value ** degree == sign * radicand


@settings(deadline=None)
@given(st.integers(min_value=0, max_value=10 ** 9), st.integers(min_value=1, max_value=8))
def test_integer_radicand_dichotomy(n, degree):
    # the degree-th root of an integer is an integer or irrational
    result = classify_radical(1, Fraction(n), degree)
    if result.is_rational:
        assert result.value.denominator == 1


def test_radical_type():
    radical = Radical.of(Fraction(-55, 2744), 3)
    assert radical.sign == -1
    assert radical.radicand == Fraction(55, 2744)
    assert radical.classification.kind == "irrational"
    assert radical.exact_value is None
    assert str(radical) == "-(55/2744)^(1/3)"
    exact = Radical.of(Fraction(8), 3)
    assert exact.exact_value == 2


# --- factorize -------------------------------------------------------------------

def test_factorize_examples():
    assert factorize(2744) == [(2, 3), (7, 3)]
    assert factorize(2) == [(2, 1)]
    assert factorize(6561) == [(3, 8)]


def test_factorize_rejects_below_two():
    with pytest.raises(ValueError):
        factorize(1)


def test_factorize_semiprimes_beyond_trial_division():
    p, q = 10 ** 9 + 7, 10 ** 9 + 9
    assert factorize(p * q) == [(p, 1), (q, 1)]
    r = 2 ** 61 - 1
    assert factorize(r * 8) == [(2, 3), (r, 1)]
    # perfect power of a large prime
    assert factorize(p * p) == [(p, 2)]


def test_factorize_budget_exceeded():
    n = (2 ** 127 - 1) * (2 ** 521 - 1)
    with pytest.raises(BudgetExceeded):
        factorize(n, budget=4)


@settings(deadline=None, max_examples=60)
@given(st.integers(min_value=2, max_value=10 ** 12))
def test_factorize_reconstructs(n):
    factors = factorize(n)
    product = 1
    previous = 1
    for prime, multiplicity in factors:
        assert prime > previous  # strictly increasing
        assert multiplicity >= 1
        assert is_probable_prime(prime)
        product *= prime ** multiplicity
        previous = prime
    assert product == n


def test_is_probable_prime_spot_checks():
    assert is_probable_prime(2) and is_probable_prime(3) and is_probable_prime(97)
    assert not is_probable_prime(1) and not is_probable_prime(561)  # Carmichael
    assert is_probable_prime(2 ** 127 - 1)
    assert not is_probable_prime((2 ** 61 - 1) ** 2)
    assert math.prod(p for p, _ in factorize(3 * 5 * 7 * 11)) == 1155

"""Integer arithmetic layer: primality, factorization, multiplicative helpers."""

import math
import random
from fractions import Fraction

import pytest

from pnsieve.intarith import (
    DEFAULT_RHO_BUDGET,
    FactorHintCache,
    Factorization,
    IncompleteFactorization,
    RangeExceeded,
    W,
    W_bounds,
    c_max,
    coprime_part_Q,
    cyclotomic_value,
    default_hints,
    divisors,
    euler_phi,
    factorize,
    factorize_q_pow_n_minus_1,
    is_prime,
    is_prime_power,
    mobius,
    multiplicative_order,
    nth_primes,
    omega,
    omega_bounds,
    primorial,
    primorial_exceeds,
    radical,
    smallprimes,
    squarefree_divisors,
    theta,
)


# ---------------------------------------------------------------------------
# primality
# ---------------------------------------------------------------------------


def test_is_prime_matches_sieve_below_10000():
    sieve = set(smallprimes(10_000))
    for n in range(10_000):
        assert is_prime(n) == (n in sieve), n


@pytest.mark.parametrize("n", [41, 1009, 104_729, 2 ** 31 - 1, 2 ** 89 - 1])
def test_is_prime_known_primes(n):
    assert is_prime(n)


@pytest.mark.parametrize(
    "n",
    [
        1,
        1681,            # 41^2; sits right above the trial-division shortcut
        561,             # Carmichael
        41041,           # Carmichael
        3215031751,      # strong pseudoprime to bases 2,3,5,7
        2 ** 67 - 1,     # 193707721 * 761838257287
        25326001 * 2,
    ],
)
def test_is_prime_known_composites(n):
    assert not is_prime(n)


def test_smallprimes_and_nth_primes_agree():
    ps = smallprimes(1000)
    assert ps[:5] == [2, 3, 5, 7, 11]
    assert nth_primes(len(ps)) == ps


# ---------------------------------------------------------------------------
# factorization
# ---------------------------------------------------------------------------


def test_factorize_roundtrip_randoms():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randrange(2, 10 ** 9)
        f = factorize(n)
        assert f.complete
        prod = f.cofactor
        for p, a in f.factors:
            assert is_prime(p)
            prod *= p ** a
        assert prod == n == f.value


def test_factorize_semiprime_beyond_trial_division():
    p1, p2 = 1_000_003, 1_000_033
    f = factorize(p1 * p2)
    assert f.complete and f.primes() == [p1, p2]


def test_factorize_incomplete_with_zero_budget():
    p1, p2 = 1_000_003, 1_000_033
    f = factorize(8 * p1 * p2, hints=FactorHintCache(), budget=0)
    assert not f.complete
    assert f.factors == [(2, 3)] and f.cofactor == p1 * p2
    lo, hi = omega_bounds(f)
    assert lo == 2 and hi == 3  # cofactor in (10^6, 10^18) -> 1..2 more primes
    with pytest.raises(IncompleteFactorization):
        omega(f)
    w_lo, w_hi = W_bounds(f)
    assert (w_lo, w_hi) == (2 ** 2, 2 ** 3)


def test_factorize_str_format():
    assert str(factorize(117648)) == "2^4 * 3^2 * 19 * 43"


def test_q_pow_n_minus_1_consistency_across_towers():
    base = factorize_q_pow_n_minus_1(7, 6)
    assert base.value == 7 ** 6 - 1
    assert base.factors == factorize(7 ** 6 - 1).factors
    assert factorize_q_pow_n_minus_1(49, 3).factors == base.factors


def test_q_pow_n_minus_1_large_uses_hints():
    f = factorize_q_pow_n_minus_1(7, 48)
    assert f.complete
    assert f.value == 7 ** 48 - 1


def test_cyclotomic_values():
    assert cyclotomic_value(1, 7) == 6
    assert cyclotomic_value(2, 7) == 8
    assert cyclotomic_value(6, 7) == 43
    assert cyclotomic_value(12, 2) == 13
    for x, n in [(2, 12), (7, 6), (3, 10)]:
        prod = 1
        for d in range(1, n + 1):
            if n % d == 0:
                prod *= cyclotomic_value(d, x)
        assert prod == x ** n - 1


def test_is_prime_power():
    assert is_prime_power(7) == (7, 1)
    assert is_prime_power(49) == (7, 2)
    assert is_prime_power(16) == (2, 4)
    assert is_prime_power(2401) == (7, 4)
    assert is_prime_power(6) is None
    assert is_prime_power(1) is None
    assert is_prime_power(100) is None


# ---------------------------------------------------------------------------
# multiplicative helpers
# ---------------------------------------------------------------------------


def test_arithmetic_functions_on_360():
    f = factorize(360)  # 2^3 * 3^2 * 5
    assert omega(f) == 3
    assert W(f) == 8
    assert euler_phi(f) == 96
    assert mobius(f) == 0
    assert radical(f) == 30
    assert theta(f) == Fraction(96, 360) == Fraction(euler_phi(f), 360)
    assert len(divisors(f)) == 24
    assert sorted(squarefree_divisors(f)) == [1, 2, 3, 5, 6, 10, 15, 30]


def test_mobius_signs():
    assert mobius(factorize(1)) == 1
    assert mobius(factorize(30)) == -1
    assert mobius(factorize(6)) == 1


def test_coprime_part_Q():
    q = 7
    f = factorize_q_pow_n_minus_1(q, 6)  # 2^4 * 3^2 * 19 * 43
    Q = coprime_part_Q(f, q)
    assert Q.value == 19 * 43 == 817
    assert math.gcd(Q.value, q - 1) == 1
    for p, _ in Q.factors:
        assert f.value % p == 0


def test_coprime_part_Q_keeps_full_prime_powers():
    # 3^5 - 1 = 242 = 2 * 11^2; q - 1 = 2 -> Q = 11^2
    Q = coprime_part_Q(factorize(242), 3)
    assert Q.value == 121 and Q.factors == [(11, 2)]


def test_multiplicative_order():
    assert multiplicative_order(7, 11) == 10
    assert multiplicative_order(7, 4) == 2
    assert multiplicative_order(2, 7) == 3
    with pytest.raises(ValueError):
        multiplicative_order(3, 6)  # gcd != 1


# ---------------------------------------------------------------------------
# hint cache
# ---------------------------------------------------------------------------


def test_hint_cache_valid_entry():
    p1, p2 = 1_000_003, 1_000_033
    cache = FactorHintCache.from_text(
        f"# comment line\n{p1 * p2}: {p1} {p2}\n"
    )
    assert len(cache) == 1
    assert cache.lookup(p1 * p2) == [p1, p2]
    assert cache.lookup(42) is None
    f = factorize(p1 * p2, hints=cache, budget=0)
    assert f.complete and f.primes() == [p1, p2]


def test_hint_cache_rejects_nondivisor():
    with pytest.raises(ValueError):
        FactorHintCache.from_text("100: 3\n")


def test_hint_cache_rejects_composite_hint():
    with pytest.raises(ValueError):
        FactorHintCache.from_text("135: 15\n")


def test_hint_cache_rejects_malformed_line():
    with pytest.raises(ValueError):
        FactorHintCache.from_text("not a hint\n")


def test_default_hints_available():
    cache = default_hints()
    assert len(cache) > 0


# ---------------------------------------------------------------------------
# analytic bounds
# ---------------------------------------------------------------------------


def test_c_max_tiny_case_by_hand():
    # primes p <= 2^2 with 2/sqrt(p) > 1: 2 and 3
    expected = (2 / math.sqrt(2)) * (2 / math.sqrt(3))
    assert c_max(2.0) == pytest.approx(expected, rel=1e-12)


def test_c_max_monotone_in_r():
    assert c_max(4.0) < c_max(6.0) < c_max(9.5)


def test_c_max_range_guard():
    with pytest.raises(RangeExceeded):
        c_max(33.0)


def test_primorial():
    assert primorial(1) == 2
    assert primorial(5) == 2310
    assert primorial_exceeds(5, 2309)
    assert not primorial_exceeds(5, 2310)


def test_primorial_range_guard():
    with pytest.raises(RangeExceeded):
        primorial(10 ** 9)


def test_default_budget_positive():
    assert DEFAULT_RHO_BUDGET > 0


def test_factorization_consistency_guard():
    f = Factorization(value=12, factors=[(2, 2), (3, 1)])
    assert f.complete and f.primes() == [2, 3]
    with pytest.raises(ValueError):
        Factorization(value=12, factors=[(2, 1), (3, 1)])

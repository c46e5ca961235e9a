"""Exact integer arithmetic: factorization, omega/W, Euler phi, Mobius,
theta, the coprime part Q, and the bound constants used by the sieve checks.

All results are deterministic given (input, hints, budget).  Factorization
that cannot finish within budget is returned *incomplete* with the remaining
composite cofactor attached, never guessed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

__all__ = [
    "Factorization",
    "FactorHintCache",
    "IncompleteFactorization",
    "RangeExceeded",
    "is_prime",
    "smallprimes",
    "nth_primes",
    "factorize",
    "factorize_q_pow_n_minus_1",
    "cyclotomic_value",
    "is_prime_power",
    "omega",
    "omega_bounds",
    "W",
    "W_bounds",
    "euler_phi",
    "mobius",
    "theta",
    "divisors",
    "squarefree_divisors",
    "radical",
    "coprime_part_Q",
    "w_bound_constant",
    "c_max",
    "primorial",
    "primorial_exceeds",
    "multiplicative_order",
    "TRIAL_LIMIT",
    "DEFAULT_RHO_BUDGET",
]

TRIAL_LIMIT = 10 ** 6
DEFAULT_RHO_BUDGET = 400_000  # Brent iterations per composite


class IncompleteFactorization(Exception):
    """An exact value was demanded of a factorization with unfactored cofactor."""

    def __init__(self, msg, partial=None):
        super().__init__(msg)
        self.partial = partial


class RangeExceeded(ValueError):
    pass


# ---------------------------------------------------------------------------
# primes and primality
# ---------------------------------------------------------------------------

_sieve_cache: dict = {"limit": 0, "primes": []}


def smallprimes(limit: int) -> list[int]:
    """All primes <= limit, cached (plain Eratosthenes, numpy-backed)."""
    if limit <= _sieve_cache["limit"]:
        primes = _sieve_cache["primes"]
        # bisect would do; the list is sorted
        import bisect

        return primes[: bisect.bisect_right(primes, limit)]
    import numpy as np

    n = max(limit, 10)
    mask = np.ones(n + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, int(n ** 0.5) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    primes = [int(p) for p in np.nonzero(mask)[0]]
    _sieve_cache["limit"] = n
    _sieve_cache["primes"] = primes
    return primes


def nth_primes(count: int) -> list[int]:
    """The first `count` primes."""
    if count <= 0:
        return []
    # p_k < k(ln k + ln ln k) for k >= 6
    bound = 15 if count < 6 else int(count * (math.log(count) + math.log(math.log(count)))) + 10
    primes = smallprimes(bound)
    while len(primes) < count:
        bound *= 2
        primes = smallprimes(bound)
    return primes[:count]


# Miller-Rabin with the first 13 primes is a proven deterministic test below this bound.
_MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_TINY_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _mr_composite_witness(n: int, a: int) -> bool:
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def _jacobi(a: int, n: int) -> int:
    assert n > 0 and n % 2 == 1
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas_prp(n: int) -> bool:
    """Strong Lucas probable-prime test, Selfridge parameter choice."""
    # find D = 5, -7, 9, -11, ... with jacobi(D, n) == -1
    D = 5
    while True:
        j = _jacobi(D, n)
        if j == -1:
            break
        if j == 0 and abs(D) != n:
            return False
        D = -(D + 2) if D > 0 else -(D - 2)
    P, Q = 1, (1 - D) // 4
    d = n + 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # Lucas sequence by binary ladder
    U, V, qk = 0, 2, 1
    for bit in bin(d)[2:]:
        U, V = U * V % n, (V * V - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            U, V = (P * U + V) * ((n + 1) // 2) % n, (D * U + P * V) * ((n + 1) // 2) % n
            qk = qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * qk) % n
        if V == 0:
            return True
        qk = qk * qk % n
    return False


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin below 3.3e24, BPSW above."""
    if n < 2:
        return False
    for p in _TINY_PRIMES:
        if n % p == 0:
            return n == p
    if n < 41 * 41:
        return True  # no factor <= 37, and any composite this small would have one
    if n < _MR_DETERMINISTIC_BOUND:
        return not any(_mr_composite_witness(n, a) for a in _MR_BASES)
    if _mr_composite_witness(n, 2):
        return False
    # perfect squares defeat the Lucas step; none pass base-2 MR anyway,
    # but the explicit check keeps the test airtight
    r = math.isqrt(n)
    if r * r == n:
        return False
    return _strong_lucas_prp(n)


# ---------------------------------------------------------------------------
# factorization
# ---------------------------------------------------------------------------


@dataclass
class Factorization:
    """Multiset of (prime, exponent) pairs for `value`, plus any unfactored cofactor."""

    value: int
    factors: list[tuple[int, int]] = field(default_factory=list)
    cofactor: int = 1

    def __post_init__(self):
        prod = self.cofactor
        for p, a in self.factors:
            prod *= p ** a
        if prod != self.value:
            raise ValueError(f"inconsistent factorization of {self.value}")

    @property
    def complete(self) -> bool:
        return self.cofactor == 1

    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def __str__(self):
        parts = [f"{p}^{a}" if a > 1 else str(p) for p, a in self.factors]
        if self.cofactor != 1:
            parts.append(f"[{self.cofactor}]")
        return " * ".join(parts) if parts else "1"


class FactorHintCache:
    """Externally supplied prime factors, keyed by the integer they divide.

    File format: one entry per line, ``<integer>: <prime> <prime> ...``;
    ``#`` starts a comment.  Every hinted prime must divide its key and pass
    the primality test.
    """

    def __init__(self, entries: dict[int, list[int]] | None = None):
        self.entries: dict[int, list[int]] = {}
        for key, primes in (entries or {}).items():
            self._add(int(key), primes)

    def _add(self, key: int, primes) -> None:
        seen = sorted({int(p) for p in primes})
        for p in seen:
            if key % p != 0:
                raise ValueError(f"hint {p} does not divide {key}")
            if not is_prime(p):
                raise ValueError(f"hint {p} for {key} is not prime")
        self.entries[key] = seen

    @classmethod
    def from_text(cls, text: str) -> "FactorHintCache":
        cache = cls()
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                key_s, primes_s = line.split(":", 1)
                key = int(key_s.strip())
                primes = [int(tok) for tok in primes_s.split()]
            except ValueError as exc:
                raise ValueError(f"bad hint line {lineno}: {raw!r}") from exc
            cache._add(key, primes)
        return cache

    @classmethod
    def from_path(cls, path) -> "FactorHintCache":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_text(fh.read())

    def lookup(self, n: int):
        return self.entries.get(n)

    def __len__(self):
        return len(self.entries)


_default_hints: list = []


def default_hints() -> FactorHintCache:
    """The hint cache shipped with the package."""
    if not _default_hints:
        from importlib import resources

        text = resources.files("pnsieve").joinpath("data/factor_hints.txt").read_text()
        _default_hints.append(FactorHintCache.from_text(text))
    return _default_hints[0]


def _brent_rho(n: int, attempt: int, max_iters: int) -> tuple[int | None, int]:
    """One Brent-cycle attempt; returns (factor or None, iterations used).

    The starting point and increment are deterministic functions of (n, attempt).
    """
    if n % 2 == 0:
        return 2, 0
    y = (2 + 3 * attempt + n % 97) % n
    c = (1 + 2 * attempt + n % 89) % n
    if c == 0:
        c = 1
    m = 128
    g, r, q = 1, 1, 1
    x = ys = y
    used = 0
    while g == 1 and used < max_iters:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            used += min(m, r - k)
            g = math.gcd(q, n)
            k += m
            if used >= max_iters:
                break
        r *= 2
    if g == n:
        # backtrack one step at a time
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            used += 1
            g = math.gcd(abs(x - ys), n)
            if used >= max_iters:
                break
    if 1 < g < n:
        return g, used
    return None, used


def factorize(n: int, hints: FactorHintCache | None = None,
              budget: int = DEFAULT_RHO_BUDGET) -> Factorization:
    """Factor n: trial division to 10^6, hint lookup, then Brent rho within budget.

    Always returns a result; when the budget runs out the remaining composite
    part is carried in `cofactor` and `complete` is False.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return Factorization(1)
    counts: dict[int, int] = {}
    rem = n
    for p in smallprimes(TRIAL_LIMIT):
        if p * p > rem:
            break
        while rem % p == 0:
            counts[p] = counts.get(p, 0) + 1
            rem //= p
    if rem > 1 and rem < TRIAL_LIMIT * TRIAL_LIMIT:
        # below the square of the trial bound the remainder must be prime
        counts[rem] = counts.get(rem, 0) + 1
        rem = 1

    cofactor = 1
    stack = [rem] if rem > 1 else []
    iters_left = budget
    while stack:
        c = stack.pop()
        if c == 1:
            continue
        if is_prime(c):
            counts[c] = counts.get(c, 0) + 1
            continue
        hinted = hints.lookup(c) if hints is not None else None
        if hinted:
            for p in hinted:
                while c % p == 0:
                    counts[p] = counts.get(p, 0) + 1
                    c //= p
            if c > 1:
                stack.append(c)
            continue
        found = None
        for attempt in range(8):
            if iters_left <= 0:
                break
            cap = max(1000, min(iters_left, budget // 4))
            f, used = _brent_rho(c, attempt, cap)
            iters_left -= used
            if f is not None:
                found = f
                break
        if found is None:
            cofactor *= c
        else:
            stack.append(found)
            stack.append(c // found)

    factors = sorted(counts.items())
    return Factorization(n, factors, cofactor)


def is_prime_power(q: int) -> tuple[int, int] | None:
    """(p, k) with q = p^k, or None if q is not a prime power."""
    if q < 2:
        return None
    for k in range(q.bit_length(), 0, -1):
        p = round(q ** (1.0 / k))
        for cand in (p - 1, p, p + 1):
            if cand >= 2 and cand ** k == q and is_prime(cand):
                return cand, k
    return None


def _mobius_int(n: int) -> int:
    f = factorize(n)
    return mobius(f)


def cyclotomic_value(d: int, x: int) -> int:
    """The d-th cyclotomic polynomial evaluated at integer x (exact)."""
    if d == 1:
        return x - 1
    num, den = 1, 1
    for e in range(1, d + 1):
        if d % e:
            continue
        mu = _mobius_int(d // e)
        if mu == 1:
            num *= x ** e - 1
        elif mu == -1:
            den *= x ** e - 1
    assert num % den == 0
    return num // den


_qn_cache: dict = {}


def factorize_q_pow_n_minus_1(q: int, n: int, hints: FactorHintCache | None = None,
                              budget: int = DEFAULT_RHO_BUDGET) -> Factorization:
    """Factor q^n - 1 by splitting into cyclotomic-polynomial values first.

    q = p^k is split over the base prime: p^(kn) - 1 = prod over d | kn of
    (d-th cyclotomic polynomial at p); each piece is factored independently.
    """
    pk = is_prime_power(q)
    if pk is None:
        raise ValueError(f"{q} is not a prime power")
    p, k = pk
    value = q ** n - 1
    if value == 1:
        return Factorization(1)
    key = (p, k * n, id(hints), budget)
    if key in _qn_cache:
        return _qn_cache[key]
    counts: dict[int, int] = {}
    cofactor = 1
    for d in sorted(dd for dd in range(1, k * n + 1) if (k * n) % dd == 0):
        piece = cyclotomic_value(d, p)
        sub = factorize(piece, hints=hints, budget=budget)
        for prime, a in sub.factors:
            counts[prime] = counts.get(prime, 0) + a
        cofactor *= sub.cofactor
    result = Factorization(value, sorted(counts.items()), cofactor)
    _qn_cache[key] = result
    return result


# ---------------------------------------------------------------------------
# arithmetic functions on factorizations
# ---------------------------------------------------------------------------


def omega(f: Factorization) -> int:
    if not f.complete:
        raise IncompleteFactorization(f"omega of incomplete factorization of {f.value}", f)
    return len(f.factors)


def omega_bounds(f: Factorization) -> tuple[int, int]:
    """[lo, hi] interval for the number of distinct primes.

    The cofactor, when present, has all prime factors above the trial-division
    bound (they survived it), so it contributes at least 1 and at most
    floor(log(cofactor) / log(TRIAL_LIMIT)) extra primes.
    """
    known = len(f.factors)
    if f.complete:
        return known, known
    extra_hi = max(1, int(math.log(f.cofactor) / math.log(TRIAL_LIMIT)))
    return known + 1, known + extra_hi


def W(f: Factorization) -> int:
    return 2 ** omega(f)


def W_bounds(f: Factorization) -> tuple[int, int]:
    lo, hi = omega_bounds(f)
    return 2 ** lo, 2 ** hi


def euler_phi(f: Factorization) -> int:
    if not f.complete:
        raise IncompleteFactorization(f"phi of incomplete factorization of {f.value}", f)
    result = 1
    for p, a in f.factors:
        result *= (p - 1) * p ** (a - 1)
    return result


def mobius(f: Factorization) -> int:
    if not f.complete:
        raise IncompleteFactorization(f"mobius of incomplete factorization of {f.value}", f)
    if any(a > 1 for _, a in f.factors):
        return 0
    return -1 if len(f.factors) % 2 else 1


def theta(f: Factorization) -> Fraction:
    """phi(e)/e as an exact rational."""
    return Fraction(euler_phi(f), f.value)


def radical(f: Factorization) -> int:
    if not f.complete:
        raise IncompleteFactorization(f"radical of incomplete factorization of {f.value}", f)
    result = 1
    for p, _ in f.factors:
        result *= p
    return result


def divisors(f: Factorization) -> list[int]:
    if not f.complete:
        raise IncompleteFactorization(f"divisors of incomplete factorization of {f.value}", f)
    divs = [1]
    for p, a in f.factors:
        divs = [d * p ** e for d in divs for e in range(a + 1)]
    return sorted(divs)


def squarefree_divisors(f: Factorization) -> list[int]:
    divs = [1]
    for p, _ in f.factors:
        divs = divs + [d * p for d in divs]
    return sorted(divs)


def coprime_part_Q(e: Factorization, q: int) -> Factorization:
    """Largest divisor of e coprime to gcd(e, q-1): strip shared primes entirely."""
    if not e.complete:
        raise IncompleteFactorization(f"coprime part of incomplete factorization of {e.value}", e)
    delta = math.gcd(e.value, q - 1)
    kept = [(p, a) for p, a in e.factors if delta % p != 0]
    value = 1
    for p, a in kept:
        value *= p ** a
    return Factorization(value, kept)


def multiplicative_order(a: int, modulus: int) -> int:
    """Order of a modulo `modulus` (requires gcd(a, modulus) = 1)."""
    if modulus == 1:
        return 1
    if math.gcd(a, modulus) != 1:
        raise ValueError(f"{a} not invertible mod {modulus}")
    t = euler_phi(factorize(modulus))
    order = t
    for p, _ in factorize(t).factors:
        while order % p == 0 and pow(a, order // p, modulus) == 1:
            order //= p
    return order


# ---------------------------------------------------------------------------
# bound constants
# ---------------------------------------------------------------------------


def w_bound_constant(r: float, f: Factorization) -> float:
    """Constant C with W(m) < C * m^(1/r): 2^w / (product of primes of m <= 2^r)^(1/r)."""
    if not f.complete:
        raise IncompleteFactorization(f"constant of incomplete factorization of {f.value}", f)
    bound = 2.0 ** r
    small = [p for p, _ in f.factors if p <= bound]
    log_c = len(small) * math.log(2) - math.fsum(math.log(p) for p in small) / r
    return math.exp(log_c)


def _prime_log_sum(bound: int) -> tuple[int, float]:
    """(number of primes <= bound, sum of their natural logs), segmented."""
    import numpy as np

    if bound < 2:
        return 0, 0.0
    base = smallprimes(int(math.isqrt(bound)) + 1)
    count, log_sum = 0, 0.0
    seg = 1 << 22
    lo = 2
    while lo <= bound:
        hi = min(lo + seg, bound + 1)
        mask = np.ones(hi - lo, dtype=bool)
        for p in base:
            if p * p >= hi:
                break
            start = max(p * p, ((lo + p - 1) // p) * p)
            mask[start - lo :: p] = False
        if lo <= 1:
            mask[: 2 - lo] = False
        vals = np.nonzero(mask)[0] + lo
        count += len(vals)
        log_sum += float(np.log(vals.astype(np.float64)).sum()) if len(vals) else 0.0
        lo = hi
    return count, log_sum


def c_max(r: float) -> float:
    """Supremum of w_bound_constant over all m: product of 2/p^(1/r) over ALL primes p <= 2^r."""
    if r > 32:
        raise RangeExceeded("r > 32 exceeds the prime table bound")
    if r < 1:
        return 1.0
    bound = int(2.0 ** r)
    count, log_sum = _prime_log_sum(bound)
    log_c = count * math.log(2) - log_sum / r
    return math.exp(log_c)


def primorial(count: int) -> int:
    """Product of the first `count` primes (exact)."""
    if count > 10 ** 5:
        raise RangeExceeded("count > 10^5")
    result = 1
    for p in nth_primes(count):
        result *= p
    return result


def primorial_exceeds(count: int, threshold) -> bool:
    """True iff the product of the first `count` primes exceeds threshold (exact)."""
    prod = primorial(count)
    if isinstance(threshold, float):
        threshold = Fraction(threshold)
    return prod > threshold

"""Structure of x^n - 1 over F_q.

Degrees and multiplicities of the irreducible factors come from cyclotomic
cosets; explicit factor polynomials are materialized on demand by a seeded
deterministic distinct-degree / equal-degree factorization that works over
any field presented through a small ops object.
"""

from __future__ import annotations

import math
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .intarith import is_prime_power, multiplicative_order

__all__ = [
    "NotCoprime",
    "XnFactorization",
    "cyclotomic_cosets",
    "factor_xn_minus_1",
    "poly_euler_phi",
    "poly_mobius",
    "Theta",
    "W_xn",
    "W_xn_bounds_check",
    "pi_ratio",
    "pi_ratio_case",
    "PrimeFieldOps",
    "poly_trim",
    "poly_deg",
    "poly_add",
    "poly_sub",
    "poly_scale",
    "poly_mul",
    "poly_divmod",
    "poly_mod",
    "poly_gcd",
    "poly_monic",
    "poly_pow_mod",
    "poly_eval",
    "poly_is_irreducible",
    "factor_squarefree_poly",
    "materialize_xn_factors",
]


class NotCoprime(ValueError):
    pass


# ---------------------------------------------------------------------------
# cosets and degree structure
# ---------------------------------------------------------------------------


def cyclotomic_cosets(q: int, n_prime: int) -> list[list[int]]:
    """Orbits of multiplication by q on Z/n', each sorted; orbits sorted by minimum."""
    if n_prime < 1:
        raise ValueError("n_prime must be positive")
    if math.gcd(q, n_prime) != 1:
        raise NotCoprime(f"gcd({q}, {n_prime}) != 1")
    if n_prime == 1:
        return [[0]]
    qr = q % n_prime
    seen = bytearray(n_prime)
    cosets = []
    for s in range(n_prime):
        if seen[s]:
            continue
        orbit = []
        t = s
        while not seen[t]:
            seen[t] = 1
            orbit.append(t)
            t = t * qr % n_prime
        cosets.append(sorted(orbit))
    return cosets


@dataclass
class XnFactorization:
    """Irreducible factor structure of x^n - 1 over F_q, q = p^k.

    n = n_prime * p_power with gcd(n_prime, p) = 1; x^n - 1 =
    (x^n_prime - 1)^p_power, and x^n_prime - 1 is squarefree with one
    irreducible factor per cyclotomic coset (degree = coset size).
    """

    q: int
    n: int
    n_prime: int
    p_power: int
    distinct_factors: list[tuple[int, int]]  # (degree, how many of that degree)
    multiplicity: int  # = p_power, applied to every factor

    def distinct_count(self) -> int:
        return sum(c for _, c in self.distinct_factors)

    def parts(self) -> list[tuple[int, int]]:
        """Per-irreducible (degree, multiplicity) list for the full x^n - 1."""
        out = []
        for d, c in self.distinct_factors:
            out.extend([(d, self.multiplicity)] * c)
        return out

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "n_prime": self.n_prime,
            "p_power": self.p_power,
            "factors": [[d, c] for d, c in self.distinct_factors],
        }


def factor_xn_minus_1(q: int, n: int) -> XnFactorization:
    pk = is_prime_power(q)
    if pk is None:
        raise ValueError(f"{q} is not a prime power")
    p, _ = pk
    n_prime, p_power = n, 1
    while n_prime % p == 0:
        n_prime //= p
        p_power *= p
    sizes = Counter(len(c) for c in cyclotomic_cosets(q, n_prime))
    distinct = sorted(sizes.items())
    return XnFactorization(q, n, n_prime, p_power, distinct, p_power)


def poly_euler_phi(q: int, parts) -> int:
    """Phi_q of a product of distinct irreducibles given as (degree, multiplicity) pairs."""
    result = 1
    for d, m in parts:
        if m < 1:
            raise ValueError("multiplicities must be >= 1")
        result *= q ** (d * m) - q ** (d * (m - 1))
    return result


def poly_mobius(parts) -> int:
    parts = list(parts)
    if any(m > 1 for _, m in parts):
        return 0
    return -1 if len(parts) % 2 else 1


def Theta(q: int, parts) -> Fraction:
    """Phi_q(g) / q^deg(g)."""
    parts = list(parts)
    deg = sum(d * m for d, m in parts)
    return Fraction(poly_euler_phi(q, parts), q ** deg)


def W_xn(q: int, n: int) -> int:
    """Number of squarefree monic divisors of x^n - 1 over F_q."""
    return 2 ** factor_xn_minus_1(q, n).distinct_count()


def W_xn_bounds_check(q: int, n: int) -> dict:
    """Exact W(x^n - 1) plus the three standing bounds on it.

    With g = gcd(n, q-1): W <= 2^((n+g)/2) always; W = 2^n exactly when
    n | q-1; and W <= 2^(3n/4) when n does not divide q-1.  Comparisons are
    exact (integer powers of W against powers of two).
    """
    w = W_xn(q, n)
    g = math.gcd(n, q - 1)
    splits = (q - 1) % n == 0
    record = {
        "W": w,
        "gcd_n_qm1": g,
        "half_sum_bound_ok": w * w <= 2 ** (n + g),
        "split_case_equality_ok": (w == 2 ** n) == splits,
        "three_quarter_bound_ok": None if splits else w ** 4 <= 2 ** (3 * n),
    }
    return record


def pi_ratio(q: int, n_prime: int) -> Fraction:
    """(number of irreducible factors of x^n' - 1 of degree below the maximal
    degree d = ord(q mod n')) divided by n'."""
    cosets = cyclotomic_cosets(q, n_prime)
    if n_prime == 1:
        return Fraction(0, 1)
    d = multiplicative_order(q % n_prime, n_prime)
    n0 = sum(1 for c in cosets if len(c) < d)
    return Fraction(n0, n_prime)


def pi_ratio_case(q: int, n_prime: int) -> tuple[str, Fraction | None]:
    """Classify (q, n') into the special exact-value cases of the factor-count
    ratio for q a power of 7, n' > 4 coprime to 7.

    Returns (tag, value) where tag is one of "exact-1/2", "exact-3/8",
    "exact-13/36", "bound-1/3", or "out-of-scope"; value is the exact ratio
    for the first three, the bound 1/3 for the fourth, None otherwise.
    A matched exact case is cross-checked against the computed ratio.
    """
    pk = is_prime_power(q)
    if pk is None or pk[0] != 7 or n_prime <= 4 or n_prime % 7 == 0:
        return "out-of-scope", None
    n1 = math.gcd(n_prime, q - 1)
    pi = pi_ratio(q, n_prime)
    if n_prime == 2 * n1:
        tag, expected = "exact-1/2", Fraction(1, 2)
    elif n_prime == 4 * n1 and q % 4 == 1:
        tag, expected = "exact-3/8", Fraction(3, 8)
    elif n_prime == 6 * n1 and q % 6 == 1:
        tag, expected = "exact-13/36", Fraction(13, 36)
    else:
        if pi > Fraction(1, 3):
            raise RuntimeError(f"ratio {pi} exceeds 1/3 for ({q}, {n_prime})")
        return "bound-1/3", Fraction(1, 3)
    if pi != expected:
        raise RuntimeError(f"classified {tag} but computed {pi} for ({q}, {n_prime})")
    return tag, expected


# ---------------------------------------------------------------------------
# dense polynomial arithmetic over a field given by an ops object
# ---------------------------------------------------------------------------


class PrimeFieldOps:
    """F_p with elements as plain ints in [0, p)."""

    def __init__(self, p: int):
        self.p = p
        self.size = p
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def random_element(self, rng: random.Random):
        return rng.randrange(self.p)


def poly_trim(f: list) -> list:
    # ops objects are required to encode the zero element as int 0
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_deg(f: list) -> int:
    return len(f) - 1  # -1 for the zero polynomial []


def poly_add(ops, f: list, g: list) -> list:
    n = max(len(f), len(g))
    out = []
    for i in range(n):
        a = f[i] if i < len(f) else ops.zero
        b = g[i] if i < len(g) else ops.zero
        out.append(ops.add(a, b))
    return poly_trim(out)


def poly_sub(ops, f: list, g: list) -> list:
    n = max(len(f), len(g))
    out = []
    for i in range(n):
        a = f[i] if i < len(f) else ops.zero
        b = g[i] if i < len(g) else ops.zero
        out.append(ops.sub(a, b))
    return poly_trim(out)


def poly_scale(ops, f: list, c) -> list:
    return poly_trim([ops.mul(a, c) for a in f])


def poly_mul(ops, f: list, g: list) -> list:
    if not f or not g:
        return []
    out = [ops.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == ops.zero:
            continue
        for j, b in enumerate(g):
            out[i + j] = ops.add(out[i + j], ops.mul(a, b))
    return poly_trim(out)


def poly_divmod(ops, f: list, g: list) -> tuple[list, list]:
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    f = list(f)
    dg = len(g) - 1
    lead_inv = ops.inv(g[-1])
    quot = [ops.zero] * max(0, len(f) - dg)
    while len(f) - 1 >= dg and f:
        shift = len(f) - 1 - dg
        c = ops.mul(f[-1], lead_inv)
        quot[shift] = c
        for i in range(dg + 1):
            f[shift + i] = ops.sub(f[shift + i], ops.mul(c, g[i]))
        poly_trim(f)
    return poly_trim(quot), f


def poly_mod(ops, f: list, g: list) -> list:
    return poly_divmod(ops, f, g)[1]


def poly_monic(ops, f: list) -> list:
    if not f:
        return f
    if f[-1] == ops.one:
        return list(f)
    return poly_scale(ops, f, ops.inv(f[-1]))


def poly_gcd(ops, f: list, g: list) -> list:
    a, b = list(f), list(g)
    while b:
        a, b = b, poly_mod(ops, a, b)
    return poly_monic(ops, a)


def poly_pow_mod(ops, base: list, exp: int, mod: list) -> list:
    result = [ops.one]
    base = poly_mod(ops, base, mod)
    while exp > 0:
        if exp & 1:
            result = poly_mod(ops, poly_mul(ops, result, base), mod)
        base = poly_mod(ops, poly_mul(ops, base, base), mod)
        exp >>= 1
    return result


def poly_eval(ops, f: list, x):
    acc = ops.zero
    for c in reversed(f):
        acc = ops.add(ops.mul(acc, x), c)
    return acc


def _poly_x() -> list:
    return [0, 1]


def poly_is_irreducible(ops, f: list, field_size: int) -> bool:
    """Deterministic irreducibility test: x^(size^i) - x gcd filter."""
    n = poly_deg(f)
    if n <= 0:
        return False
    if n == 1:
        return True
    x = [ops.zero, ops.one]
    xp = poly_pow_mod(ops, x, field_size, f)
    power = xp
    for i in range(1, n // 2 + 1):
        g = poly_gcd(ops, poly_sub(ops, power, x), f)
        if poly_deg(g) > 0:
            return False
        power = poly_pow_mod(ops, power, field_size, f)
    # no factor of degree <= n/2 exists
    return True


def _ddf(ops, f: list, field_size: int) -> list[tuple[int, list]]:
    """Distinct-degree split of a monic squarefree f: [(d, product of degree-d factors)]."""
    out = []
    x = [ops.zero, ops.one]
    rest = list(f)
    power = list(x)
    d = 0
    while poly_deg(rest) > 0:
        d += 1
        if 2 * d > poly_deg(rest):
            out.append((poly_deg(rest), rest))
            break
        power = poly_pow_mod(ops, power, field_size, rest)
        g = poly_gcd(ops, poly_sub(ops, power, x), rest)
        if poly_deg(g) > 0:
            out.append((d, g))
            rest = poly_divmod(ops, rest, g)[0]
    return out


def _edf(ops, f: list, d: int, field_size: int, rng: random.Random) -> list[list]:
    """Equal-degree split of monic f = product of distinct irreducibles of degree d."""
    n = poly_deg(f)
    if n == d:
        return [poly_monic(ops, f)]
    work = [f]
    done: list[list] = []
    while work:
        g = work.pop()
        if poly_deg(g) == d:
            done.append(poly_monic(ops, g))
            continue
        r = poly_trim([ops.random_element(rng) for _ in range(poly_deg(g))])
        if poly_deg(r) < 1:
            work.append(g)
            continue
        if field_size % 2 == 1:
            s = poly_pow_mod(ops, r, (field_size ** d - 1) // 2, g)
            s = poly_sub(ops, s, [ops.one])
        else:
            # characteristic 2: use the trace map sum r^(2^i)
            k = field_size.bit_length() - 1  # size = 2^k
            s = [ops.zero]
            t = poly_mod(ops, r, g)
            for _ in range(d * k):
                s = poly_add(ops, s, t)
                s = poly_mod(ops, s, g)
                t = poly_mod(ops, poly_mul(ops, t, t), g)
        h = poly_gcd(ops, s, g)
        if 0 < poly_deg(h) < poly_deg(g):
            work.append(h)
            work.append(poly_divmod(ops, g, h)[0])
        else:
            work.append(g)
    return done


def factor_squarefree_poly(ops, f: list, field_size: int, seed: int = 0) -> list[list]:
    """Monic irreducible factors of a monic squarefree f, deterministically
    (the internal randomness is seeded from (seed, deg f, field size))."""
    rng = random.Random(seed * 1_000_003 + poly_deg(f) * 1009 + field_size)
    factors = []
    for d, block in _ddf(ops, poly_monic(ops, f), field_size):
        factors.extend(_edf(ops, block, d, field_size, rng))
    factors.sort(key=lambda p: (poly_deg(p), p))
    return factors


def materialize_xn_factors(ops, field_size: int, n_prime: int, seed: int = 0) -> list[list]:
    """Explicit monic irreducible factors of x^n' - 1 (n' coprime to the characteristic)."""
    f = [ops.neg(ops.one)] + [ops.zero] * (n_prime - 1) + [ops.one]
    return factor_squarefree_poly(ops, f, field_size, seed=seed)

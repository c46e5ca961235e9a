"""Exact arithmetic in the tower F_p <= F_q <= F_{q^n}.

A context realizes F_{q^n} as F_p[x]/(modulus) with x primitive whenever the
deterministic search finds such a modulus, so discrete-log tables come out of
the construction for free.  Elements are integer codes: the base-p digit
encoding of the coefficient vector (little-endian by degree), hence code 0 is
the zero element and codes 0..p-1 are the prime-field constants.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import polyfactor as pf
from .intarith import (
    Factorization,
    FactorHintCache,
    factorize_q_pow_n_minus_1,
    is_prime,
    radical,
)

__all__ = [
    "ZeroElement",
    "Pole",
    "BudgetExceeded",
    "FieldContext",
    "RationalFunction",
    "build_context",
    "frobenius",
    "trace",
    "norm",
    "prenorm",
    "element_order",
    "is_primitive",
    "is_primitive_subfield",
    "is_e_free",
    "module_action",
    "fq_order",
    "is_g_free",
    "is_normal",
    "minimal_polynomial",
    "evaluate_rational",
    "make_rational",
    "MAX_CONTEXT_SIZE",
]

MAX_CONTEXT_SIZE = 1 << 22


class ZeroElement(ValueError):
    pass


class Pole(Exception):
    """f2(eps) = 0 at the requested point: an expected outcome, not an error."""


class BudgetExceeded(RuntimeError):
    pass


def _encode(coeffs: list[int], p: int) -> int:
    code = 0
    for c in reversed(coeffs):
        code = code * p + c
    return code


def _decode(code: int, p: int, length: int) -> list[int]:
    out = []
    for _ in range(length):
        code, c = divmod(code, p)
        out.append(c)
    return out


def _step_times_x(coeffs: list[int], modulus: list[int], p: int) -> list[int]:
    """coeffs * x reduced mod the monic `modulus` (coeffs has len = deg modulus)."""
    lead = coeffs[-1]
    out = [0] + coeffs[:-1]
    if lead:
        for i, m in enumerate(modulus[:-1]):
            out[i] = (out[i] - lead * m) % p
    return out


@dataclass
class FieldContext:
    """Immutable description of F_{q^n} = F_p[x]/(modulus_qn), q = p^k."""

    p: int
    k: int
    n: int
    seed: int
    modulus_qn: tuple[int, ...]  # length kn+1, monic, over F_p
    modulus_q: tuple[int, ...]  # length k+1, monic, over F_p
    generator: int  # element code, multiplicative order q^n - 1
    subfield_root: int  # code of the chosen root of modulus_q, realizing F_q
    qn1: Factorization  # factorization of q^n - 1
    pow_code: np.ndarray = field(repr=False)  # j -> code of generator^j
    dlog_code: np.ndarray = field(repr=False)  # code -> j (or -1 for 0)

    @property
    def q(self) -> int:
        return self.p ** self.k

    @property
    def size(self) -> int:
        return self.p ** (self.k * self.n)

    # -- scalar arithmetic on codes ------------------------------------------

    def decode(self, code: int) -> list[int]:
        return _decode(code, self.p, self.k * self.n)

    def encode(self, coeffs: list[int]) -> int:
        if len(coeffs) > self.k * self.n:
            raise ValueError("coefficient vector too long")
        return _encode([c % self.p for c in coeffs], self.p)

    def add(self, a: int, b: int) -> int:
        p = self.p
        va, vb = self.decode(a), self.decode(b)
        return _encode([(x + y) % p for x, y in zip(va, vb)], p)

    def sub(self, a: int, b: int) -> int:
        p = self.p
        va, vb = self.decode(a), self.decode(b)
        return _encode([(x - y) % p for x, y in zip(va, vb)], p)

    def neg(self, a: int) -> int:
        p = self.p
        return _encode([(-x) % p for x in self.decode(a)], p)

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        m = self.size - 1
        j = (int(self.dlog_code[a]) + int(self.dlog_code[b])) % m
        return int(self.pow_code[j])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        m = self.size - 1
        return int(self.pow_code[(-int(self.dlog_code[a])) % m])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow_el(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        m = self.size - 1
        return int(self.pow_code[int(self.dlog_code[a]) * (e % m) % m])

    def dlog(self, a: int) -> int:
        if a == 0:
            raise ZeroElement("discrete log of zero")
        return int(self.dlog_code[a])

    # -- subfield -------------------------------------------------------------

    @cached_property
    def subfield_codes(self) -> np.ndarray:
        """Sorted codes of the embedded F_q."""
        if self.q == self.size:
            return np.arange(self.size, dtype=np.int64)
        step = (self.size - 1) // (self.q - 1)
        codes = [0] + [int(self.pow_code[j * step]) for j in range(self.q - 1)]
        return np.array(sorted(codes), dtype=np.int64)

    def in_subfield(self, a: int) -> bool:
        idx = int(np.searchsorted(self.subfield_codes, a))
        return idx < len(self.subfield_codes) and int(self.subfield_codes[idx]) == a

    def embed(self, coeffs: list[int]) -> int:
        """Image of sum(coeffs[i] * y^i) where y is the chosen root of modulus_q."""
        acc = 0
        for c in reversed(coeffs):
            acc = self.add(self.mul(acc, self.subfield_root), c % self.p)
        return acc

    def abs_trace(self, a: int) -> int:
        """Trace down to F_p (an integer in [0, p))."""
        acc = 0
        cur = a
        for _ in range(self.k * self.n):
            acc = self.add(acc, cur)
            cur = self.pow_el(cur, self.p)
        assert acc < self.p
        return acc

    def subfield_abs_trace(self, a: int) -> int:
        """Trace of an embedded F_q element down to F_p."""
        acc = 0
        cur = a
        for _ in range(self.k):
            acc = self.add(acc, cur)
            cur = self.pow_el(cur, self.p)
        assert acc < self.p
        return acc

    def subfield_dlog(self, b: int) -> int:
        """Index s with b = N(generator)^s, for nonzero embedded F_q elements."""
        if b == 0:
            raise ZeroElement("discrete log of zero")
        step = (self.size - 1) // (self.q - 1)
        j = self.dlog(b)
        if j % step:
            raise ValueError(f"element {b} is not in the embedded F_q")
        return j // step

    @cached_property
    def subfield_trace_tbl(self) -> np.ndarray:
        """code -> trace down to F_p for embedded F_q codes (-1 elsewhere)."""
        out = np.full(self.size, -1, dtype=np.int64)
        for c in self.subfield_codes:
            out[int(c)] = self.subfield_abs_trace(int(c))
        return out

    # -- vectorized tables (bulk numpy paths for exhaustive scans) -------------

    @cached_property
    def _p_powers(self) -> np.ndarray:
        m = self.k * self.n
        return self.p ** np.arange(m, dtype=np.int64)

    def digit_matrix(self, codes: np.ndarray) -> np.ndarray:
        """Base-p digits of the given codes, shape (..., k*n)."""
        return (codes[..., None] // self._p_powers) % self.p

    def bulk_add(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        dig = (self.digit_matrix(A) + self.digit_matrix(B)) % self.p
        return dig @ self._p_powers

    def bulk_neg(self, A: np.ndarray) -> np.ndarray:
        dig = (-self.digit_matrix(A)) % self.p
        return dig @ self._p_powers

    def bulk_mul(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        A, B = np.broadcast_arrays(A, B)
        out = np.zeros(A.shape, dtype=np.int64)
        nz = (A != 0) & (B != 0)
        m = self.size - 1
        out[nz] = self.pow_code[(self.dlog_code[A[nz]] + self.dlog_code[B[nz]]) % m]
        return out

    def inverse_table(self) -> np.ndarray:
        """code -> code of the inverse (index 0 unused, set to -1)."""
        m = self.size - 1
        out = np.full(self.size, -1, dtype=np.int64)
        nonzero = np.arange(1, self.size, dtype=np.int64)
        out[nonzero] = self.pow_code[(m - self.dlog_code[nonzero]) % m]
        return out

    def frobenius_table(self, i: int) -> np.ndarray:
        """code -> code of (element)^(q^i) for every element."""
        m = self.size - 1
        mult = pow(self.q, i % self.n, m)
        out = np.zeros(self.size, dtype=np.int64)
        nonzero = np.arange(1, self.size, dtype=np.int64)
        out[nonzero] = self.pow_code[self.dlog_code[nonzero] * mult % m]
        return out

    def abs_trace_table(self) -> np.ndarray:
        """code -> absolute trace in F_p, for every element (linear-map expansion)."""
        mdeg = self.k * self.n
        basis = np.array(
            [self.abs_trace(self.encode([0] * i + [1])) for i in range(mdeg)],
            dtype=np.int64,
        )
        codes = np.arange(self.size, dtype=np.int64)
        return (self.digit_matrix(codes) @ basis) % self.p

    # -- ops objects for the generic polynomial machinery ---------------------

    def field_ops(self) -> "_CtxOps":
        return _CtxOps(self, self.size)

    def subfield_ops(self) -> "_CtxOps":
        return _CtxOps(self, self.q)

    # -- structure of x^n - 1 over the embedded F_q ---------------------------

    @cached_property
    def xn_structure(self):
        """(list of irreducible factor polys of x^n' - 1 over embedded F_q, p_power)."""
        n_prime, p_power = self.n, 1
        while n_prime % self.p == 0:
            n_prime //= self.p
            p_power *= self.p
        factors = pf.materialize_xn_factors(self.subfield_ops(), self.q, n_prime,
                                            seed=self.seed)
        return factors, p_power

    def xn1_poly(self) -> list[int]:
        out = [0] * (self.n + 1)
        out[0] = self.neg(1)
        out[self.n] = 1
        return pf.poly_trim(out)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "k": self.k,
            "n": self.n,
            "modulus_qn": list(self.modulus_qn),
            "modulus_q": list(self.modulus_q),
            "generator": self.decode(self.generator),
        }


class _CtxOps:
    """Field-ops facade over a context, for the polyfactor machinery.

    `size` selects the universe random elements are drawn from: the full
    field or the embedded subfield (arithmetic is identical).
    """

    def __init__(self, ctx: FieldContext, size: int):
        self.ctx = ctx
        self.size = size
        self.zero = 0
        self.one = 1

    def add(self, a, b):
        return self.ctx.add(a, b)

    def sub(self, a, b):
        return self.ctx.sub(a, b)

    def neg(self, a):
        return self.ctx.neg(a)

    def mul(self, a, b):
        return self.ctx.mul(a, b)

    def inv(self, a):
        return self.ctx.inv(a)

    def random_element(self, rng: random.Random):
        if self.size == self.ctx.size:
            return rng.randrange(self.ctx.size)
        codes = self.ctx.subfield_codes
        return int(codes[rng.randrange(len(codes))])


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------


def _find_irreducible(p: int, degree: int) -> list[int]:
    """First monic irreducible of given degree over F_p in code order."""
    ops = pf.PrimeFieldOps(p)
    for code in range(p ** degree):
        poly = _decode(code, p, degree) + [1]
        if pf.poly_is_irreducible(ops, poly, p):
            return poly
    raise RuntimeError("no irreducible polynomial found")  # unreachable


def _order_is_full(ctx_size: int, mulmod, candidate, qn1: Factorization) -> bool:
    m = ctx_size - 1
    for l in qn1.primes():
        if _pow_generic(mulmod, candidate, m // l) == 1:
            return False
    return True


def _pow_generic(mulmod, base, e: int):
    result = 1
    while e:
        if e & 1:
            result = mulmod(result, base)
        base = mulmod(base, base)
        e >>= 1
    return result


def build_context(p: int, k: int, n: int, seed: int = 0,
                  hints: FactorHintCache | None = None) -> FieldContext:
    """Deterministically construct F_{q^n} over F_q = F_{p^k} with dlog tables.

    The modulus search prefers polynomials whose residue class x is itself
    primitive (so the power table is built by shift-and-reduce); the fallback
    keeps the first irreducible modulus and searches generator candidates in
    code order.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1 or n < 1:
        raise ValueError("k and n must be positive")
    m = k * n
    size = p ** m
    if size > MAX_CONTEXT_SIZE:
        raise ValueError(f"field size {size} exceeds the exhaustive-context cap "
                         f"{MAX_CONTEXT_SIZE}")
    qn1 = factorize_q_pow_n_minus_1(p, m, hints=hints)
    if not qn1.complete:
        raise BudgetExceeded(f"cannot certify a generator: {p}^{m}-1 not fully factored")

    ops = pf.PrimeFieldOps(p)
    modulus = None
    pow_codes: list[int] = []
    generator_code = None
    tried = 0
    for code in range(p ** m):
        poly = _decode(code, p, m) + [1]
        if poly[0] == 0:  # x | modulus: the class of x is 0 (only arises m = 1)
            continue
        if not pf.poly_is_irreducible(ops, poly, p):
            continue
        tried += 1
        # build the power table with x as generator; aborts cheaply when x
        # has smaller order (the cycle closes before size-1 steps)
        ok, table = _try_table_from_x(poly, p, m, size)
        if ok:
            modulus = poly
            pow_codes = table
            # code of the class of x (= p unless m = 1, where x reduces)
            generator_code = table[1] if len(table) > 1 else 1
            break
        if modulus is None:
            modulus = poly  # remember the first irreducible for the fallback
        if tried >= 64:
            break
    if generator_code is None:
        # fallback: generic generator search over the first irreducible modulus
        poly = modulus

        def mulmod(a, b):
            pa = _decode(a, p, m)
            pb = _decode(b, p, m)
            prod = pf.poly_mod(ops, pf.poly_mul(ops, pa, pb), poly)
            return _encode(prod + [0] * (m - len(prod)), p)

        for cand in range(2, size):
            if _order_is_full(size, mulmod, cand, qn1):
                generator_code = cand
                break
        pow_codes = [1] * (size - 1)
        for j in range(1, size - 1):
            pow_codes[j] = mulmod(pow_codes[j - 1], generator_code)

    pow_arr = np.array(pow_codes, dtype=np.int64)
    dlog_arr = np.full(size, -1, dtype=np.int64)
    dlog_arr[pow_arr] = np.arange(size - 1, dtype=np.int64)

    modulus_q = _find_irreducible(p, k) if k > 1 else [0, 1]
    ctx = FieldContext(
        p=p, k=k, n=n, seed=seed,
        modulus_qn=tuple(modulus),
        modulus_q=tuple(modulus_q),
        generator=generator_code,
        subfield_root=0,
        qn1=qn1,
        pow_code=pow_arr,
        dlog_code=dlog_arr,
    )
    ctx.subfield_root = _subfield_root(ctx, modulus_q) if k > 1 else 0
    _spot_check_embedding(ctx)
    return ctx


def _try_table_from_x(modulus: list[int], p: int, m: int, size: int):
    """Power table of the class of x, or (False, None) if x is not primitive."""
    table = [1]
    coeffs = [0] * m
    if m == 1:
        coeffs[0] = (-modulus[0]) % p  # x reduces to a constant
    else:
        coeffs[1] = 1
    cur = coeffs
    code = _encode(cur, p)
    steps = 0
    while code != 1:
        table.append(code)
        cur = _step_times_x(cur, modulus, p)
        code = _encode(cur, p)
        steps += 1
        if steps > size:
            raise RuntimeError("power table runaway")  # cannot happen
    if len(table) == size - 1:
        return True, table
    return False, None


def _subfield_root(ctx: FieldContext, modulus_q: list[int]) -> int:
    """Smallest-code root of modulus_q inside the context (it lies in F_q)."""
    q, size = ctx.q, ctx.size
    step = (size - 1) // (q - 1)
    candidates = [0] + [int(ctx.pow_code[j * step]) for j in range(q - 1)]
    roots = []
    for c in candidates:
        acc = 0
        for coef in reversed(modulus_q):
            acc = ctx.add(ctx.mul(acc, c), coef % ctx.p)
        if acc == 0:
            roots.append(c)
    if not roots:
        raise RuntimeError("modulus_q has no root in the subfield")  # impossible
    return min(roots)


def _spot_check_embedding(ctx: FieldContext) -> None:
    """Verify the F_q realization is a field homomorphism on random pairs."""
    if ctx.k == 1:
        return
    rng = random.Random(ctx.seed * 1_000_003 + ctx.p * 10_007 + ctx.k * 101 + ctx.n)
    ops = pf.PrimeFieldOps(ctx.p)
    mod_q = list(ctx.modulus_q)
    for _ in range(16):
        a = [rng.randrange(ctx.p) for _ in range(ctx.k)]
        b = [rng.randrange(ctx.p) for _ in range(ctx.k)]
        prod = pf.poly_mod(ops, pf.poly_mul(ops, a, b), mod_q)
        sum_ = pf.poly_add(ops, a, b)
        ea, eb = ctx.embed(a), ctx.embed(b)
        if ctx.embed(prod + [0] * ctx.k) != ctx.mul(ea, eb):
            raise RuntimeError("embedding fails multiplicativity")
        if ctx.embed(sum_ + [0] * ctx.k) != ctx.add(ea, eb):
            raise RuntimeError("embedding fails additivity")


# ---------------------------------------------------------------------------
# element-level operations
# ---------------------------------------------------------------------------


def frobenius(ctx: FieldContext, a: int, i: int) -> int:
    """a^(q^i); i may be any integer (period n)."""
    if a == 0:
        return 0
    m = ctx.size - 1
    mult = pow(ctx.q, i % ctx.n, m)
    return int(ctx.pow_code[ctx.dlog(a) * mult % m])


def trace(ctx: FieldContext, a: int) -> int:
    acc = 0
    for i in range(ctx.n):
        acc = ctx.add(acc, frobenius(ctx, a, i))
    assert ctx.in_subfield(acc)
    return acc


def norm(ctx: FieldContext, a: int) -> int:
    if a == 0:
        return 0
    result = ctx.pow_el(a, (ctx.size - 1) // (ctx.q - 1))
    assert ctx.in_subfield(result)
    return result


def prenorm(ctx: FieldContext, a: int) -> int:
    """Sum over i of the product of all conjugates of a except the i-th."""
    if ctx.n < 2:
        raise ValueError("prenorm requires extension degree n >= 2; the degree-one "
                         "case is excluded (the defining sum degenerates)")
    if a == 0:
        raise ZeroElement("prenorm of zero")
    conj = [frobenius(ctx, a, i) for i in range(ctx.n)]
    acc = 0
    for i in range(ctx.n):
        prod = 1
        for j in range(ctx.n):
            if j != i:
                prod = ctx.mul(prod, conj[j])
        acc = ctx.add(acc, prod)
    assert ctx.in_subfield(acc)
    return acc


def element_order(ctx: FieldContext, a: int) -> int:
    if a == 0:
        raise ZeroElement("order of zero")
    m = ctx.size - 1
    return m // math.gcd(ctx.dlog(a), m)


def is_primitive(ctx: FieldContext, a: int) -> bool:
    if a == 0:
        return False
    return math.gcd(ctx.dlog(a), ctx.size - 1) == 1


def is_primitive_subfield(ctx: FieldContext, b: int) -> bool:
    """True iff b generates the embedded F_q* (order exactly q - 1)."""
    if b == 0:
        return False
    return math.gcd(ctx.subfield_dlog(b), ctx.q - 1) == 1


def is_e_free(ctx: FieldContext, a: int, e: Factorization) -> bool:
    """No prime divisor l of e has a in the l-th powers of the unit group."""
    if a == 0:
        raise ZeroElement("freeness of zero")
    if (ctx.size - 1) % e.value != 0:
        raise ValueError(f"{e.value} does not divide q^n - 1")
    return math.gcd(ctx.dlog(a), radical(e)) == 1


def module_action(ctx: FieldContext, h: list[int], a: int) -> int:
    """sum of h_i * a^(q^i) — h given over the embedded F_q (codes)."""
    acc = 0
    for i, coef in enumerate(h):
        if coef:
            acc = ctx.add(acc, ctx.mul(coef, frobenius(ctx, a, i)))
    return acc


def _poly_pow_mult(ctx: FieldContext, base: list[int], e: int) -> list[int]:
    ops = ctx.subfield_ops()
    out = [1]
    for _ in range(e):
        out = pf.poly_mul(ops, out, base)
    return out


def fq_order(ctx: FieldContext, a: int) -> list[int]:
    """Minimal monic divisor of x^n - 1 annihilating a under the module action."""
    factors, p_power = ctx.xn_structure
    ops = ctx.subfield_ops()
    exps = []
    for idx, f in enumerate(factors):
        e = p_power
        while e > 0:
            cand = [1]
            for jdx, g in enumerate(factors):
                mult = p_power if jdx != idx else e - 1
                cand = pf.poly_mul(ops, cand, _poly_pow_mult(ctx, g, mult))
            if module_action(ctx, cand, a) != 0:
                break
            e -= 1
        exps.append(e)
    out = [1]
    for f, e in zip(factors, exps):
        out = pf.poly_mul(ops, out, _poly_pow_mult(ctx, f, e))
    return out


def is_g_free(ctx: FieldContext, a: int, g: list[int]) -> bool:
    """True iff no irreducible h | g has ((x^n-1)/h) annihilate a."""
    factors, _ = ctx.xn_structure
    ops = ctx.subfield_ops()
    xn1 = ctx.xn1_poly()
    for h in factors:
        _, rem = pf.poly_divmod(ops, list(g), h)
        if rem:
            continue  # h does not divide g
        cofactor, rem2 = pf.poly_divmod(ops, xn1, h)
        assert not rem2
        if module_action(ctx, cofactor, a) == 0:
            return False
    return True


def is_normal(ctx: FieldContext, a: int) -> bool:
    return is_g_free(ctx, a, ctx.xn1_poly())


def minimal_polynomial(ctx: FieldContext, a: int) -> list[int]:
    """Monic product of (x - c) over the distinct conjugates c of a."""
    seen = []
    cur = a
    while cur not in seen:
        seen.append(cur)
        cur = frobenius(ctx, cur, 1)
    ops = ctx.field_ops()
    out = [1]
    for c in seen:
        out = pf.poly_mul(ops, out, [ctx.neg(c), 1])
    assert all(ctx.in_subfield(c) for c in out)
    return out


# ---------------------------------------------------------------------------
# rational functions f = f1/f2 over F_{q^n}
# ---------------------------------------------------------------------------


@dataclass
class RationalFunction:
    """f1/f2 with f1, f2 polynomials over F_{q^n} (element-code coefficients)."""

    f1: list[int]
    f2: list[int]

    @property
    def m1(self) -> int:
        return pf.poly_deg(self.f1)

    @property
    def m2(self) -> int:
        return pf.poly_deg(self.f2)


def make_rational(ctx: FieldContext, f1: list[int], f2: list[int]) -> RationalFunction:
    """Validate the admissibility constraints: f1, f2 each irreducible or a
    nonzero constant, coprime, neither divisible by x, total degree >= 1."""
    ops = ctx.field_ops()
    f1, f2 = pf.poly_trim(list(f1)), pf.poly_trim(list(f2))
    if not f1 or not f2:
        raise ValueError("f1 and f2 must be nonzero")
    for poly, name in ((f1, "f1"), (f2, "f2")):
        d = pf.poly_deg(poly)
        if d == 0:
            continue
        if poly[0] == 0:
            raise ValueError(f"x divides {name}")
        if not pf.poly_is_irreducible(ops, poly, ctx.size):
            raise ValueError(f"{name} must be irreducible or a nonzero constant")
    if pf.poly_deg(f1) + pf.poly_deg(f2) < 1:
        raise ValueError("total degree m1 + m2 must be at least 1")
    if pf.poly_deg(pf.poly_gcd(ops, f1, f2)) > 0:
        raise ValueError("f1 and f2 must be coprime")
    return RationalFunction(f1, f2)


def evaluate_rational(ctx: FieldContext, f: RationalFunction, a: int) -> int:
    ops = ctx.field_ops()
    den = pf.poly_eval(ops, f.f2, a)
    if den == 0:
        raise Pole(f"denominator vanishes at element {a}")
    num = pf.poly_eval(ops, f.f1, a)
    return ctx.div(num, den)

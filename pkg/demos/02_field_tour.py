"""
A tour of one finite field: traces, norms, prenorms, freeness
=============================================================

Builds F_{7^2} over F_7 and exercises every per-element operation the
library exposes: field arithmetic through discrete-log tables, the Galois
maps, the prenorm (the trace of the inverse times the norm), primitivity,
normality, and the freeness predicates that generalize both.
"""

from pnsieve.ffield import (
    build_context,
    evaluate_rational,
    frobenius,
    is_e_free,
    is_g_free,
    is_normal,
    is_primitive,
    make_rational,
    minimal_polynomial,
    norm,
    prenorm,
    trace,
)
from pnsieve.intarith import factorize

# The context carries the modulus, exp/log tables, and the embedded base
# field; elements are integer codes 0 .. q^n - 1.
ctx = build_context(7, 1, 2)
print(f"built F_{ctx.size} over F_{ctx.q}; modulus code tables ready")

# Pick the canonical generator and show the Galois data.
g = ctx.generator
print("generator g:", g)
print("  conjugate g^q:", frobenius(ctx, g, 1))
print("  trace:", trace(ctx, g), " norm:", norm(ctx, g))
print("  minimal polynomial coefficients (low to high):",
      minimal_polynomial(ctx, g))

# The prenorm of eps is the sum over i of the product of all conjugates
# except the i-th — equivalently trace(1/eps) * norm(eps).
pn = prenorm(ctx, g)
print("  prenorm:", pn)
inv = ctx.inv(g)
assert pn == ctx.mul(trace(ctx, inv), norm(ctx, g))

# Primitive = generates the unit group; normal = the conjugates form a
# basis over F_q.  Both are instances of freeness conditions.
prim = [a for a in range(1, ctx.size) if is_primitive(ctx, a)]
nrml = [a for a in range(1, ctx.size) if is_normal(ctx, a)]
both = set(prim) & set(nrml)
print(f"{len(prim)} primitive, {len(nrml)} normal, {len(both)} both")

# e-free: no prime l | e has eps inside the l-th powers.  e = q^n - 1
# recovers primitivity exactly.
full = factorize(ctx.size - 1)
assert all(is_e_free(ctx, a, full) == is_primitive(ctx, a)
           for a in range(1, ctx.size))
print("e-free at e = q^n - 1 agrees with primitivity on every element")

# g-free with g = x^n - 1 recovers normality the same way.
xn1 = ctx.xn1_poly()
assert all(is_g_free(ctx, a, xn1) == is_normal(ctx, a)
           for a in range(1, ctx.size))
print("g-free at g = x^n - 1 agrees with normality on every element")

# Rational functions f1/f2 are first-class: validated (coprime, x divides
# neither, both parts irreducible or constant) and evaluated with explicit
# pole handling.
f = make_rational(ctx, [2, 1], [1, 1])  # (x + 2) / (x + 1)
print("f = (x+2)/(x+1) at g:", evaluate_rational(ctx, f, g))

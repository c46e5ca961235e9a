"""
Character sums as counting devices, checked against brute force
===============================================================

Freeness conditions have characteristic functions built from multiplicative
and additive characters.  On a field small enough to enumerate, those
averaged sums must land exactly on 0/1 indicators, the assembled counting
expression must equal the brute-force count, and every complete character
sum obeys the square-root cancellation bound.  This script shows all three.
"""

import numpy as np

from pnsieve.ffield import build_context, is_e_free, is_primitive_subfield, make_rational
from pnsieve.intarith import factorize
from pnsieve.oracle import (
    CharacterTable,
    count_direct,
    count_via_characters,
    enumerate_pair_counts,
    rho,
    weil_check_mixed,
    weil_check_multiplicative,
)

ctx = build_context(3, 1, 2)  # F_9 over F_3
table = CharacterTable(ctx)

# 1. Characteristic functions: the averaged character sum for "e-free"
# agrees with the direct predicate on every nonzero element.
e = factorize(ctx.size - 1)
vec = table.rho_vector(e)
direct = np.array([False] + [is_e_free(ctx, a, e) for a in range(1, ctx.size)])
residue = max(abs(vec[a] - direct[a]) for a in range(1, ctx.size))
print("e-free characteristic function on F_9: max residue", f"{residue:.2e}")
assert all(rho(table, a, e) == int(direct[a]) for a in range(1, ctx.size))

# 2. The full counting expression vs. exhaustive counting: pairs
# (eps, f(eps)) with eps primitive+normal and prescribed trace-like and
# norm-like values for f = x + 1.
f = make_rational(ctx, [1, 1], [1])
xn1 = ctx.xn1_poly()
for b in (b for b in range(1, 3) if is_primitive_subfield(ctx, b)):
    for a in range(3):
        approx = count_via_characters(table, f, a, b, e, e, xn1, xn1)
        exact = count_direct(ctx, f, a, b)
        print(f"  (a, b) = ({a}, {b}): character sum {approx:+.6f},"
              f" brute force {exact}")
        assert round(approx) == exact

# A compact per-(a, b) table for one field comes straight from the brute
# module the counting expression is checked against.
counts = enumerate_pair_counts(ctx, f)
print("pair counts (a, b) -> count:", dict(sorted(counts.items())))
print("  total over all pairs:", sum(counts.values()))

# 3. Square-root cancellation: |sum of chi(f(eps))| stays below
# (number of distinct roots - 1) * sqrt(field size) for chi of each order.
res = weil_check_multiplicative(table, [([0, 1], 1), ([1, 1], 1)], d=2)
print(f"multiplicative sum for x(x+1), order 2: |sum| = {res.lhs:.4f}"
      f" <= {res.rhs:.4f} -> ok={res.ok}")

# Mixed sums (a multiplicative and an additive character together) obey the
# same shape of bound; x + 1/x is the classical two-pole example.
ctx49 = build_context(7, 1, 2)
t49 = CharacterTable(ctx49)
res = weil_check_mixed(t49, [], [1, 0, 1], [([0, 1], 1)], chi_exp=0)
print(f"mixed sum for x + 1/x over F_49: |sum| = {res.lhs:.4f}"
      f" <= {res.rhs:.4f} -> ok={res.ok}")

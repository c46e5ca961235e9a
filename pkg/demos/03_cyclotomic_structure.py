"""
How x^n - 1 factors over F_q, without factoring polynomials
===========================================================

The degrees of the irreducible factors of x^n - 1 are the sizes of the
q-power cosets modulo n' (n with the characteristic part removed); the
multiplicity is the removed p-power.  This script derives the structure
combinatorially, confirms it against explicit coefficient lists, and
computes the divisor-count bound and the factor-count ratio the sieve uses.
"""

from pnsieve.polyfactor import (
    PrimeFieldOps,
    W_xn,
    cyclotomic_cosets,
    factor_xn_minus_1,
    materialize_xn_factors,
    pi_ratio,
    pi_ratio_case,
    poly_euler_phi,
    poly_mul,
)

# Degrees from cyclotomic cosets: 14 = 2 * 7 over F_7, so n' = 2 and the
# characteristic part contributes multiplicity 7 to each factor.
xnf = factor_xn_minus_1(7, 14)
print("x^14 - 1 over F_7:")
print("  distinct factor degrees (degree, count):", xnf.distinct_factors)
print("  each with multiplicity:", xnf.p_power)
print("  number of monic divisors W:", W_xn(7, 14))

# The cosets themselves, for a squarefree case: their sizes are the factor
# degrees of x^8 - 1 over F_3.
print("q-power cosets mod 8 for q = 3:", cyclotomic_cosets(3, 8))
small = factor_xn_minus_1(3, 8)
print("  degree counts:", small.distinct_factors)

# Materialize actual coefficient lists and multiply them back together:
# the product must be x^8 - 1 again.
ops = PrimeFieldOps(3)
polys = materialize_xn_factors(ops, 3, small.n_prime)
print("  explicit factors (low-to-high coefficients):", polys)
prod = [1]
for f in polys:
    prod = poly_mul(ops, prod, f)
assert prod == [-1 % 3] + [0] * 7 + [1]
print("  product check: the factors multiply back to x^8 - 1")

# Phi_q counts normal elements: apply it to the (degree, multiplicity) parts.
print("  normal elements in F_{3^8}:", poly_euler_phi(3, small.parts()))

# The proportion of low-degree factors pi has a closed form in three
# congruence cases and a uniform bound otherwise (q a power of 7 here).
for q, n_prime in [(7, 12), (49, 64), (7, 36), (7, 11)]:
    tag, val = pi_ratio_case(q, n_prime)
    print(f"factor ratio for (q, n') = ({q}, {n_prime}):"
          f" {pi_ratio(q, n_prime)}  [{tag}: {val}]")

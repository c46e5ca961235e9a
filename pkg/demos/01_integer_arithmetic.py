"""
Exact integer arithmetic: factoring q^n - 1 and tail constants
==============================================================

Everything downstream (freeness conditions, sieve sums, verdicts) rests on
the factorization of q^n - 1.  This script walks through the factoring
pipeline — trial division, cyclotomic splitting, Pollard rho, hint files —
and the two analytic constants used by the coarse bounds.
"""

from pnsieve.intarith import (
    W,
    W_bounds,
    c_max,
    coprime_part_Q,
    cyclotomic_value,
    divisors,
    euler_phi,
    factorize,
    factorize_q_pow_n_minus_1,
    omega,
    omega_bounds,
    primorial,
    primorial_exceeds,
)

# A plain factorization returns a structured object: prime powers, an
# unfactored cofactor (1 when complete), and derived quantities.
f = factorize(7 ** 6 - 1)
print("7^6 - 1 =", f)
print("  complete:", f.complete, " omega:", omega(f), " W = 2^omega:", W(f))

# q^n - 1 splits as the product of cyclotomic values Phi_d(q) over d | n,
# so the dedicated entry point factors the much smaller pieces one by one.
g = factorize_q_pow_n_minus_1(7, 11)
print("7^11 - 1 =", g)
print("  divisors of the squarefree part:", divisors(g)[:8], "...")

# The piece of q^n - 1 coprime to q - 1 is the part whose freeness is not
# already decided in the base field.
Q = coprime_part_Q(g, 7)
print("  part coprime to q - 1:", Q)

# Cyclotomic values are available directly.
print("Phi_11(7) =", cyclotomic_value(11, 7))

# phi over a factorization (used for counting primitive elements).
print("phi(7^6 - 1) =", euler_phi(f))

# When the budget runs out the factorization is honest about what is left:
# bounds on the number of remaining prime factors come with it.
h = factorize(2 ** 67 - 1, budget=0)
print("2^67 - 1 with no rho budget:", h)
print("  omega bounds:", omega_bounds(h), " W bounds:", W_bounds(h))

# Two constants close the argument for very large parameters: the maximum
# of prod (2 / p_i^(1/r)) over the first j primes, and primorial growth.
print("c_max(9.5) =", f"{c_max(9.5):.6e}")
print("primorial(5) = product of first 5 primes =", primorial(5))
print("first 2828 primes multiply past 2.24e11067:",
      primorial_exceeds(2828, 224 * 10 ** 11065))

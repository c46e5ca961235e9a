"""
The sieve inequality, worked end to end for (q, n) = (7, 11)
============================================================

The existence criterion compares a product of field-size terms against a
character-sum budget.  The basic form uses the full divisor counts; the
sieve drops large primes and polynomial factors from the freeness
conditions, paying for them through a positivity term S and a multiplier M.
This script shows the failure of the basic form, the exact S and M for a
good parameter choice, and the automated parameter search.
"""

from fractions import Fraction

from pnsieve.sieve import (
    SieveParams,
    basic_check,
    low_degree_M_bound,
    parse_g_spec,
    search_params,
    sieve_check,
    worst_case_sieve_bounds,
)

# The basic criterion alone: for (7, 11) with three prescribed prenorm
# classes it falls short.
rep = basic_check(7, 11, 3)
print(f"basic criterion for (7, 11, 3): lhs_log2 = {rep.lhs_log2:.3f},"
      f" rhs_log2 = {rep.rhs_log2:.3f} -> {rep.verdict}")

# Sieve parameters: keep only the primes of e' = 1 and e = 2 (dropping the
# two large primes of 7^11 - 1), and drop every factor of x^11 - 1 (g = 1).
params = SieveParams(e_prime=1, e=2, g_parts=parse_g_spec(7, 11, "1"))
rep = sieve_check(7, 11, 3, params)
print(f"sieve with e' = 1, e = 2, g = {rep.g_str()}:")
print(f"  S = {rep.S} = {rep.S_float:.15f}")
print(f"  M = {float(rep.M):.13f}")
print(f"  lhs_log2 = {rep.lhs_log2:.3f} > rhs_log2 = {rep.rhs_log2:.3f}"
      f" -> {rep.verdict}")

# S is exact rational arithmetic underneath: the dropped primes 1123 and
# 293459 are charged in both freeness sums, the dropped linear factors of
# x^11 - 1 twice with weight 1/7^deg.
S_hand = (1 - 2 * (Fraction(1, 1123) + Fraction(1, 293459))
          - 2 * (Fraction(1, 7) + Fraction(1, 7 ** 10)) - Fraction(1, 3))
assert rep.S == S_hand

# The search tries parameter ladders in a deterministic order and
# re-verifies whatever it returns (a full report, or None when nothing in
# the ladder works).
found = search_params(7, 11, 3)
print("search_params(7, 11, 3) ->",
      f"e' = {found.e_prime}, e = {found.e}, g = {found.g_str()},"
      f" verdict {found.verdict}")

# Large-n regimes use closed-form bounds instead of explicit parameters:
# a worst-case window over prime indices, and a low-degree-factors bound.
w = worst_case_sieve_bounds(17, 157)
print("worst case over prime windows 18..157:"
      f" S > {w['S_min']:.8f}, M < {w['M_max']:.6f}")
ld = low_degree_M_bound(7, 11)
print(f"low-degree bound for (7, 11): keep degrees < {ld['d']},"
      f" M = {float(ld['M']):.6f} < {ld['bound']}")

"""Criterion evaluation: basic check, sieve check, parameter search, scans."""

import json
import math
from fractions import Fraction

import pytest

from pnsieve.intarith import FactorHintCache, factorize_q_pow_n_minus_1
from pnsieve.sieve import (
    SieveParams,
    basic_check,
    exceptions,
    low_degree_M_bound,
    parse_g_spec,
    scan,
    search_params,
    sieve_check,
    tail_check,
    worst_case_sieve_bounds,
)
from pnsieve.tables import params_lookup


# ---------------------------------------------------------------------------
# basic check
# ---------------------------------------------------------------------------


def test_basic_check_small_failure():
    rep = basic_check(7, 6, 3)
    assert rep.verdict == "fails"
    assert rep.method == "basic"
    assert rep.S == 1 and rep.M == 1
    assert (rep.u, rep.r, rep.s) == (0, 0, 0)


def test_basic_check_large_success():
    rep = basic_check(7, 50, 3)
    assert rep.verdict == "holds"
    assert rep.complete


def test_basic_check_monotone_in_m():
    # larger m makes the right side larger, so a failure cannot recover
    held = basic_check(49, 25, 3).verdict
    assert held == "holds"
    assert basic_check(49, 25, 30).verdict in ("holds", "fails")
    lhs_fixed = basic_check(49, 25, 3)
    harder = basic_check(49, 25, 200)
    assert harder.rhs_log2 > lhs_fixed.rhs_log2


# ---------------------------------------------------------------------------
# sieve check with explicit parameters
# ---------------------------------------------------------------------------


def test_sieve_check_reference_row_7_11():
    params = SieveParams(e_prime=1, e=2, g_parts=parse_g_spec(7, 11, "1"))
    assert params.g_parts == ()  # "1" is the constant polynomial: keep nothing
    rep = sieve_check(7, 11, 3, params)
    assert rep.verdict == "holds"
    assert (rep.u, rep.r, rep.s) == (2, 3, 2)
    # 7^11 - 1 = 2 * 3 * 1123 * 293459; Q = 1123 * 293459.  With e' = 1 both
    # Q-primes are dropped; with e = 2 the three odd primes are dropped (the
    # big two therefore appear in both sums); g = 1 drops both factors of
    # x^11 - 1 (degrees 1 and 10).
    expected_S = (Fraction(1)
                  - (Fraction(1, 1123) + Fraction(1, 293459))
                  - (Fraction(1, 3) + Fraction(1, 1123) + Fraction(1, 293459))
                  - 2 * (Fraction(1, 7) + Fraction(1, 7 ** 10)))
    assert rep.S == expected_S
    assert rep.M == Fraction(2 + 3 + 2 * 2 - 1, 1) / rep.S + 2
    assert float(rep.M) == pytest.approx(23.0990152815921, rel=1e-12)
    assert float(rep.S) == pytest.approx(0.379164614709749, rel=1e-12)


def test_sieve_trivial_params_is_basic_check():
    for q, n, m in [(7, 11, 3), (49, 9, 3), (343, 7, 5), (7, 30, 2)]:
        b = basic_check(q, n, m)
        t = sieve_check(q, n, m, SieveParams())
        assert t.method == "sieve" and b.method == "basic"
        bj, tj = b.to_json(), t.to_json()
        assert bj == tj
        assert (t.S, t.M) == (Fraction(1), Fraction(1))


def test_sieve_params_validation():
    with pytest.raises(ValueError):
        sieve_check(7, 11, 3, SieveParams(e=5))     # 5 does not divide 7^11-1
    with pytest.raises(ValueError):
        sieve_check(7, 11, 3, SieveParams(e_prime=6))  # 6 shares primes with q-1
    with pytest.raises(ValueError):
        sieve_check(7, 11, 3, SieveParams(g_parts=((3, 1),)))  # no degree-3 factor
    with pytest.raises(ValueError):
        sieve_check(7, 11, 3, SieveParams(g_parts=((1, 5),)))  # only 1 linear factor
    with pytest.raises(ValueError):
        sieve_check(6, 11, 3)  # q must be a prime power
    with pytest.raises(ValueError):
        sieve_check(7, 0, 3)
    with pytest.raises(ValueError):
        sieve_check(7, 11, 0)


def test_sieve_check_incomplete_gives_unknown():
    # with no hints and no splitting budget, 7^29 - 1 stays incomplete
    rep = sieve_check(7, 29, 3, SieveParams(), hints=FactorHintCache(), budget=0)
    assert not rep.complete
    assert rep.verdict in ("holds", "unknown")
    full = sieve_check(7, 29, 3, SieveParams())
    assert full.complete
    if rep.verdict != "unknown":
        assert rep.verdict == full.verdict


def test_incomplete_endpoints_bracket_complete_value():
    # the pessimistic endpoint must not report holds unless the complete
    # computation also holds
    q, n, m = 7, 29, 3
    inc = sieve_check(q, n, m, SieveParams(), hints=FactorHintCache(), budget=0)
    comp = sieve_check(q, n, m, SieveParams())
    if inc.verdict == "holds":
        assert comp.verdict == "holds"
    if inc.verdict == "fails":
        assert comp.verdict == "fails"


def test_report_json_schema():
    rep = basic_check(7, 20, 3)
    js = rep.to_json()
    assert set(js) == {"q", "n", "m", "params", "S", "S_float", "M",
                       "lhs_log2", "rhs_log2", "verdict"}
    assert set(js["params"]) == {"e_prime", "e", "g_degrees"}
    assert js["verdict"] in ("holds", "fails", "unknown")
    json.dumps(js)  # serializable


def test_report_csv_row_and_g_str():
    rep = sieve_check(7, 11, 3, SieveParams(e_prime=1, e=2,
                                            g_parts=parse_g_spec(7, 11, "1")))
    row = rep.csv_row()
    assert row[:7] == [7, 11, 3, "sieve", 1, 2, "1"]
    assert row[-1] == "holds"
    # the g string round-trips through the parser (empty selection -> "1")
    assert parse_g_spec(7, 11, rep.g_str()) == rep.g_parts == ()
    rep2 = sieve_check(7, 12, 3, SieveParams(g_parts=((1, 6),)))
    assert rep2.g_str() == "1^6"
    assert parse_g_spec(7, 12, rep2.g_str()) == rep2.g_parts


# ---------------------------------------------------------------------------
# g-spec parsing
# ---------------------------------------------------------------------------


def test_parse_g_spec_forms():
    # degree-signature form
    assert parse_g_spec(7, 12, "1^6,2^3") == ((1, 6), (2, 3))
    assert parse_g_spec(7, 11, "1^1") == ((1, 1),)
    assert parse_g_spec(7, 11, "1") == ()  # the constant polynomial
    assert parse_g_spec(7, 11, "full") is None
    # binomial x^a - 1, also written with the additive constant mod p
    assert parse_g_spec(7, 12, "x^6+6") == ((1, 6),)
    assert parse_g_spec(7, 12, "x^6-1") == ((1, 6),)
    # quotient of two binomials
    assert parse_g_spec(49, 48, "(x^48-1)/(x^12-1)") is not None
    # linear polynomial over a non-prime field: -3 has order 3 mod 7
    assert parse_g_spec(2401, 15, "x+3") == ((1, 1),)
    with pytest.raises(ValueError):
        parse_g_spec(2401, 5, "x+3")  # 3 does not divide 5
    # explicit polynomial over a prime field: x^2+x+1 divides x^3-1 | x^12-1
    assert parse_g_spec(7, 12, "x^2+x+1") in (((2, 1),), ((1, 2),))


def test_parse_g_spec_rejects_non_divisors():
    with pytest.raises(ValueError):
        parse_g_spec(7, 11, "x^3-1")  # 3 does not divide 11
    with pytest.raises(ValueError):
        parse_g_spec(7, 11, "1^3")    # only 1 linear factor exists
    with pytest.raises(ValueError):
        parse_g_spec(7, 11, "nonsense!")


def test_parse_g_spec_quotient_consistency():
    # (x^48-1)/(x^12-1) over F_49 keeps exactly the cosets outside x^12-1
    sel = parse_g_spec(49, 48, "(x^48-1)/(x^12-1)")
    deg_total = sum(d * c for d, c in sel)
    assert deg_total == 36


# ---------------------------------------------------------------------------
# automated parameter search
# ---------------------------------------------------------------------------


def test_search_params_resolves_7_11():
    rep = search_params(7, 11, 3)
    assert rep is not None and rep.verdict == "holds"
    # re-verify the found parameters independently
    again = sieve_check(7, 11, 3, SieveParams(rep.e_prime, rep.e, rep.g_parts))
    assert again.verdict == "holds"


def test_search_params_none_on_unresolvable():
    assert search_params(7, 6, 3) is None


@pytest.mark.parametrize("q,n", [(49, 24), (7, 36), (343, 12)])
def test_search_params_stragglers(q, n):
    rep = search_params(q, n, 3)
    assert rep is not None and rep.verdict == "holds"


# ---------------------------------------------------------------------------
# scans
# ---------------------------------------------------------------------------


def test_scan_tiny_grid_with_stored_params():
    reports = scan([7], 11, 12, 3, params_lookup=params_lookup())
    assert len(reports) == 2
    by_pair = {(r.q, r.n): r for r in reports}
    assert by_pair[(7, 11)].verdict == "holds"
    assert by_pair[(7, 12)].verdict == "fails"
    assert exceptions(reports) == [(7, 12)]


def test_scan_prefers_basic_when_it_holds():
    reports = scan([7], 50, 50, 3, params_lookup=params_lookup())
    assert reports[0].method == "basic"


def test_scan_deterministic():
    a = scan([7, 49], 11, 13, 3, params_lookup=params_lookup())
    b = scan([7, 49], 11, 13, 3, params_lookup=params_lookup())
    assert [r.to_json() for r in a] == [r.to_json() for r in b]


# ---------------------------------------------------------------------------
# worst-case bounds, low-degree M bound, tail inequality
# ---------------------------------------------------------------------------


def test_worst_case_sieve_bounds_shape():
    w = worst_case_sieve_bounds(17, 157)
    assert w["a"] == 17 and w["b"] == 157
    assert 0 < w["S_min"] < 1
    assert w["M_max"] > 0 and w["rhs_max"] > 0
    # S_min = 1 - 2 * sum of reciprocals of primes 18..157 by index
    assert w["S_min"] == pytest.approx(1 - 2 * _recip_prime_sum(17, 157), rel=1e-12)


def _recip_prime_sum(a, b):
    from pnsieve.intarith import nth_primes

    ps = nth_primes(b)
    return sum(1.0 / p for p in ps[a:b])


def test_worst_case_monotone():
    # dropping more primes can only hurt S and inflate M
    w1 = worst_case_sieve_bounds(17, 100)
    w2 = worst_case_sieve_bounds(17, 157)
    assert w2["S_min"] < w1["S_min"]
    assert w2["M_max"] > w1["M_max"]


def test_low_degree_M_bound_7_11():
    rec = low_degree_M_bound(7, 11)
    assert rec["d"] == 10 and rec["s"] == 1
    assert rec["ok"] and rec["M"] < rec["bound"] == 22
    assert rec["M"] == pytest.approx(float(Fraction(1, 1) / (1 - Fraction(2, 7 ** 10)) + 2))


def test_low_degree_M_bound_requires_large_degree():
    for n_prime in (3, 4, 6):
        with pytest.raises(ValueError):
            low_degree_M_bound(7, n_prime)  # max coset size d <= 2 there


def test_tail_check_boundary():
    # the reference row k = 4, r = 9: holds from n = 57 on, not at 56
    assert tail_check(4, 9.0, 57)
    assert not tail_check(4, 9.0, 56, span=1)


def test_tail_check_row_3():
    assert tail_check(3, 10.0, 152)

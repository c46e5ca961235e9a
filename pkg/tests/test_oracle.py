"""Brute-force counting oracles and character-sum machinery on small fields."""

import pytest

from pnsieve.ffield import (
    ZeroElement,
    build_context,
    is_e_free,
    is_g_free,
    is_normal,
    is_primitive,
    is_primitive_subfield,
    make_rational,
    norm,
    trace,
)
from pnsieve.intarith import divisors, factorize
from pnsieve.oracle import (
    CharacterTable,
    NumericalInstability,
    PrecheckFailed,
    count_definitional,
    count_direct,
    count_prenorm,
    count_via_characters,
    enumerate_pair_counts,
    eta,
    kappa,
    poly_divisor_parts,
    rho,
    tau,
    weil_check_mixed,
    weil_check_multiplicative,
)
from pnsieve.polyfactor import poly_mul


@pytest.fixture(scope="module")
def ctx32():
    return build_context(3, 1, 2)


@pytest.fixture(scope="module")
def table32(ctx32):
    return CharacterTable(ctx32)


# ---------------------------------------------------------------------------
# characteristic functions (scalar wrappers; the exhaustive residue sweep over
# every small context lives in the acceptance suite)
# ---------------------------------------------------------------------------


def test_rho_matches_e_free(ctx32, table32):
    for e_val in divisors(ctx32.qn1):
        if e_val == 1:
            continue
        e = factorize(e_val)
        for eps in range(1, ctx32.size):
            assert rho(table32, eps, e) == int(is_e_free(ctx32, eps, e))


def test_kappa_matches_g_free(ctx32, table32):
    ctx = ctx32
    xn1 = ctx.xn1_poly()
    for g, _ in poly_divisor_parts(ctx, xn1):
        for eps in range(ctx.size):
            assert kappa(table32, eps, g) == int(is_g_free(ctx, eps, g))
    for eps in range(ctx.size):
        assert kappa(table32, eps, xn1) == int(is_normal(ctx, eps))


def test_tau_matches_trace(ctx32, table32):
    for a in (int(c) for c in ctx32.subfield_codes):
        for eps in range(ctx32.size):
            assert tau(table32, eps, a) == int(trace(ctx32, eps) == a)


def test_eta_matches_norm(ctx32, table32):
    for c in (int(c) for c in ctx32.subfield_codes):
        if c == 0:
            continue
        for eps in range(1, ctx32.size):
            assert eta(table32, eps, c) == int(norm(ctx32, eps) == c)


def test_scalar_characteristics_reject_zero(table32):
    e = factorize(8)
    with pytest.raises(ZeroElement):
        rho(table32, 0, e)
    with pytest.raises(ZeroElement):
        eta(table32, 0, 1)


# ---------------------------------------------------------------------------
# counting oracles
# ---------------------------------------------------------------------------


def test_count_direct_requires_primitive_b(ctx32):
    f = make_rational(ctx32, [1, 1], [1])
    with pytest.raises(ValueError):
        count_direct(ctx32, f, 1, 1)  # 1 is never primitive in F_3*


def test_count_prenorm_decomposition(ctx32):
    ctx = ctx32
    f = make_rational(ctx, [1, 1], [1])
    total = 0
    for a in (int(c) for c in ctx.subfield_codes):
        total += count_prenorm(ctx, f, a)  # internally cross-checked
    # total = number of eps with (eps, f(eps)) primitive normal, any prenorm
    brute = 0
    for eps in range(1, ctx.size):
        feps = ctx.add(eps, 1)
        if feps == 0:
            continue
        if all([is_primitive(ctx, eps), is_normal(ctx, eps),
                is_primitive(ctx, feps), is_normal(ctx, feps)]):
            brute += 1
    assert total == brute


def test_count_prenorm_duality_case():
    # p | n: the additive-character duality is exercised hardest here
    ctx = build_context(2, 1, 4)
    f = make_rational(ctx, [1, 1], [1])
    for a in (0, 1):
        assert count_prenorm(ctx, f, a) >= 0


def test_enumerate_pair_counts_consistency(ctx32):
    ctx = ctx32
    f = make_rational(ctx, [1, 1], [1])
    full = ctx.qn1
    xn1 = ctx.xn1_poly()
    counts = enumerate_pair_counts(ctx, f)
    for (tr_inv, nrm), cnt in counts.items():
        if nrm == 0:
            continue
        a = ctx.mul(tr_inv, nrm)
        assert count_definitional(ctx, f, a, nrm, full, full, xn1, xn1) == cnt
    assert sum(counts.values()) == sum(
        1 for eps in range(1, ctx.size)
        if ctx.add(eps, 1) != 0
        and is_primitive(ctx, eps) and is_normal(ctx, eps)
        and is_primitive(ctx, ctx.add(eps, 1)) and is_normal(ctx, ctx.add(eps, 1))
    )


def test_character_sum_matches_direct_count_one_case(ctx32, table32):
    ctx = ctx32
    f = make_rational(ctx, [1, 1], [1])
    full = ctx.qn1
    xn1 = ctx.xn1_poly()
    for b in (int(c) for c in ctx.subfield_codes):
        if b == 0 or not is_primitive_subfield(ctx, b):
            continue
        for a in (int(c) for c in ctx.subfield_codes):
            got = count_via_characters(table32, f, a, b, full, full, xn1, xn1)
            want = count_direct(ctx, f, a, b)
            assert abs(got - want) < 1e-9
            assert round(got) == want


def test_character_sum_with_partial_divisors(ctx32, table32):
    # e and g strictly between trivial and full: the formula must still count
    ctx = ctx32
    f = make_rational(ctx, [1, 1], [1])
    e1 = factorize(8)
    e2 = factorize(2)
    parts = poly_divisor_parts(ctx, ctx.xn1_poly())
    g1 = parts[0][0]
    g2 = ctx.xn1_poly()
    for b in range(1, 3):
        b_code = [c for c in ctx.subfield_codes if c][b - 1]
        for a in (int(c) for c in ctx.subfield_codes):
            got = count_via_characters(table32, f, a, int(b_code), e1, e2, g1, g2)
            want = count_definitional(ctx, f, a, int(b_code), e1, e2, g1, g2)
            assert abs(got - want) < 1e-9


# ---------------------------------------------------------------------------
# Weil-type bound checks
# ---------------------------------------------------------------------------


def test_weil_multiplicative_quadratic_gauss():
    # F_9, quadratic character of x: |sum| = q^(n/2) exactly for chi((x)(x+c))
    ctx = build_context(3, 1, 2)
    table = CharacterTable(ctx)
    f_parts = [([0, 1], 1), ([1, 1], 1)]
    res = weil_check_multiplicative(table, f_parts, 2)
    assert res.ok and not res.edge
    assert res.lhs <= res.rhs + 1e-6
    assert res.rhs == pytest.approx(3.0)  # (2-1) * sqrt(9)


def test_weil_multiplicative_edge_single_linear():
    ctx = build_context(3, 1, 2)
    table = CharacterTable(ctx)
    res = weil_check_multiplicative(table, [([1, 1], 1)], 2)
    assert res.edge and res.ok
    assert res.rhs == 0.0


def test_weil_multiplicative_rejects_dth_power():
    ctx = build_context(3, 1, 2)
    table = CharacterTable(ctx)
    with pytest.raises(PrecheckFailed):
        weil_check_multiplicative(table, [([1, 1], 2)], 2)
    with pytest.raises(PrecheckFailed):
        weil_check_multiplicative(table, [([1, 1], 1)], 5)  # 5 does not divide 8


def test_weil_mixed_kloosterman_equality():
    # F_49 over F_7: trivial chi with g = x + 1/x gives the classical
    # Kloosterman sum; the bound (0+1+1+1-1) * 7 must hold with room
    ctx = build_context(7, 1, 2)
    table = CharacterTable(ctx)
    res = weil_check_mixed(table, [], [1, 0, 1], [([0, 1], 1)], chi_exp=0)
    assert res.ok and not res.edge
    assert res.rhs == pytest.approx(2 * 7.0)


def test_weil_mixed_rejects_zero_g():
    ctx = build_context(7, 1, 2)
    table = CharacterTable(ctx)
    with pytest.raises(PrecheckFailed):
        weil_check_mixed(table, [], [0], [], chi_exp=0)


def test_weil_mixed_pure_additive():
    # complete additive character sum over F_{q^n} vanishes; with trivial chi
    # and g = x the degree coefficient is 0, so this is the flagged edge case
    ctx = build_context(5, 1, 2)
    table = CharacterTable(ctx)
    res = weil_check_mixed(table, [], [0, 1], [], chi_exp=0)
    assert res.ok and res.edge
    assert res.lhs == pytest.approx(0.0, abs=1e-9)


# ---------------------------------------------------------------------------
# divisor scaffolding
# ---------------------------------------------------------------------------


def test_poly_divisor_parts_roundtrip(ctx32):
    ctx = ctx32
    xn1 = ctx.xn1_poly()
    parts = poly_divisor_parts(ctx, xn1)
    ops = ctx.subfield_ops()
    prod = [1]
    for f, m in parts:
        for _ in range(m):
            prod = poly_mul(ops, prod, f)
    assert prod == xn1


def test_poly_divisor_parts_rejects_non_divisor(ctx32):
    with pytest.raises(ValueError):
        poly_divisor_parts(ctx32, [1, 1, 1])  # x^2+x+1 does not divide x^2-1

"""Hypergeometric series evaluation against a literal-definition oracle."""

import pytest

from charsum import chars, hyperf, sums

from conftest import field


def binom_oracle(ctx, a, b):
    """Greene binomial from the defining Jacobi summation."""
    j = sum(
        chars.mul_char(ctx, a, x) * chars.mul_char(ctx, -b, ctx.sub(1, x))
        for x in ctx.elements()
    )
    return chars.mul_char(ctx, b, ctx.minus_one()) / ctx.q * j


def hf_oracle(ctx, upper, lower, x):
    """Term-by-term series sum with no caching anywhere."""
    L = ctx.q - 1
    total = 0j
    for k in range(L):
        term = binom_oracle(ctx, upper[0] + k, k)
        for a_i, b_i in zip(upper[1:], lower):
            term *= binom_oracle(ctx, a_i + k, b_i + k)
        total += term * chars.mul_char(ctx, k, x)
    return ctx.q / L * total


def test_zero_argument_is_zero(f13):
    assert hyperf.hf_eval(f13, [1, 5], [6], 0) == 0


def test_mismatched_parameter_lists(f13):
    with pytest.raises(ValueError):
        hyperf.hf_eval(f13, [1, 5], [6, 2], 1)
    with pytest.raises(ValueError):
        hyperf.hf_eval(f13, [1], [6], 1)


def test_2f1_matches_oracle_every_argument(f13):
    for x in f13.elements():
        got = hyperf.hf_eval(f13, [1, 5], [6], x)
        assert abs(got - hf_oracle(f13, [1, 5], [6], x)) < 1e-10


def test_3f2_matches_oracle_sampled(f17):
    for x in (1, 5, 9, 16):
        got = hyperf.hf_eval(f17, [2, 7, 11], [4, 8], x)
        assert abs(got - hf_oracle(f17, [2, 7, 11], [4, 8], x)) < 1e-10


def test_extension_field_series(f25):
    for x in (1, 7, 24):
        got = hyperf.hf_eval(f25, [3, 10], [12], x)
        assert abs(got - hf_oracle(f25, [3, 10], [12], x)) < 1e-10


def test_direct_rows_agree_with_cached(f13):
    for x in f13.units():
        fast = hyperf.hf_eval(f13, [1, 5], [6], x)
        slow = hyperf.hf_eval(f13, [1, 5], [6], x, rows="direct")
        assert abs(fast - slow) < 1e-9 * f13.q


def test_binom_row_matches_scalar(f13):
    for a, b in [(1, 0), (5, 6), (0, 4), (7, 7), (3, 6)]:
        row = hyperf.binom_row(f13, a, b)
        for k in range(12):
            assert abs(row[k] - sums.greene_binom(f13, a + k, b + k)) < 1e-12


def test_binom_row_cached_and_frozen(f13):
    r1 = hyperf.binom_row(f13, 1, 0)
    r2 = hyperf.binom_row(f13, 1, 0)
    assert r1 is r2
    with pytest.raises(ValueError):
        r1[0] = 0


def test_half_argument_special_value():
    # 2F1(phi, phi; eps | 1/2) = phi(-2) * (binom(T^(L/4), phi) + binom(T^(3L/4), phi))
    for p in (13, 17, 29, 37):
        ctx = field(p)
        L = p - 1
        lhs = hyperf.hf_eval(ctx, [L // 2, L // 2], [0], ctx.inv(ctx.embed(2)))
        rhs = chars.mul_char(ctx, L // 2, ctx.neg(2)) * (
            sums.greene_binom(ctx, L // 4, L // 2)
            + sums.greene_binom(ctx, 3 * L // 4, L // 2)
        )
        assert abs(lhs - rhs) < 1e-10


def test_determinism_bit_identical(f13):
    a = hyperf.hf_eval(f13, [1, 5], [6], 3)
    b = hyperf.hf_eval(f13, [1, 5], [6], 3)
    assert a == b


def test_trivial_parameters_handled_literally(f13):
    # a degenerate upper parameter (eps) must go through the generic path
    got = hyperf.hf_eval(f13, [0, 5], [6], 2)
    assert abs(got - hf_oracle(f13, [0, 5], [6], 2)) < 1e-10

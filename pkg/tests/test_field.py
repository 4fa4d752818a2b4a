"""Field construction, arithmetic, dlog tables, and the trace map."""

import numpy as np
import pytest
from hypothesis import given, strategies as st

from charsum.field import FieldError, factor_prime_power, make_field

from conftest import field


def brute_order(ctx, x):
    k, acc = 1, x
    while acc != 1:
        acc = ctx.mul(acc, x)
        k += 1
    return k


def test_f13_generator_is_two(f13):
    assert f13.q == 13
    assert f13.g == 2
    # exhaustive order check: 2 is the first element of order 12
    assert brute_order(f13, 2) == 12
    for cand in (1,):
        assert brute_order(f13, cand) < 12


def test_f9_modulus_is_smallest_irreducible(f9):
    assert f9.q == 9
    assert f9.modulus == (1, 0, 1)  # t^2 + 1
    # independent oracle: enumerate monic quadratics in candidate order,
    # test irreducibility by root search
    p = 3
    for code in range(p**2):
        a0, a1 = code % p, (code // p) % p
        has_root = any((t * t + a1 * t + a0) % p == 0 for t in range(p))
        if not has_root:
            assert (a0, a1, 1) == f9.modulus
            break
        assert (a0, a1, 1) != f9.modulus


def test_nonprime_p_rejected():
    with pytest.raises(FieldError):
        make_field(4)


def test_size_cap_enforced():
    with pytest.raises(FieldError):
        make_field(13, size_cap=12)
    assert make_field(13, size_cap=13).q == 13


def test_known_extension_moduli(f25, f27):
    assert f25.modulus == (2, 0, 1)  # t^2 + 2
    assert f27.modulus == (1, 2, 0, 1)  # t^3 + 2t + 1


def test_arith_examples(f13):
    x = 9
    assert f13.mul(x, 1) == x
    assert f13.inv(2) == 7
    with pytest.raises(ZeroDivisionError):
        f13.inv(0)


def test_dlog_examples(f13):
    assert f13.dlog_of(8) == 3  # 2^3
    assert f13.dlog_of(1) == 0
    assert f13.dlog_of(11) == 7  # 2^7 = 128 = 11 (mod 13)
    with pytest.raises(ZeroDivisionError):
        f13.dlog_of(0)


def test_exp_dlog_roundtrip(f13, f9, f27):
    for ctx in (f13, f9, f27):
        for k in range(ctx.q - 1):
            assert ctx.dlog_of(int(ctx.exp[k])) == k
        for x in ctx.units():
            assert int(ctx.exp[ctx.dlog_of(x)]) == x


@given(st.integers(1, 12), st.integers(1, 12))
def test_dlog_homomorphism_f13(x, y):
    ctx = field(13)
    lhs = ctx.dlog_of(ctx.mul(x, y))
    assert lhs == (ctx.dlog_of(x) + ctx.dlog_of(y)) % 12


@given(st.integers(1, 26), st.integers(1, 26))
def test_dlog_homomorphism_f27(x, y):
    ctx = field(3, 3)
    lhs = ctx.dlog_of(ctx.mul(x, y))
    assert lhs == (ctx.dlog_of(x) + ctx.dlog_of(y)) % 26


def test_trace_prime_field_is_identity(f13):
    for x in f13.elements():
        assert f13.trace(x) == x


def test_trace_f9_examples(f9):
    t = f9.from_coeffs((0, 1))
    assert f9.trace(t) == 0  # t + t^3 = t - t = 0
    assert f9.trace(0) == 0


def test_trace_additive_and_surjective(f9, f25, f27):
    for ctx in (f9, f25, f27):
        for x in range(ctx.q):
            for y in range(0, ctx.q, 5):
                assert ctx.trace(ctx.add(x, y)) == (ctx.trace(x) + ctx.trace(y)) % ctx.p
        assert set(ctx.trace(x) for x in ctx.elements()) == set(range(ctx.p))
        # F_p-linearity
        for c in range(ctx.p):
            for x in range(0, ctx.q, 3):
                assert ctx.trace(ctx.mul(c, x)) == (c * ctx.trace(x)) % ctx.p


def test_generator_canonical_across_rebuilds():
    a = make_field(37)
    b = make_field(37)
    assert a.g == b.g
    x = make_field(3, 3)
    y = make_field(3, 3)
    assert x.g == y.g and x.modulus == y.modulus
    assert np.array_equal(x.exp, y.exp)


def test_vector_ops_match_scalar(f27):
    xs = np.arange(f27.q, dtype=np.int64)
    ys = (xs * 7 + 3) % f27.q
    added = f27.add_vec(xs, ys)
    for x, y, s in zip(xs, ys, added):
        assert int(s) == f27.add(int(x), int(y))
    powed = f27.pow_vec(xs, 5)
    for x, v in zip(xs, powed):
        assert int(v) == f27.pow(int(x), 5)
    muled = f27.mul_vec(xs, 11)
    for x, v in zip(xs, muled):
        assert int(v) == f27.mul(int(x), 11)


def test_factor_prime_power():
    assert factor_prime_power(27) == (3, 3)
    assert factor_prime_power(13) == (13, 1)
    with pytest.raises(FieldError):
        factor_prime_power(14)
    with pytest.raises(FieldError):
        factor_prime_power(1)


def test_sqrt_canonical(f13):
    for x in f13.units():
        if f13.dlog_of(x) % 2 == 0:
            r = f13.sqrt_canonical(x)
            assert f13.mul(r, r) == x
            assert f13.dlog_of(r) < 6  # canonical branch: dlog below (q-1)/2
        else:
            with pytest.raises(ValueError):
                f13.sqrt_canonical(x)

"""Trace formulas, twisted-Edwards correspondence, and 2F1 special values.

Everything here specializes the general closed-form counts: the cubic trace
formula (characters of order 12), the (e, d) = (3, 4) trace in 4F3 series,
the quadratic-twist bridge between y^2 = x^3 + a*x^2 + b*x and twisted
Edwards curves, and the resulting 2F1 evaluations at 1/2 and 1323/1331.
"""

from __future__ import annotations

import time

import numpy as np

from . import _kernels, chars, hyperf, sums
from .curves import _round_guarded
from .field import FieldCtx
from .report import VerifyReport


def _require(cond: bool, msg: str):
    if not cond:
        raise ValueError(msg)


def _require_unit(ctx: FieldCtx, value: int, label: str):
    _require(0 < value < ctx.q, f"{label} must be a nonzero element of F_{ctx.q}")


def lennon_trace(ctx: FieldCtx, a: int, b: int) -> int:
    """Trace of Frobenius of y^2 = x^3 + a*x + b via the order-12 2F1 formula.

    Needs q = 1 mod 12 and a, b != 0 (equivalently j not in {0, 1728}).
    """
    L = ctx.q - 1
    _require(L % 12 == 0, f"q = {ctx.q} is not 1 mod 12")
    _require_unit(ctx, a, "a")
    _require_unit(ctx, b, "b")
    a3_27 = ctx.div(ctx.pow(a, 3), ctx.embed(27))
    arg = ctx.neg(ctx.div(ctx.mul(ctx.embed(27), ctx.pow(b, 2)),
                          ctx.mul(ctx.embed(4), ctx.pow(a, 3))))
    series = hyperf.hf_eval(ctx, [L // 12, 5 * L // 12], [L // 2], arg)
    total = -ctx.q * chars.mul_char(ctx, L // 4, a3_27) * series
    return _round_guarded(ctx, total)


def e34_trace(ctx: FieldCtx, a: int, b: int) -> int:
    """Trace of Frobenius of y^3 = x^4 + a*x + b via two 4F3 series.

    Needs q = 1 mod 36 and a, b != 0.
    """
    L = ctx.q - 1
    _require(L % 36 == 0, f"q = {ctx.q} is not 1 mod 36")
    _require_unit(ctx, a, "a")
    _require_unit(ctx, b, "b")
    three_over_b = ctx.div(ctx.embed(3), b)
    # series argument is the even-d alpha = (4/a)(4b/(3a))^3 = 256 b^3 / (27 a^4)
    arg = ctx.div(ctx.mul(ctx.embed(256), ctx.pow(b, 3)),
                  ctx.mul(ctx.embed(27), ctx.pow(a, 4)))
    upper = [L // 2, 0, L // 4, 3 * L // 4]
    f1 = hyperf.hf_eval(ctx, upper, [5 * L // 9, 2 * L // 9, 8 * L // 9], arg)
    f2 = hyperf.hf_eval(ctx, upper, [4 * L // 9, L // 9, 7 * L // 9], arg)
    q3 = ctx.q**3
    t1 = (
        q3
        * sums.greene_binom(ctx, 4 * L // 9, L // 3)
        * sums.greene_binom(ctx, L // 36, 5 * L // 36)
        * chars.mul_char(ctx, L // 3, three_over_b)
        * f1
    )
    t2 = (
        q3
        * sums.greene_binom(ctx, 5 * L // 9, 2 * L // 3)
        * sums.greene_binom(ctx, 5 * L // 36, L // 36)
        * chars.mul_char(ctx, 2 * L // 9, ctx.minus_one())
        * chars.mul_char(ctx, 2 * L // 3, three_over_b)
        * f2
    )
    total = (
        -chars.mul_char(ctx, -L // 3, b)
        - chars.mul_char(ctx, -2 * L // 3, b)
        - t1
        - t2
    )
    return _round_guarded(ctx, total)


# ---------------------------------------------------------------------------
# Twisted Edwards curves alpha*x^2 + y^2 = 1 + beta*x^2*y^2
# ---------------------------------------------------------------------------

def edwards_count_bruteforce(ctx: FieldCtx, alpha: int, beta: int) -> int:
    """Point count by full enumeration of all (x, y) pairs."""
    if ctx.n == 1:
        return _kernels.edwards_naive(ctx.p, alpha, beta)
    xs = np.arange(ctx.q, dtype=np.int64)
    sq = ctx.pow_vec(xs, 2)
    lhs = ctx.add_vec(ctx.mul_vec(sq, alpha)[:, None], sq[None, :])
    x2y2 = ctx.mul_arr(sq[:, None], sq[None, :])
    rhs = ctx.add_vec(np.ones_like(x2y2), ctx.mul_vec(x2y2, beta))
    return int(np.sum(lhs == rhs))


def edwards_count_formula(ctx: FieldCtx, alpha: int, beta: int) -> int:
    """Point count via q - 1 - phi(beta) - phi(alpha*beta) + q*phi(-alpha)*2F1."""
    _require(ctx.q % 2 == 1, "odd q required")
    _require_unit(ctx, alpha, "alpha")
    _require_unit(ctx, beta, "beta")
    L = ctx.q - 1
    series = hyperf.hf_eval(ctx, [L // 2, L // 2], [0], ctx.div(beta, alpha))
    total = (
        ctx.q
        - 1
        - chars.legendre(ctx, beta)
        - chars.legendre(ctx, ctx.mul(alpha, beta))
        + ctx.q * chars.mul_char(ctx, L // 2, ctx.neg(alpha)) * series
    )
    return _round_guarded(ctx, total)


def edwards_count(ctx: FieldCtx, alpha: int, beta: int, mode: str = "formula") -> int:
    if mode == "bruteforce":
        return edwards_count_bruteforce(ctx, alpha, beta)
    if mode == "formula":
        return edwards_count_formula(ctx, alpha, beta)
    raise ValueError(f"unknown mode {mode!r}")


# ---------------------------------------------------------------------------
# Shifted cubic y^2 = x^3 + a*x^2 + b*x
# ---------------------------------------------------------------------------

def _shifted_coeffs(ctx: FieldCtx, a: int, b: int) -> tuple[int, int, int]:
    """k with 3k + a = 0 and the depressed-cubic coefficients (a', b')."""
    k = ctx.neg(ctx.div(a, ctx.embed(3)))
    k2 = ctx.pow(k, 2)
    a_p = ctx.add(ctx.add(ctx.mul(ctx.embed(3), k2), ctx.mul(ctx.embed(2), ctx.mul(a, k))), b)
    b_p = ctx.mul(k, ctx.add(ctx.add(k2, ctx.mul(a, k)), b))
    return k, a_p, b_p


def cubic_count_bruteforce(ctx: FieldCtx, a: int, b: int) -> int:
    """Affine count of y^2 = x^3 + a*x^2 + b*x by power-class tabulation."""
    xs = np.arange(ctx.q, dtype=np.int64)
    vals = ctx.add_vec(
        ctx.add_vec(ctx.pow_vec(xs, 3), ctx.mul_vec(ctx.pow_vec(xs, 2), a)),
        ctx.mul_vec(xs, b),
    )
    ys = np.arange(ctx.q, dtype=np.int64)
    counts = np.bincount(ctx.pow_vec(ys, 2), minlength=ctx.q)
    return int(np.sum(counts[vals]))


def _shifted_series_term(ctx: FieldCtx, a: int, b: int) -> complex:
    """q * T^(3(q-1)/4)(a'/3) * 2F1(T^(L/12), T^(5L/12); phi | -27 b'^2/(4 a'^3))."""
    L = ctx.q - 1
    k, a_p, b_p = _shifted_coeffs(ctx, a, b)
    _require(a_p != 0 and b_p != 0, "shifted curve is degenerate (a' or b' is zero)")
    arg = ctx.neg(
        ctx.div(
            ctx.mul(ctx.embed(27), ctx.pow(b_p, 2)),
            ctx.mul(ctx.embed(4), ctx.pow(a_p, 3)),
        )
    )
    series = hyperf.hf_eval(ctx, [L // 12, 5 * L // 12], [L // 2], arg)
    return ctx.q * chars.mul_char(ctx, 3 * L // 4, ctx.div(a_p, ctx.embed(3))) * series


def shifted_cubic_count(ctx: FieldCtx, a: int, b: int) -> int:
    """Affine count of y^2 = x^3 + a*x^2 + b*x via the depressed-cubic 2F1."""
    L = ctx.q - 1
    _require(L % 12 == 0, f"q = {ctx.q} is not 1 mod 12")
    _require_unit(ctx, a, "a")
    _require_unit(ctx, b, "b")
    return _round_guarded(ctx, ctx.q + _shifted_series_term(ctx, a, b))


def cubic_transform_check(ctx: FieldCtx, a: int, b: int, branch: int = 0) -> VerifyReport:
    """Quadratic-twist transformation between the shifted-cubic series and the
    Edwards-side 2F1, for one square-root branch of b.

    Checks the series identity within tolerance and the integer bridge
    #E + 2 = #C + 3 + phi(a^2 - 4b) + phi(a*b - 2*b*r), with r the chosen
    root, alpha = a + 2r, beta = a - 2r.
    """
    t0 = time.perf_counter()
    L = ctx.q - 1
    _require(L % 12 == 0, f"q = {ctx.q} is not 1 mod 12")
    _require_unit(ctx, a, "a")
    _require_unit(ctx, b, "b")
    _require(branch in (0, 1), "branch must be 0 or 1")
    _require(chars.legendre(ctx, b) == 1, "b must be a nonzero square")
    root = ctx.sqrt_canonical(b)
    if branch == 1:
        root = ctx.neg(root)
    two_r = ctx.mul(ctx.embed(2), root)
    alpha = ctx.add(a, two_r)
    beta = ctx.sub(a, two_r)
    _require(alpha != 0 and beta != 0, "a = +-2*sqrt(b) is excluded")

    lhs = _shifted_series_term(ctx, a, b)
    series = hyperf.hf_eval(ctx, [L // 2, L // 2], [0], ctx.div(beta, alpha))
    ab2br = ctx.sub(ctx.mul(a, b), ctx.mul(two_r, b))
    rhs = (
        -chars.mul_char(ctx, L // 2, beta)
        + chars.mul_char(ctx, L // 2, ab2br)
        + ctx.q * chars.mul_char(ctx, L // 2, ctx.neg(alpha)) * series
    )
    disc = abs(lhs - rhs)

    n_cubic = cubic_count_bruteforce(ctx, a, b)
    n_edwards = edwards_count_bruteforce(ctx, alpha, beta)
    disc_sq = ctx.sub(ctx.pow(a, 2), ctx.mul(ctx.embed(4), b))
    bridge_lhs = n_cubic + 2
    bridge_rhs = (
        n_edwards + 3 + chars.legendre(ctx, disc_sq) + chars.legendre(ctx, ab2br)
    )
    tol = ctx.tol * ctx.q * ctx.q
    return VerifyReport(
        name="cubic-transform",
        q=ctx.q,
        a=a,
        b=b,
        formula=complex(lhs),
        oracle=rhs.real,
        match=disc < tol and bridge_lhs == bridge_rhs,
        disc=disc,
        tol=tol,
        cases=1,
        worst_case=(branch, bridge_lhs, bridge_rhs),
        ms=(time.perf_counter() - t0) * 1e3,
    )


# ---------------------------------------------------------------------------
# 2F1 special values
# ---------------------------------------------------------------------------

def special_value_check(ctx: FieldCtx, which: str) -> VerifyReport:
    """Closed-form 2F1 evaluations at 1/2 and at 1323/1331."""
    t0 = time.perf_counter()
    L = ctx.q - 1
    phi = L // 2 if ctx.q % 2 else None
    if which == "half":
        _require(L % 4 == 0, f"q = {ctx.q} is not 1 mod 4")
        lhs = hyperf.hf_eval(ctx, [phi, phi], [0], ctx.inv(ctx.embed(2)))
        rhs = chars.mul_char(ctx, phi, ctx.neg(ctx.embed(2))) * (
            sums.greene_binom(ctx, L // 4, phi) + sums.greene_binom(ctx, 3 * L // 4, phi)
        )
    elif which == "frac-1323-1331":
        _require(L % 12 == 0, f"q = {ctx.q} is not 1 mod 12")
        _require(ctx.embed(1331) != 0 and ctx.embed(3) != 0, "p must avoid 3 and 11")
        x = ctx.div(ctx.embed(1323), ctx.embed(1331))
        lhs = hyperf.hf_eval(ctx, [L // 12, 5 * L // 12], [phi], x)
        arg = ctx.div(ctx.embed(-44), ctx.embed(3))
        rhs = (
            chars.mul_char(ctx, L // 4, arg)
            * chars.mul_char(ctx, phi, ctx.embed(2))
            * (
                sums.greene_binom(ctx, L // 4, phi)
                + sums.greene_binom(ctx, 3 * L // 4, phi)
            )
        )
    else:
        raise ValueError(f"unknown special value {which!r}")
    disc = abs(lhs - rhs)
    tol = ctx.tol * ctx.q
    return VerifyReport(
        name=f"special-{which}",
        q=ctx.q,
        formula=complex(lhs),
        oracle=rhs.real,
        match=disc < tol,
        disc=disc,
        tol=tol,
        cases=1,
        ms=(time.perf_counter() - t0) * 1e3,
    )

"""Gaussian hypergeometric series over F_q.

The series sums q/(q-1) * binom(A_0*chi, chi) * prod_i binom(A_i*chi, B_i*chi)
* chi(x) over all q-1 characters chi.  Each factor, swept over chi, is one
row of binomial coefficients binom(T^(a+k), T^(b+k)); rows are built
vectorized from the Gauss table and memoized per context, so an evaluation
costs O(n*q) lookups after warm-up.
"""

from __future__ import annotations

import numpy as np

from . import chars, sums
from .field import FieldCtx


def binom_row(ctx: FieldCtx, a: int, b: int) -> np.ndarray:
    """binom(T^(a+k), T^(b+k)) for k in [0, q-2], cached per (a, b)."""
    L = ctx.q - 1
    a %= L
    b %= L
    cache = ctx._cache.setdefault("binom_rows", {})
    row = cache.get((a, b))
    if row is not None:
        return row
    G = sums.gauss_table(ctx)
    unit = chars.unit_roots(ctx)
    ks = np.arange(L, dtype=np.int64)
    h = ctx.dlog_of(ctx.minus_one())
    sign = unit[((b + ks) * h) % L]  # T^(b+k)(-1)
    if a == b:
        row = np.full(L, -1 / ctx.q, dtype=np.complex128)
        row[(-a) % L] = (ctx.q - 2) / ctx.q  # binom(eps, eps)
    else:
        # generic quotient J(T^(a+k), T^(-b-k)) = G_(a+k) G_(-b-k) / G_(a-b)
        row = sign / ctx.q * G[(a + ks) % L] * G[(-b - ks) % L] / G[(a - b) % L]
        ka = (-a) % L  # k making top character trivial
        kb = (-b) % L  # k making bottom character trivial
        row[ka] = -chars.mul_char(ctx, b - a, ctx.minus_one()) / ctx.q
        row[kb] = -1 / ctx.q
    row.setflags(write=False)
    cache[(a, b)] = row
    return row


def binom_row_direct(ctx: FieldCtx, a: int, b: int) -> np.ndarray:
    """Same row computed entry-by-entry through the defining Jacobi sum."""
    L = ctx.q - 1
    sign_base = ctx.minus_one()
    out = np.empty(L, dtype=np.complex128)
    for k in range(L):
        out[k] = chars.mul_char(ctx, b + k, sign_base) / ctx.q * sums.jacobi_direct(
            ctx, a + k, -(b + k)
        )
    return out


def hf_eval(
    ctx: FieldCtx,
    upper,
    lower,
    x: int,
    rows: str = "cached",
) -> complex:
    """Evaluate the series with parameter exponent lists `upper` and `lower`.

    `upper` must have exactly one more entry than `lower`.  With x = 0 the
    value is 0, since chi(0) = 0 for every character.  rows="direct"
    recomputes every binomial from the defining Jacobi summation (slow;
    used for cross-route consistency checks).
    """
    upper = [int(m) for m in upper]
    lower = [int(m) for m in lower]
    if len(upper) != len(lower) + 1:
        raise ValueError(
            f"need len(upper) == len(lower) + 1, got {len(upper)}/{len(lower)}"
        )
    if x == 0:
        return 0j
    L = ctx.q - 1
    builder = binom_row if rows == "cached" else binom_row_direct
    acc = builder(ctx, upper[0], 0).copy()
    for a_i, b_i in zip(upper[1:], lower):
        acc *= builder(ctx, a_i, b_i)
    ks = np.arange(L, dtype=np.int64)
    chi_x = chars.unit_roots(ctx)[(ks * ctx.dlog_of(x)) % L]
    return ctx.q / L * complex(np.dot(acc, chi_x))

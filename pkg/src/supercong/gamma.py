"""Morita's p-adic Gamma function modulo p^k.

Gamma_p(n) = (-1)^n * prod_{0<j<n, p!|j} j on positive integers, extended by
continuity.  For odd p, arguments congruent mod p^k give values congruent mod
p^k, so Gamma_p(a/b) mod p^k is read off at the canonical representative of
a/b in [0, p^k).

The unit product over [1, n) is split into blocks of length L = p^h with
h = ceil(k/2).  Because 2h >= k, (c*L)^2 vanishes mod p^k, so every block
product is first order in c*L:

    prod_{u unit <= L} (c*L + u) = e_m + c*L*e_{m-1}   (mod p^k)

and the product of C consecutive blocks collapses to
e_m^C + C(C-1)/2 * L * e_{m-1} * e_m^(C-1).  The trailing partial block uses
the same expansion on prefix data, so a lookup costs O(log C).
"""

from __future__ import annotations

import functools
from array import array
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import OutOfRange, PrecisionTooLow
from .padic import PAdic, PAdicContext, context_new

__all__ = [
    "MoritaTable",
    "build_table",
    "table_for",
    "morita_factorial",
    "gamma",
    "gamma_at",
    "g1_at_zero",
]


@dataclass(frozen=True)
class MoritaTable:
    ctx: PAdicContext
    block_len: int
    # (e_m, e_{m-1}) of the units in [1, block_len]; higher terms vanish mod p^k.
    e_top: tuple[int, int]
    # prefix_const[R], prefix_lin[R]: the same two coefficients for units in [1, R].
    prefix_const: array = field(repr=False)
    prefix_lin: array = field(repr=False)


def surviving_terms(k: int) -> int:
    """Number of powers s of c*L with (c*L)^s possibly nonzero mod p^k."""
    h = -(-k // 2)
    s = 0
    while s * h < k:
        s += 1
    return s


def build_table(ctx: PAdicContext) -> MoritaTable:
    p, k, m = ctx.p, ctx.k, ctx.modulus
    h = -(-k // 2)
    L = p**h
    assert surviving_terms(k) <= 2
    typecode = "q" if m < 2**62 else None
    const = array(typecode, [1]) if typecode else [1]
    lin = array(typecode, [0]) if typecode else [0]
    a, b = 1, 0
    # (a + b x)(u + x) = a u + (a + b u) x  (mod x^2)
    for u in range(1, L + 1):
        if u % p:
            a, b = a * u % m, (a + b * u) % m
        const.append(a)
        lin.append(b)
    return MoritaTable(ctx, L, (a, b), const, lin)


@functools.lru_cache(maxsize=64)
def _cached_table(p: int, k: int) -> MoritaTable:
    return build_table(context_new(p, k))


def table_for(ctx: PAdicContext) -> MoritaTable:
    return _cached_table(ctx.p, ctx.k)


def morita_factorial(tbl: MoritaTable, n: int) -> PAdic:
    """prod_{0<j<n, p!|j} j  mod p^k, for 0 <= n <= p^k."""
    ctx = tbl.ctx
    m = ctx.modulus
    if not 0 <= n <= m:
        raise OutOfRange(f"n = {n} outside [0, {m}]")
    if n <= 1:
        return ctx.one
    L = tbl.block_len
    blocks, rest = divmod(n - 1, L)
    e_m, e_m1 = tbl.e_top
    if blocks:
        lead = pow(e_m, blocks - 1, m)
        full = lead * (e_m + blocks * (blocks - 1) // 2 * L % m * e_m1) % m
    else:
        full = 1
    shift = blocks * L % m
    partial = (tbl.prefix_const[rest] + shift * tbl.prefix_lin[rest]) % m
    return PAdic(ctx, full * partial % m)


def gamma(tbl: MoritaTable, a: int, b: int = 1) -> PAdic:
    """Gamma_p(a/b) mod p^k; b must be prime to p."""
    n = tbl.ctx.from_rational(a, b).value
    val = morita_factorial(tbl, n)
    return -val if n & 1 else val


def gamma_at(ctx: PAdicContext, x) -> PAdic:
    """Gamma_p at an int or Fraction, using the cached table for ctx."""
    x = Fraction(x)
    return gamma(table_for(ctx), x.numerator, x.denominator)


def g1_at_zero(ctx: PAdicContext) -> PAdic:
    """G_1(0) mod p, read off from Gamma_p(p) / Gamma_p(0) = 1 + G_1(0) p (mod p^2)."""
    if ctx.k < 2:
        raise PrecisionTooLow("G_1(0) needs precision k >= 2")
    p = ctx.p
    c2 = context_new(p, 2)
    tbl = table_for(c2)
    q = gamma(tbl, p) / gamma(tbl, 0) - 1
    assert q.value % p == 0
    return PAdic(context_new(p, 1), q.value // p)

"""Exact-rational oracle: brute-force sums and the 7F6 -> 4F3 transformation.

Nothing here touches the modular fast paths except the final reduction step,
so these functions can be used to cross-check them.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import DenominatorNotUnit, PoleEncountered
from .padic import PAdic, PAdicContext

__all__ = [
    "BigRational",
    "IdentityInstance",
    "lemma21_lhs",
    "lemma21_rhs",
    "exact_sum_reduce",
    "sample_instances",
    "exact_weighted_sum",
    "exact_rhs_sum",
    "naive_unit_product",
    "naive_gamma",
    "quintic_at_two",
]

BigRational = Fraction


@dataclass(frozen=True)
class IdentityInstance:
    n: int
    m: int
    t: Fraction
    a: Fraction
    b: Fraction
    c: Fraction

    def __str__(self):
        return f"n={self.n} m={self.m} t={self.t} a={self.a} b={self.b} c={self.c}"


def _poch(x: Fraction, k: int) -> Fraction:
    out = Fraction(1)
    for j in range(k):
        out *= x + j
    return out


def _hypergeometric(numer, denom, last: int) -> Fraction:
    total = Fraction(0)
    for k in range(last + 1):
        top = math.prod((_poch(a, k) for a in numer), start=Fraction(1))
        bottom = math.prod((_poch(b, k) for b in denom), start=Fraction(math.factorial(k)))
        if bottom == 0:
            raise PoleEncountered(f"lower parameter pole at index {k}")
        total += top / bottom
    return total


def lemma21_lhs(inst: IdentityInstance) -> Fraction:
    n, m, t, a, b, c = inst.n, inst.m, inst.t, inst.a, inst.b, inst.c
    numer = [t, 1 + t / 2, Fraction(-n), t - a, t - b, t - c, 1 - t - m + n + a + b + c]
    denom = [t / 2, 1 + t + n, 1 + a, 1 + b, 1 + c, 2 * t + m - n - a - b - c]
    return _hypergeometric(numer, denom, n)


def lemma21_rhs(inst: IdentityInstance) -> Fraction:
    n, m, t, a, b, c = inst.n, inst.m, inst.t, inst.a, inst.b, inst.c
    ab, ac, bc = a + b + 1 - m - t, a + c + 1 - m - t, b + c + 1 - m - t
    e = a + b + c + 1 - m - 2 * t
    series = _hypergeometric(
        [Fraction(-m), Fraction(-n), e, a + b + c + 1 + n - m - t],
        [ab, ac, bc],
        min(m, n),
    )
    top = _poch(1 + t, n) * _poch(ab, n) * _poch(ac, n) * _poch(bc, n)
    bottom = _poch(1 + a, n) * _poch(1 + b, n) * _poch(1 + c, n) * _poch(e, n)
    if bottom == 0:
        raise PoleEncountered("prefactor denominator vanishes")
    return series * top / bottom


def sample_instances(
    count: int,
    seed: int,
    num_bound: int = 6,
    den_bound: int = 10,
    max_index: int = 6,
) -> tuple[list[IdentityInstance], int]:
    """Deterministic stream of pole-free instances; returns (instances, rejected)."""
    if count < 1:
        raise ValueError("count must be >= 1")
    rng = random.Random(seed)

    def rational():
        return Fraction(rng.randint(-num_bound, num_bound), rng.randint(1, den_bound))

    out, rejected = [], 0
    while len(out) < count:
        inst = IdentityInstance(
            rng.randint(0, max_index),
            rng.randint(0, max_index),
            rational(),
            rational(),
            rational(),
            rational(),
        )
        try:
            lemma21_lhs(inst)
            lemma21_rhs(inst)
        except PoleEncountered:
            rejected += 1
            continue
        out.append(inst)
    return out, rejected


def exact_sum_reduce(ctx: PAdicContext, terms: Fraction | int | Iterable[Fraction]) -> PAdic:
    """Sum exactly, then map num/den into Z/p^k."""
    if isinstance(terms, (int, Fraction)):
        total = Fraction(terms)
    else:
        total = sum(terms, Fraction(0))
    if total.denominator % ctx.p == 0:
        raise DenominatorNotUnit(f"{ctx.p} divides the denominator of the exact sum")
    return ctx.from_rational(total.numerator, total.denominator)


def exact_weighted_sum(family: str, r: int, upper: int) -> Fraction:
    """sum (6k+r)(r/3)_k^6/k!^6 or sum (10k+r)(r/5)_k^5/k!^5, each term formed from scratch."""
    if family == "cubic":
        slope, base, power = 6, Fraction(r, 3), 6
    elif family == "quintic":
        slope, base, power = 10, Fraction(r, 5), 5
    else:
        raise ValueError(family)
    return sum(
        ((slope * k + r) * (_poch(base, k) / math.factorial(k)) ** power for k in range(upper + 1)),
        Fraction(0),
    )


def exact_rhs_sum(family: str, r: int) -> Fraction:
    if family == "cubic":
        t = Fraction(r, 3)
        return _hypergeometric([Fraction(r - 1), t, t, t], [2 * t] * 3, 1 - r)
    if family == "quintic":
        t = Fraction(r, 5)
        return _hypergeometric(
            [Fraction(r - 1, 2), t, t, t],
            [2 * t, 2 * t, Fraction(1, 2) + Fraction(3 * r, 10)],
            (1 - r) // 2,
        )
    raise ValueError(family)


def naive_unit_product(p: int, k: int, n: int) -> int:
    """prod_{0<j<n, p!|j} j mod p^k by direct multiplication."""
    m = p**k
    out = 1
    for j in range(1, n):
        if j % p:
            out = out * j % m
    return out


def naive_gamma(p: int, k: int, x: Fraction | int) -> int:
    """Gamma_p(x) mod p^k from the defining product at the representative of x.

    Valid for odd p and for p = 2 with k >= 3, where the unit product over a
    full period mod 2^k is 1.
    """
    x = Fraction(x)
    m = p**k
    n = x.numerator * pow(x.denominator, -1, m) % m
    val = naive_unit_product(p, k, n)
    return -val % m if n & 1 else val


def quintic_at_two() -> dict:
    """The p = 2, r = 1 instance of the quintic congruence, checked mod 2^5."""
    p, k, r = 2, 5, 1
    m = p**k
    lhs = exact_weighted_sum("quintic", r, p - 1)
    g = {x: naive_gamma(p, k, x) for x in (Fraction(1, 5), Fraction(2, 5), Fraction(4, 5))}
    # Gamma_2(r/5)^4 / (Gamma_2(2r/5)^2 Gamma_2(1/2 + 3r/10) Gamma_2(1/2 - r/10)^3)
    gamma_quot = g[Fraction(1, 5)] ** 4 * pow(g[Fraction(2, 5)] ** 2 * g[Fraction(4, 5)] * g[Fraction(2, 5)] ** 3, -1, m)
    rhs = Fraction(12 * p**4, 25) * gamma_quot * exact_rhs_sum("quintic", r)
    diff = lhs - rhs
    lhs_mod = lhs.numerator * pow(lhs.denominator, -1, m) % m
    rhs_mod = rhs.numerator * pow(rhs.denominator, -1, m) % m
    if diff == 0:
        val = None
    else:
        val = _ord(diff.numerator, p) - _ord(diff.denominator, p)
    return {"lhs": lhs_mod, "rhs": rhs_mod, "valuation": val, "modulus": m}


def _ord(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v

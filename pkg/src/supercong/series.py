"""Pochhammer symbols and truncated hypergeometric sums over a coefficient ring.

A "ring" here is anything that embeds integers and Fractions when called:
``Fraction`` itself (exact arithmetic), a :class:`PAdicContext`, or a
:class:`CycloContext`.  Parameters are either exact rationals, which the
evaluator can inspect (termination, well-poised pairs), or elements of the
target ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Any, Callable, Sequence

from .errors import (
    DenominatorNotUnit,
    InvalidR,
    NonInvertibleDenominator,
    NonUnit,
    PoleEncountered,
)

__all__ = [
    "SeriesSpec",
    "pochhammer",
    "truncated_f",
    "weighted_sum_6",
    "weighted_sum_10",
    "finite_rhs_sum",
    "check_r_cubic",
    "check_r_quintic",
]

Ring = Callable[[Any], Any]


def pochhammer(x, n: int):
    """Rising factorial x (x+1) ... (x+n-1); (x)_0 = 1."""
    if n < 0:
        raise ValueError("Pochhammer index must be nonnegative")
    result = x**0
    for j in range(n):
        result = result * (x + j)
    return result


@dataclass
class SeriesSpec:
    numer: Sequence[Any]
    denom: Sequence[Any]
    z: Any = 1
    n: int = 0
    # Cancel exact-rational pairs a = b + d (d >= 0 integer) before summing.
    simplify: bool = True


def _is_rational(x) -> bool:
    return isinstance(x, (int, Rational))


def _pair_off(numer: list, denom: list):
    """Replace rational pairs (b + d)_k / (b)_k by the polynomial weight (b+k)_d / (b)_d."""
    numer, denom = list(numer), list(denom)
    weights = []
    i = 0
    while i < len(numer):
        a = numer[i]
        matched = False
        if _is_rational(a):
            for j, b in enumerate(denom):
                if _is_rational(b):
                    d = Fraction(a) - Fraction(b)
                    if d.denominator == 1 and 0 <= d <= 8:
                        if d:
                            weights.append((Fraction(b), int(d)))
                        del numer[i]
                        del denom[j]
                        matched = True
                        break
        if not matched:
            i += 1
    return numer, denom, weights


def _divide(num, den):
    try:
        return num / den
    except ZeroDivisionError:
        raise PoleEncountered("a lower Pochhammer symbol vanished") from None
    except (NonUnit, DenominatorNotUnit) as exc:
        raise NonInvertibleDenominator(str(exc)) from None


def truncated_f(spec: SeriesSpec, ring: Ring = Fraction):
    """sum_{k=0}^{n} prod (a_i)_k / (prod (b_j)_k k!) z^k.

    Terms are built incrementally.  A numerator parameter equal to a
    nonpositive integer -N stops the sum after index N, since every later
    term vanishes identically.
    """
    numer, denom, weights = list(spec.numer), list(spec.denom), []
    if spec.simplify:
        numer, denom, weights = _pair_off(numer, denom)
    last = spec.n
    for a in numer:
        if _is_rational(a):
            fa = Fraction(a)
            if fa.denominator == 1 and fa <= 0:
                last = min(last, -int(fa))
    if last < 0:
        return ring(0)
    try:
        num = [ring(a) for a in numer]
        den = [ring(b) for b in denom]
        z = ring(spec.z)
    except DenominatorNotUnit as exc:
        raise NonInvertibleDenominator(str(exc)) from None

    wparts = []
    for b, d in weights:
        rb = ring(b)
        wparts.append((rb, d, _divide(ring(1), pochhammer(rb, d))))

    def weight(k):
        w = ring(1)
        for rb, d, inv_norm in wparts:
            w = w * pochhammer(rb + k, d) * inv_norm
        return w

    term = ring(1)
    total = term * weight(0)
    for k in range(last):
        top = z
        for a in num:
            top = top * (a + k)
        bottom = ring(k + 1)
        for b in den:
            bottom = bottom * (b + k)
        term = _divide(term * top, bottom)
        total = total + term * weight(k + 1)
    return total


def check_r_cubic(r: int) -> None:
    if r > 1 or r % 3 == 0:
        raise InvalidR(f"r = {r}: need r <= 1 and gcd(r, 3) = 1")


def check_r_quintic(r: int) -> None:
    if r > 1 or r % 2 == 0 or r % 5 == 0:
        raise InvalidR(f"r = {r}: need r <= 1 odd with gcd(r, 5) = 1")


def _weighted_sum(ring: Ring, base: Fraction, power: int, slope: int, r: int, upper: int):
    total = ring(0)
    if upper < 0:
        return total
    x = ring(base)
    ratio_term = ring(1)
    for k in range(upper + 1):
        if k:
            ratio_term = _divide(ratio_term * (x + (k - 1)), ring(k))
        total = total + (slope * k + r) * ratio_term**power
    return total


def weighted_sum_6(ring: Ring, r: int, upper: int):
    """sum_{k=0}^{upper} (6k + r) (r/3)_k^6 / k!^6."""
    check_r_cubic(r)
    try:
        return _weighted_sum(ring, Fraction(r, 3), 6, 6, r, upper)
    except DenominatorNotUnit as exc:
        raise NonInvertibleDenominator(str(exc)) from None


def weighted_sum_10(ring: Ring, r: int, upper: int):
    """sum_{k=0}^{upper} (10k + r) (r/5)_k^5 / k!^5."""
    check_r_quintic(r)
    try:
        return _weighted_sum(ring, Fraction(r, 5), 5, 10, r, upper)
    except DenominatorNotUnit as exc:
        raise NonInvertibleDenominator(str(exc)) from None


def cubic_rhs_spec(r: int) -> SeriesSpec:
    check_r_cubic(r)
    t = Fraction(r, 3)
    return SeriesSpec([r - 1, t, t, t], [2 * t] * 3, 1, 1 - r)


def quintic_rhs_spec(r: int) -> SeriesSpec:
    check_r_quintic(r)
    t = Fraction(r, 5)
    return SeriesSpec(
        [Fraction(r - 1, 2), t, t, t],
        [2 * t, 2 * t, Fraction(1, 2) + Fraction(3 * r, 10)],
        1,
        (1 - r) // 2,
    )


def finite_rhs_sum(ring: Ring, family: str, r: int):
    """The terminating 4F3 sum appearing on the right of the cubic/quintic congruences."""
    if family == "cubic":
        spec = cubic_rhs_spec(r)
    elif family == "quintic":
        spec = quintic_rhs_spec(r)
    else:
        raise ValueError(f"unknown family {family!r}")
    try:
        return truncated_f(spec, ring)
    except DenominatorNotUnit as exc:
        raise NonInvertibleDenominator(str(exc)) from None

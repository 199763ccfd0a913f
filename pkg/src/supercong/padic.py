"""Arithmetic in Z/p^k with explicit p-adic valuation tracking.

Elements are stored by their canonical representative in ``[0, p^k)``.  The
valuation/unit decomposition ``value = unit * p^v`` is derived on demand, so
equality of canonical forms is plain integer equality.
"""

from __future__ import annotations

import functools
from numbers import Rational

from sympy import isprime

from .errors import (
    ContextMismatch,
    DenominatorNotUnit,
    EvenPrimeUnsupported,
    NonUnit,
    NotPrime,
    PrecisionOverflow,
)

__all__ = [
    "TOP",
    "PAdicContext",
    "PAdic",
    "context_new",
    "from_rational",
    "add",
    "mul",
    "neg",
    "inv",
    "residue",
    "valuation_of_difference",
    "ord_p",
]

MAX_MODULUS_BITS = 127


@functools.total_ordering
class _Top:
    """Valuation at or beyond the working precision."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("supercong.TOP")

    def __repr__(self):
        return "TOP"

    def __str__(self):
        return "top"

    def __reduce__(self):
        return (_Top, ())


TOP = _Top()


def ord_p(n: int, p: int) -> int:
    """Exponent of p in the nonzero integer n."""
    if n == 0:
        raise ValueError("ord_p(0) is infinite")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


class PAdicContext:
    """A fixed prime p and precision k; factory for elements of Z/p^k."""

    __slots__ = ("p", "k", "modulus")

    def __init__(self, p: int, k: int):
        p, k = int(p), int(k)
        if k < 1:
            raise PrecisionOverflow(f"precision must be >= 1, got {k}")
        if p == 2:
            raise EvenPrimeUnsupported("p = 2 is not supported by modular contexts")
        if p < 2 or not isprime(p):
            raise NotPrime(f"{p} is not prime")
        modulus = p**k
        if modulus.bit_length() > MAX_MODULUS_BITS:
            raise PrecisionOverflow(f"{p}^{k} exceeds {MAX_MODULUS_BITS} bits")
        self.p = p
        self.k = k
        self.modulus = modulus

    def __eq__(self, other):
        return isinstance(other, PAdicContext) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self):
        return hash((PAdicContext, self.p, self.k))

    def __repr__(self):
        return f"PAdicContext(p={self.p}, k={self.k})"

    def __reduce__(self):
        return (context_new, (self.p, self.k))

    def __call__(self, x) -> "PAdic":
        """Embed an int, a Fraction with p-free denominator, or a PAdic."""
        if isinstance(x, PAdic):
            if x.ctx == self:
                return x
            if x.ctx.p == self.p and x.ctx.k >= self.k:
                return PAdic(self, x.value % self.modulus)
            raise ContextMismatch(f"cannot coerce {x.ctx} element into {self}")
        if isinstance(x, int):
            return PAdic(self, x % self.modulus)
        if isinstance(x, Rational):
            return self.from_rational(x.numerator, x.denominator)
        raise TypeError(f"cannot embed {type(x).__name__} into {self}")

    def from_rational(self, a: int, b: int = 1) -> "PAdic":
        if b == 0:
            raise ZeroDivisionError("zero denominator")
        if b % self.p == 0:
            raise DenominatorNotUnit(f"{self.p} divides the denominator {b}")
        m = self.modulus
        return PAdic(self, a * pow(b, -1, m) % m)

    def residue(self, a: int, b: int = 1) -> int:
        """The least nonnegative residue of a/b modulo p."""
        if b % self.p == 0:
            raise DenominatorNotUnit(f"{self.p} divides the denominator {b}")
        return a * pow(b, -1, self.p) % self.p

    def reduce(self, k: int) -> "PAdicContext":
        return context_new(self.p, k)

    @property
    def zero(self) -> "PAdic":
        return PAdic(self, 0)

    @property
    def one(self) -> "PAdic":
        return PAdic(self, 1 % self.modulus)


@functools.lru_cache(maxsize=None)
def context_new(p: int, k: int) -> PAdicContext:
    return PAdicContext(p, k)


class PAdic:
    """An element u * p^v of Z/p^k."""

    __slots__ = ("ctx", "value")

    def __init__(self, ctx: PAdicContext, value: int):
        self.ctx = ctx
        self.value = value

    @property
    def valuation(self):
        if self.value == 0:
            return TOP
        return ord_p(self.value, self.ctx.p)

    @property
    def unit(self) -> int:
        """Unit part, reduced modulo p^(k - v); zero for the zero element."""
        if self.value == 0:
            return 0
        return self.value // self.ctx.p ** self.valuation

    def is_unit(self) -> bool:
        return self.value % self.ctx.p != 0

    def _coerce(self, other) -> "PAdic":
        if isinstance(other, PAdic):
            if other.ctx != self.ctx:
                raise ContextMismatch(f"{self.ctx} vs {other.ctx}")
            return other
        if isinstance(other, (int, Rational)):
            return self.ctx(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return PAdic(self.ctx, (self.value + other.value) % self.ctx.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return PAdic(self.ctx, (self.value - other.value) % self.ctx.modulus)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return PAdic(self.ctx, self.value * other.value % self.ctx.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return PAdic(self.ctx, -self.value % self.ctx.modulus)

    def __pos__(self):
        return self

    def inv(self) -> "PAdic":
        if not self.is_unit():
            raise NonUnit(f"{self!r} is not a unit")
        return PAdic(self.ctx, pow(self.value, -1, self.ctx.modulus))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inv()

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        return PAdic(self.ctx, pow(self.value, e, self.ctx.modulus))

    def __eq__(self, other):
        if isinstance(other, PAdic):
            return self.ctx == other.ctx and self.value == other.value
        if isinstance(other, (int, Rational)):
            try:
                return self.value == self.ctx(other).value
            except DenominatorNotUnit:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self.value))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"PAdic({self.value} mod {self.ctx.p}^{self.ctx.k})"

    def __str__(self):
        return str(self.value)


def from_rational(ctx: PAdicContext, a: int, b: int = 1) -> PAdic:
    return ctx.from_rational(a, b)


def add(x: PAdic, y: PAdic) -> PAdic:
    return x + y


def mul(x: PAdic, y: PAdic) -> PAdic:
    return x * y


def neg(x: PAdic) -> PAdic:
    return -x


def inv(x: PAdic) -> PAdic:
    return x.inv()


def residue(ctx: PAdicContext, a: int, b: int = 1) -> int:
    return ctx.residue(a, b)


def valuation_of_difference(x: PAdic, y: PAdic):
    """v(x - y), or TOP when x == y in Z/p^k."""
    if not isinstance(y, PAdic) or x.ctx != y.ctx:
        raise ContextMismatch("valuation_of_difference needs elements of one context")
    return (x - y).valuation


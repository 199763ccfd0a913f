"""The rings Z/p^k[zeta_n] = (Z/p^k)[x] / Phi_n(x) for n in {4, 5}."""

from __future__ import annotations

import functools
import math
from numbers import Rational

from .errors import ContextMismatch, NonUnit
from .padic import PAdic, PAdicContext, context_new

__all__ = [
    "CycloContext",
    "CycloElem",
    "cyclo_context",
    "zeta_pow",
    "quintuple_product",
    "quadruple_product",
]

# Phi_n as low-to-high coefficients, monic of degree phi(n).
_PHI = {
    4: (1, 0, 1),
    5: (1, 1, 1, 1, 1),
}


class CycloContext:
    __slots__ = ("base", "n", "degree", "_modulus")

    def __init__(self, base: PAdicContext, n: int):
        if n not in _PHI:
            raise ValueError(f"only n in {{4, 5}} is supported, got {n}")
        self.base = base
        self.n = n
        self.degree = len(_PHI[n]) - 1
        self._modulus = base.modulus

    def __eq__(self, other):
        return isinstance(other, CycloContext) and (self.base, self.n) == (other.base, other.n)

    def __hash__(self):
        return hash((CycloContext, self.base, self.n))

    def __repr__(self):
        return f"CycloContext(p={self.base.p}, k={self.base.k}, n={self.n})"

    def __reduce__(self):
        return (cyclo_context, (self.base.p, self.base.k, self.n))

    def _reduce(self, poly: list[int]) -> tuple[int, ...]:
        phi, d, m = _PHI[self.n], self.degree, self._modulus
        poly = list(poly)
        for top in range(len(poly) - 1, d - 1, -1):
            c = poly[top]
            if c:
                for i in range(d):
                    poly[top - d + i] -= c * phi[i]
            poly[top] = 0
        poly += [0] * (d - len(poly))
        return tuple(c % m for c in poly[:d])

    def elem(self, coeffs) -> "CycloElem":
        return CycloElem(self, self._reduce([int(self.base(c)) for c in coeffs]))

    def __call__(self, x) -> "CycloElem":
        if isinstance(x, CycloElem):
            if x.ctx != self:
                raise ContextMismatch(f"{x.ctx} vs {self}")
            return x
        if isinstance(x, (int, Rational, PAdic)):
            c = [0] * self.degree
            c[0] = self.base(x).value
            return CycloElem(self, tuple(c))
        raise TypeError(f"cannot embed {type(x).__name__} into {self}")

    @property
    def zeta(self) -> "CycloElem":
        return zeta_pow(self, 1)

    @property
    def zero(self) -> "CycloElem":
        return CycloElem(self, (0,) * self.degree)

    @property
    def one(self) -> "CycloElem":
        return self(1)


@functools.lru_cache(maxsize=None)
def cyclo_context(p: int, k: int, n: int) -> CycloContext:
    return CycloContext(context_new(p, k), n)


class CycloElem:
    """c_0 + c_1 zeta + ... + c_{d-1} zeta^{d-1}, coefficients in [0, p^k)."""

    __slots__ = ("ctx", "_c")

    def __init__(self, ctx: CycloContext, coeffs: tuple[int, ...]):
        self.ctx = ctx
        self._c = coeffs

    @property
    def coeffs(self) -> tuple[PAdic, ...]:
        base = self.ctx.base
        return tuple(PAdic(base, c) for c in self._c)

    @property
    def ints(self) -> tuple[int, ...]:
        return self._c

    def in_base_ring(self) -> bool:
        return not any(self._c[1:])

    def base_part(self) -> PAdic:
        """The element as a base-ring value; only meaningful when in_base_ring()."""
        if not self.in_base_ring():
            raise ValueError(f"{self} does not lie in the base ring")
        return PAdic(self.ctx.base, self._c[0])

    def _coerce(self, other):
        if isinstance(other, CycloElem):
            if other.ctx != self.ctx:
                raise ContextMismatch(f"{self.ctx} vs {other.ctx}")
            return other
        if isinstance(other, (int, Rational, PAdic)):
            return self.ctx(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        m = self.ctx._modulus
        return CycloElem(self.ctx, tuple((a + b) % m for a, b in zip(self._c, other._c)))

    __radd__ = __add__

    def __neg__(self):
        m = self.ctx._modulus
        return CycloElem(self.ctx, tuple(-a % m for a in self._c))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        prod = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        return CycloElem(self.ctx, self.ctx._reduce(prod))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        result, base = self.ctx.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self, j: int) -> "CycloElem":
        """Image under the automorphism zeta -> zeta^j (gcd(j, n) = 1)."""
        out = self.ctx.zero
        for i, c in enumerate(self._c):
            if c:
                out = out + zeta_pow(self.ctx, i * j) * c
        return out

    def _galois(self) -> list[int]:
        n = self.ctx.n
        return [j for j in range(1, n) if math.gcd(j, n) == 1]

    def norm(self) -> PAdic:
        prod = self.ctx.one
        for j in self._galois():
            prod = prod * self.conjugate(j)
        return prod.base_part()

    def is_unit(self) -> bool:
        return self.norm().is_unit()

    def inv(self) -> "CycloElem":
        others = self.ctx.one
        for j in self._galois()[1:]:
            others = others * self.conjugate(j)
        nrm = (self * others).base_part()
        if not nrm.is_unit():
            raise NonUnit(f"{self} is not a unit (norm {nrm})")
        return others * nrm.inv()

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

    def __eq__(self, other):
        if isinstance(other, CycloElem):
            return self.ctx == other.ctx and self._c == other._c
        if isinstance(other, (int, Rational, PAdic)):
            return self._c == self.ctx(other)._c
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self._c))

    def __repr__(self):
        return f"CycloElem({list(self._c)} in {self.ctx!r})"

    def __str__(self):
        return "[" + ",".join(str(c) for c in self._c) + "]"


def zeta_pow(ctx: CycloContext, j: int) -> CycloElem:
    j %= ctx.n
    poly = [0] * (j + 1)
    poly[j] = 1
    return CycloElem(ctx, ctx._reduce(poly))


def quintuple_product(ctx: CycloContext, u, v, j) -> CycloElem:
    """prod_{s=0}^{4} (u + j + v p zeta^s), computed factor by factor."""
    if ctx.n != 5:
        raise ContextMismatch("quintuple_product needs n = 5")
    base = ctx(u) + ctx(j)
    vp = ctx(v) * ctx.base.p
    out = ctx.one
    for s in range(5):
        out = out * (base + vp * zeta_pow(ctx, s))
    return out


def quadruple_product(ctx: CycloContext, u, v, j) -> CycloElem:
    """(u+j+vp)(u+j-vp)(u+j+vip)(u+j-vip), computed factor by factor."""
    if ctx.n != 4:
        raise ContextMismatch("quadruple_product needs n = 4")
    base = ctx(u) + ctx(j)
    vp = ctx(v) * ctx.base.p
    i = zeta_pow(ctx, 1)
    return (base + vp) * (base - vp) * (base + vp * i) * (base - vp * i)

"""Catalog of the congruences and lemmas as parameterized checks.

Every check returns a :class:`CongruenceReport` carrying both sides, the exact
valuation of their difference and a verdict.  Precondition violations produce
``skipped`` reports naming the violated condition; they never raise.
"""

from __future__ import annotations

import enum
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Callable

from sympy import isprime, primerange

from . import oracle
from .cyclo import CycloElem, cyclo_context, quadruple_product, quintuple_product, zeta_pow
from .errors import NonInvertibleDenominator, NotPrime, UnknownCheck, UnknownPair
from .gamma import g1_at_zero, gamma_at
from .padic import TOP, PAdic, PAdicContext, context_new
from .series import finite_rhs_sum, pochhammer, weighted_sum_6, weighted_sum_10

__all__ = [
    "CheckId",
    "Status",
    "CongruenceReport",
    "run_check",
    "run_grid",
    "cross_consistency",
    "CROSS_PAIRS",
    "REGISTRY",
    "rhs_cubic",
    "rhs_quintic",
    "corollary_r1_rhs",
]


class CheckId(str, enum.Enum):
    VAN_HAMME_D2 = "van_hamme_d2"
    LR_11 = "lr_11"
    LR_11_MOD_P7_FAILURE = "lr_11_mod_p7_failure"
    GS_12 = "gs_12"
    LIU_13 = "liu_13"
    GLS_INLINE_P5 = "gls_inline_p5"
    THM_1_1 = "thm_1_1"
    THM_1_2 = "thm_1_2"
    THM_1_2_R1_COROLLARY = "thm_1_2_r1_corollary"
    CONJ_4_1 = "conj_4_1"
    LEMMA_2_1 = "lemma_2_1"
    LEMMA_2_2 = "lemma_2_2"
    LEMMA_2_3 = "lemma_2_3"
    LEMMA_2_4 = "lemma_2_4"
    LEMMA_2_5 = "lemma_2_5"
    LEMMA_2_6 = "lemma_2_6"
    LEMMA_2_7 = "lemma_2_7"
    EQ_2_3_KEY = "eq_2_3_key"
    LEMMA_3_1 = "lemma_3_1"
    LEMMA_3_2 = "lemma_3_2"
    GLS_MODP_FACTS = "gls_modp_facts"
    TAIL_VANISHING = "tail_vanishing"

    @classmethod
    def parse(cls, value) -> "CheckId":
        if isinstance(value, cls):
            return value
        try:
            return cls(value)
        except ValueError:
            raise UnknownCheck(f"unknown check id {value!r}") from None


class Status(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"
    CONJECTURAL_PASS = "conjectural_pass"
    CONJECTURAL_FAIL = "conjectural_fail"


@dataclass
class CongruenceReport:
    check: str
    p: int | None
    r: int | None
    precision: int | None  # None: exact rational equality demanded
    lhs: str
    rhs: str
    diff_valuation: object  # int, TOP, or None when skipped
    status: Status
    reason: str = ""
    seed: int | None = None
    elapsed: float = 0.0

    @property
    def failed(self) -> bool:
        return self.status in (Status.FAIL, Status.CONJECTURAL_FAIL)

    @property
    def skipped(self) -> bool:
        return self.status is Status.SKIPPED

    def to_dict(self, timing: bool = True) -> dict:
        d = asdict(self)
        d["status"] = self.status.value
        d["diff_valuation"] = render_valuation(self.diff_valuation)
        d["precision"] = "exact" if self.precision is None else self.precision
        if timing:
            d["elapsed"] = round(self.elapsed, 6)
        else:
            del d["elapsed"]
        return d


def render_valuation(v) -> object:
    if v is None:
        return None
    if v is TOP:
        return "top"
    return v


def render(x) -> str:
    """Canonical text: integers in [0, p^k), "[c0,...]" for cyclotomic elements, a/b for rationals."""
    return str(x)


# ----------------------------------------------------------------------------
# Case bookkeeping


class _Skip(Exception):
    pass


@dataclass
class Case:
    lhs: object
    rhs: object
    diff: object  # int or TOP
    demanded: int | None  # None: exact equality
    label: str = ""

    @property
    def ok(self) -> bool:
        if self.demanded is None:
            return self.diff is TOP
        return self.diff >= self.demanded

    @property
    def margin(self) -> float:
        if self.diff is TOP:
            return math.inf
        if self.demanded is None:
            return -1
        return self.diff - self.demanded


def _valuation(x) -> object:
    if isinstance(x, PAdic):
        return x.valuation
    if isinstance(x, CycloElem):
        vals = [c.valuation for c in x.coeffs]
        return min(vals)
    raise TypeError(type(x))


def _case(lhs, rhs, demanded, label="") -> Case:
    if isinstance(lhs, Fraction) or isinstance(rhs, Fraction):
        return Case(lhs, rhs, TOP if lhs == rhs else 0, None, label)
    return Case(lhs, rhs, _valuation(lhs - rhs), demanded, label)


def _require(cond: bool, reason: str) -> None:
    if not cond:
        raise _Skip(reason)


def _ctx(p: int, k: int) -> PAdicContext:
    return context_new(p, k)


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def _harmonic(ctx, start: int, stop: int, power: int = 1, shift=0) -> PAdic:
    """sum_{j=start}^{stop} 1/(shift + j)^power in ctx."""
    total = ctx.zero
    s = ctx(shift)
    for j in range(start, stop + 1):
        total = total + (s + j) ** (-power)
    return total


# ----------------------------------------------------------------------------
# Hypotheses


def _odd(p: int) -> None:
    _require(p != 2, "p = 2 outside modular contexts")


def _hyp_cubic(p: int, r: int, strict: bool = True) -> None:
    _require(r <= 1 and r % 3 != 0, "r <= 1 and gcd(r, 3) = 1 violated")
    _require((p + r) % 3 == 0, "p ≡ -r (mod 3) violated")
    _require(p >= 3 - r, "p >= 3 - r violated")
    if strict:
        _require(p > 3, "p > 3 violated")
    _odd(p)


def _hyp_quintic(p: int, r: int) -> None:
    _require(r <= 1 and r % 2 != 0 and r % 5 != 0, "r <= 1 odd with gcd(r, 5) = 1 violated")
    _require((p - 2 * r) % 5 == 0, "p ≡ 2r (mod 5) violated")
    _require(2 * p >= 5 - r, "p >= (5 - r)/2 violated")


def _hyp_conj(p: int, r: int) -> None:
    _require(r <= 1 and r % 2 != 0 and r % 5 != 0, "r <= 1 odd with gcd(r, 5) = 1 violated")
    _require((p - r) % 5 == 0, "p ≡ r (mod 5) violated")
    _require(2 * p >= 5 - 3 * r, "p >= (5 - 3r)/2 violated")
    _require(p != 2, "p odd violated")


# ----------------------------------------------------------------------------
# Right-hand sides shared by checks and cross-consistency


def rhs_cubic(ctx: PAdicContext, r: int) -> PAdic:
    """(-1)^(r+1) 80 r p^4/81 * Gamma quotient * terminating 4F3 (cubic family)."""
    p = ctx.p
    g = lambda x: gamma_at(ctx, x)  # noqa: E731
    t = Fraction(r, 3)
    quot = g(1 + t) ** 2 / (g(1 + 2 * t) ** 3 * g(1 - t) ** 4)
    coeff = ctx(Fraction(_sign(r + 1) * 80 * r, 81)) * ctx(p) ** 4
    return coeff * quot * finite_rhs_sum(ctx, "cubic", r)


def _quintic_gamma_quotient(ctx: PAdicContext, r: int) -> PAdic:
    g = lambda x: gamma_at(ctx, x)  # noqa: E731
    t = Fraction(r, 5)
    half = Fraction(1, 2)
    return g(t) ** 4 / (g(2 * t) ** 2 * g(half + Fraction(3 * r, 10)) * g(half - Fraction(r, 10)) ** 3)


def rhs_quintic(ctx: PAdicContext, r: int, conjectural: bool = False) -> PAdic:
    """12 p^4/25 (or p, for the conjectural class) * Gamma quotient * terminating 4F3."""
    p = ctx.p
    coeff = ctx(p) if conjectural else ctx(Fraction(12, 25)) * ctx(p) ** 4
    return coeff * _quintic_gamma_quotient(ctx, r) * finite_rhs_sum(ctx, "quintic", r)


# ----------------------------------------------------------------------------
# Individual checks.  Signature: (p, r, precision, seed) -> list[Case]


def _van_hamme(p, r, prec, seed):
    _require(p >= 5, "p >= 5 violated")
    c = _ctx(p, prec)
    lhs = weighted_sum_6(c, 1, p - 1)
    rhs = -c(p) * gamma_at(c, Fraction(1, 3)) ** 9 if p % 6 == 1 else c.zero
    return [_case(lhs, rhs, prec)]


def _lr_rhs(c: PAdicContext) -> PAdic:
    p = c.p
    g9 = gamma_at(c, Fraction(1, 3)) ** 9
    if p % 6 == 1:
        return -c(p) * g9
    return -c(Fraction(10, 27)) * c(p) ** 4 * g9


def _lr_11(p, r, prec, seed):
    _require(p >= 5, "p >= 5 violated")
    c = _ctx(p, prec)
    return [_case(weighted_sum_6(c, 1, p - 1), _lr_rhs(c), prec)]


def _lr_11_failure(p_max, r, prec, seed):
    # Existential: some prime in [5, p_max] where the difference has valuation
    # exactly prec - 1, i.e. the congruence fails one step higher.
    _require(p_max >= 5, "scan bound p >= 5 violated")
    witnesses, cases = [], []
    for p in primerange(5, p_max + 1):
        c = _ctx(p, prec)
        lhs, rhs = weighted_sum_6(c, 1, p - 1), _lr_rhs(c)
        diff = _valuation(lhs - rhs)
        if diff == prec - 1:
            witnesses.append(p)
            cases.append((p, lhs, rhs, diff))
    if not witnesses:
        return [Case("", "", 0, None, f"no prime in [5, {p_max}] with valuation exactly {prec - 1}")], {}
    p, lhs, rhs, diff = cases[0]
    case = Case(lhs, rhs, diff, prec - 1, "witnesses: " + ",".join(map(str, witnesses)))
    return [case], {"p": p}


def _gs_12(p, r, prec, seed):
    _require(p % 6 == 1, "p ≡ 1 (mod 6) violated")
    c = _ctx(p, prec)
    return [_case(weighted_sum_6(c, -1, p - 1), c.zero, prec)]


def _liu_13(p, r, prec, seed):
    _require(p > 3, "p > 3 violated")
    _require(p != 5, "p ≠ 5 violated")
    c = _ctx(p, prec)
    g9 = gamma_at(c, Fraction(2, 3)) ** 9
    rhs = 140 * c(p) ** 4 * g9 if p % 6 == 1 else 378 * c(p) * g9
    return [_case(weighted_sum_6(c, -1, p - 1), rhs, prec)]


def _gls_inline(p, r, prec, seed):
    _hyp_cubic(p, r, strict=False)
    c = _ctx(p, prec)
    return [_case(weighted_sum_6(c, r, p - 1), rhs_cubic(c, r), prec)]


def _thm_1_1(p, r, prec, seed):
    _hyp_cubic(p, r)
    c = _ctx(p, prec)
    return [_case(weighted_sum_6(c, r, p - 1), rhs_cubic(c, r), prec)]


def _thm_1_2(p, r, prec, seed):
    _hyp_quintic(p, r)
    if p == 2:
        res = oracle.quintic_at_two()
        k = min(prec, 5)
        _require(k == prec, "p = 2 case is checked mod 2^5 only")
        v = res["valuation"]
        diff = TOP if v is None or v >= k else v
        return [Case(res["lhs"], res["rhs"], diff, k, "exact oracle mod 32")]
    c = _ctx(p, prec)
    return [_case(weighted_sum_10(c, r, p - 1), rhs_quintic(c, r), prec)]


def corollary_r1_rhs(ctx: PAdicContext, literal: bool = False) -> PAdic:
    """Closed form of the quintic congruence at r = 1, for p ≡ 2 (mod 5).

    Reflection gives Gamma_p(4/5) = -1/Gamma_p(1/5) here (the representative of
    4/5 is (4 + 3p)/5, which is odd), so the Gamma quotient collapses to
    -Gamma_p(1/5)^5 / Gamma_p(2/5)^5.  ``literal=True`` returns the commonly
    quoted form 12p^4 / (25 Gamma_p(1/5)^5 Gamma_p(2/5)^5) instead, which is
    off by a unit and only agrees mod p^4.
    """
    g = lambda x: gamma_at(ctx, x)  # noqa: E731
    base = ctx(Fraction(12, 25)) * ctx(ctx.p) ** 4
    if literal:
        return base / (g(Fraction(1, 5)) ** 5 * g(Fraction(2, 5)) ** 5)
    return -base * g(Fraction(1, 5)) ** 5 / g(Fraction(2, 5)) ** 5


def _thm_1_2_r1(p, r, prec, seed):
    _odd(p)
    _require(p % 5 == 2, "p ≡ 2 (mod 5) violated")
    c = _ctx(p, prec)
    return [_case(weighted_sum_10(c, 1, p - 1), corollary_r1_rhs(c), prec)]


def _conj_4_1(p, r, prec, seed):
    _hyp_conj(p, r)
    c = _ctx(p, prec)
    try:
        rhs = rhs_quintic(c, r, conjectural=True)
    except NonInvertibleDenominator as exc:
        raise _Skip(f"right-hand side not p-integral: {exc}") from None
    return [_case(weighted_sum_10(c, r, p - 1), rhs, prec)]


_L21_FIXED = [
    (Fraction(1, 2), Fraction(1, 3), Fraction(1, 5), Fraction(2, 7)),
    (Fraction(-3, 4), Fraction(2, 9), Fraction(5, 11), Fraction(-1, 6)),
    (Fraction(7, 3), Fraction(-2, 5), Fraction(1, 4), Fraction(3, 8)),
]


def lemma_2_1_instances(seed: int, count: int = 100):
    """The sampled instances plus the fixed boundary grid n, m in {0..3}."""
    sampled, rejected = oracle.sample_instances(count, seed)
    grid = []
    for t, a, b, c in _L21_FIXED:
        for n in range(4):
            for m in range(4):
                grid.append(oracle.IdentityInstance(n, m, t, a, b, c))
    return sampled + grid, rejected


def _lemma_2_1(p, r, prec, seed, trials=100):
    instances, rejected = lemma_2_1_instances(seed, trials)
    cases = []
    for inst in instances:
        try:
            lhs, rhs = oracle.lemma21_lhs(inst), oracle.lemma21_rhs(inst)
        except oracle.PoleEncountered:
            rejected += 1
            continue
        cases.append(_case(lhs, rhs, None, str(inst)))
    reason = f"{len(cases)} instances, {rejected} pole rejections"
    bad = [c for c in cases if not c.ok]
    if bad:
        reason += f"; {len(bad)} unequal, first: {bad[0].label}"
    return cases, {"reason": reason}


LEMMA_2_2_ARGS = [
    Fraction(0), Fraction(1), Fraction(2), Fraction(7),
    Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(-1, 3),
    Fraction(1, 5), Fraction(2, 5), Fraction(4, 5), Fraction(3, 10),
    Fraction(-7, 10), Fraction(5, 7), Fraction(-11, 6), Fraction(13, 4),
]


def _lemma_2_2(p, r, prec, seed):
    _odd(p)
    cases = []
    for k in range(1, prec + 1):
        c = _ctx(p, k)
        g = lambda x: gamma_at(c, x)  # noqa: E731
        cases.append(_case(g(0), c.one, k, f"Gamma(0) k={k}"))
        cases.append(_case(g(1), -c.one, k, f"Gamma(1) k={k}"))
        args = [x for x in LEMMA_2_2_ARGS if x.denominator % p] + [Fraction(p), Fraction(2 * p + 1)]
        for x in args:
            gx = g(x)
            if not gx.is_unit():
                cases.append(Case(gx, "unit", 0, k, f"Gamma({x}) not a unit"))
            e = (-x.numerator * pow(x.denominator, -1, p)) % p
            cases.append(_case(gx * g(1 - x), c(_sign(e - 1)), k, f"reflection x={x} k={k}"))
            cases.append(_case(gx, g(x + p), min(k, 1), f"stability x={x} k={k}"))
            n = c(x).value
            if n != c.modulus - 1:
                expect = -c(x) * gx if c(x).is_unit() else -gx
                cases.append(_case(g(x + 1), expect, k, f"shift x={x} k={k}"))
    return cases


def _lemma_2_3(p, r, prec, seed):
    _odd(p)
    c = _ctx(p, max(prec, 2))
    g1 = c(g1_at_zero(c).value)
    cases = []
    for x in range(p):
        nx = (-x) % p
        h = _harmonic(c, 1, p - 1 - nx)
        for t in (1, 2, 3):
            lhs = gamma_at(c, x + t * p) / gamma_at(c, x)
            rhs = 1 + g1 * t * p + c(t * p) * h
            cases.append(_case(lhs, rhs, 2, f"x={x} t={t}"))
    return cases


def _sample_units(p: int, k: int, seed, tag: str, count: int):
    rng = random.Random(f"{seed}:{tag}:{p}")
    m = p**k
    out = []
    while len(out) < count:
        u, v = rng.randrange(1, m), rng.randrange(1, m)
        if u % p and v % p:
            out.append((u, v))
    return out


def _cyclo_lemma(p, prec, seed, n, samples=20):
    _odd(p)
    cc = cyclo_context(p, prec, n)
    base = cc.base
    cases = []
    pw = 5 if n == 5 else 4
    for u_int, v_int in _sample_units(p, prec, seed, f"lemma{n}", samples):
        u, v = base(u_int), base(v_int)
        if n == 5:
            shifts = [cc(v * p) * zeta_pow(cc, s) for s in range(5)]
        else:
            i = zeta_pow(cc, 1)
            vp = cc(v * p)
            shifts = [vp, -vp, vp * i, -vp * i]
        top = base.residue(-u_int)
        lhs = cc.one
        upow = base.one
        hsum = base.zero
        for k in range(top + 1):
            if k:
                j = k - 1
                for sh in shifts:
                    lhs = lhs * (cc(u + j) + sh)
                upow = upow * (u + j)
                hsum = hsum + (u + j) ** (-pw)
                # exact single-factor identity
                if n == 5:
                    single = quintuple_product(cc, u, v, base(j))
                    closed = (u + j) ** 5 + (v * p) ** 5
                else:
                    single = quadruple_product(cc, u, v, base(j))
                    closed = (u + j) ** 4 - (v * p) ** 4
                cases.append(_case(single, cc(closed), prec, f"factor u={u_int} v={v_int} j={j}"))
            if n == 5:
                rhs = upow**5 * (1 + v**5 * base(p) ** 5 * hsum)
            else:
                rhs = upow**4 * (1 - v**4 * base(p) ** 4 * hsum)
            cases.append(_case(lhs, cc(rhs), prec, f"u={u_int} v={v_int} k={k}"))
    return cases


def _lemma_2_4(p, r, prec, seed, trials=20):
    return _cyclo_lemma(p, prec, seed, 5, trials)


def _lemma_3_1(p, r, prec, seed, trials=20):
    return _cyclo_lemma(p, prec, seed, 4, trials)


def _lemma_2_5(p, r, prec, seed):
    _hyp_cubic(p, r)
    c = _ctx(p, prec)
    t = c(Fraction(r, 3))
    total = c.zero
    term = c.one
    h_shift, h_int = c.zero, c.zero
    for k in range((2 * p - r) // 3 + 1):
        if k:
            term = term * (t + (k - 1)) / k
            h_shift = h_shift + (t + (k - 1)) ** (-5)
            h_int = h_int + c(k) ** (-5)
        total = total + (6 * k + r) * term**6 * (h_shift + h_int)
    return [_case(total, c.zero, prec)]


def _lemma_2_6(p, r, prec, seed):
    _require(r is not None and r <= 1 and r % 3 != 0, "r <= 1 and gcd(r, 3) = 1 violated")
    t, tt = Fraction(r, 3), Fraction(2 * r, 3)
    coeff = Fraction(1)
    lhs = rhs = Fraction(0)
    tail = sum((1 / (tt + j) for j in range(-r + 1)), Fraction(0))
    h2 = h1 = Fraction(0)
    for k in range(1 - r + 1):
        if k:
            j = k - 1
            coeff *= (r - 1 + j) * (t + j) ** 3 / (k * (tt + j) ** 3)
            h2 += 1 / (tt + j)
            h1 += 1 / (t + j)
        lhs += coeff * (h2 - h1)
        rhs += coeff * tail
    return [_case(lhs, rhs, None)]


def _lemma_2_7(p, r, prec, seed):
    _hyp_cubic(p, r)
    c = _ctx(p, prec)
    tt = Fraction(2 * r, 3)
    total = (
        _harmonic(c, 0, (p - 2 * r - 3) // 3, shift=tt)
        + _harmonic(c, 1, (p + r - 3) // 3)
        - _harmonic(c, 0, -r, shift=tt)
    )
    return [_case(total, c.zero, prec)]


def _eq_2_3_key(p, r, prec, seed):
    _hyp_cubic(p, r)
    c = _ctx(p, prec)
    N, M, Q = (2 * p - r) // 3, (p - 2 * r) // 3, (p + r - 3) // 3
    P = lambda x, n: pochhammer(c(x), n)  # noqa: E731
    lhs = (
        _sign(N)
        * P(Fraction(r, 3), N)
        * P(Fraction(2 * r, 3), M) ** 3
        * P(1, Q) ** 3
        * P(1 + Fraction(2 * p, 3), N)
        / P(1, N) ** 5
        * (1 + c(p) * _harmonic(c, 1, Q))
    )
    g = lambda x: gamma_at(c, x)  # noqa: E731
    t = Fraction(r, 3)
    rhs = c(Fraction(_sign(r + 1) * 8 * r, 3)) * g(1 + t) ** 2 / (g(1 + 2 * t) ** 3 * g(1 - t) ** 4)
    return [_case(lhs, rhs, prec)]


def _lemma_3_2(p, r, prec, seed):
    _hyp_quintic(p, r)
    _odd(p)
    c = _ctx(p, prec)
    t = c(Fraction(r, 5))
    total = c.zero
    term = c.one
    h_shift, h_int = c.zero, c.zero
    for k in range((3 * p - r) // 5 + 1):
        if k:
            term = term * (t + (k - 1)) / k
            h_shift = h_shift + (t + (k - 1)) ** (-4)
            h_int = h_int + c(k) ** (-4)
        total = total + (10 * k + r) * term**5 * (h_shift - h_int)
    return [_case(total, c.zero, prec)]


def _family_cases(p, r, prec, cubic_fn, quintic_fn):
    cases, reasons = [], []
    try:
        _hyp_cubic(p, r)
        cases += cubic_fn()
    except _Skip as exc:
        reasons.append(f"cubic: {exc}")
    try:
        _hyp_quintic(p, r)
        _odd(p)
        cases += quintic_fn()
    except _Skip as exc:
        reasons.append(f"quintic: {exc}")
    if not cases:
        raise _Skip("; ".join(reasons))
    return cases


def _gls_modp(p, r, prec, seed):
    def cubic():
        c = _ctx(p, prec)
        return [_case(weighted_sum_6(c, r, (2 * p - r) // 3), c.zero, prec, "cubic")]

    def quintic():
        c = _ctx(p, prec)
        return [_case(weighted_sum_10(c, r, (3 * p - r) // 5), c.zero, prec, "quintic")]

    return _family_cases(p, r, prec, cubic, quintic)


def _tail(p, r, prec, seed):
    def cubic():
        k = prec
        c = _ctx(p, k)
        return [_case(weighted_sum_6(c, r, (2 * p - r) // 3), weighted_sum_6(c, r, p - 1), k, "cubic")]

    def quintic():
        k = min(prec, 5)
        c = _ctx(p, k)
        return [_case(weighted_sum_10(c, r, (3 * p - r) // 5), weighted_sum_10(c, r, p - 1), k, "quintic")]

    return _family_cases(p, r, prec, cubic, quintic)


# ----------------------------------------------------------------------------
# Registry


@dataclass(frozen=True)
class CheckDef:
    fn: Callable
    precision: int | None
    uses_p: bool = True
    # None: r-free; "cubic"/"quintic": r from that family; "either": both families
    r_family: str | None = None
    conjectural: bool = False
    seeded: bool = False
    p_min: int = 2


REGISTRY: dict[CheckId, CheckDef] = {
    CheckId.VAN_HAMME_D2: CheckDef(_van_hamme, 4),
    CheckId.LR_11: CheckDef(_lr_11, 6),
    CheckId.LR_11_MOD_P7_FAILURE: CheckDef(_lr_11_failure, 7),
    CheckId.GS_12: CheckDef(_gs_12, 4),
    CheckId.LIU_13: CheckDef(_liu_13, 5),
    CheckId.GLS_INLINE_P5: CheckDef(_gls_inline, 5, r_family="cubic"),
    CheckId.THM_1_1: CheckDef(_thm_1_1, 6, r_family="cubic"),
    CheckId.THM_1_2: CheckDef(_thm_1_2, 5, r_family="quintic"),
    CheckId.THM_1_2_R1_COROLLARY: CheckDef(_thm_1_2_r1, 5),
    CheckId.CONJ_4_1: CheckDef(_conj_4_1, 5, r_family="quintic", conjectural=True),
    CheckId.LEMMA_2_1: CheckDef(_lemma_2_1, None, uses_p=False, seeded=True),
    CheckId.LEMMA_2_2: CheckDef(_lemma_2_2, 6),
    CheckId.LEMMA_2_3: CheckDef(_lemma_2_3, 2),
    CheckId.LEMMA_2_4: CheckDef(_lemma_2_4, 6, seeded=True),
    CheckId.LEMMA_2_5: CheckDef(_lemma_2_5, 1, r_family="cubic"),
    CheckId.LEMMA_2_6: CheckDef(_lemma_2_6, None, uses_p=False, r_family="cubic"),
    CheckId.LEMMA_2_7: CheckDef(_lemma_2_7, 1, r_family="cubic"),
    CheckId.EQ_2_3_KEY: CheckDef(_eq_2_3_key, 2, r_family="cubic"),
    CheckId.LEMMA_3_1: CheckDef(_lemma_3_1, 5, seeded=True),
    CheckId.LEMMA_3_2: CheckDef(_lemma_3_2, 1, r_family="quintic"),
    CheckId.GLS_MODP_FACTS: CheckDef(_gls_modp, 1, r_family="either"),
    CheckId.TAIL_VANISHING: CheckDef(_tail, 6, r_family="either"),
}

if set(REGISTRY) != set(CheckId):
    raise ImportError("check registry and CheckId enumeration disagree")


def admissible_r(family: str | None, r: int) -> bool:
    if family is None:
        return True
    cubic = r <= 1 and r % 3 != 0
    quintic = r <= 1 and r % 2 != 0 and r % 5 != 0
    return {"cubic": cubic, "quintic": quintic, "either": cubic or quintic}[family]


def _summarize(cases: list[Case]) -> Case:
    return min(cases, key=lambda c: c.margin)


def run_check(
    check,
    p: int | None = None,
    r: int | None = None,
    precision: int | None = None,
    seed: int = 0,
    trials: int | None = None,
) -> CongruenceReport:
    """Evaluate one check at one (p, r).

    For ``lr_11_mod_p7_failure`` the prime is the scan bound; the report's p is
    the first witness found.  ``trials`` sets the sample count of the seeded
    checks (lemma_2_1, lemma_2_4, lemma_3_1).
    """
    cid = CheckId.parse(check)
    spec = REGISTRY[cid]
    if spec.uses_p:
        if p is None or not isprime(p):
            raise NotPrime(f"{p} is not prime")
    else:
        p = None
    if spec.r_family is None:
        r = None
    prec = spec.precision if precision is None else precision
    report_seed = seed if spec.seeded else None
    start = time.perf_counter()

    def finish(**kw) -> CongruenceReport:
        return CongruenceReport(
            check=cid.value, r=r, seed=report_seed, elapsed=time.perf_counter() - start, **kw
        )

    try:
        if spec.r_family is not None:
            _require(r is not None, "r required")
            _require(admissible_r(spec.r_family, r), f"r = {r} not admissible")
        opts = {"trials": trials} if spec.seeded and trials is not None else {}
        result = spec.fn(p, r, prec, seed, **opts)
    except _Skip as exc:
        return finish(p=p, precision=prec, lhs="", rhs="", diff_valuation=None,
                      status=Status.SKIPPED, reason=str(exc))
    extra = {}
    if isinstance(result, tuple):
        cases, extra = result
        p = extra.get("p", p)
    else:
        cases = result
    worst = _summarize(cases)
    ok = all(c.ok for c in cases)
    if spec.conjectural:
        status = Status.CONJECTURAL_PASS if ok else Status.CONJECTURAL_FAIL
    else:
        status = Status.PASS if ok else Status.FAIL
    reason = worst.label
    if "reason" in extra:
        reason = extra["reason"]
    elif len(cases) > 1:
        reason = f"{len(cases)} cases; worst: {worst.label}" if worst.label else f"{len(cases)} cases"
    return finish(
        p=p,
        precision=worst.demanded,
        lhs=render(worst.lhs),
        rhs=render(worst.rhs),
        diff_valuation=worst.diff,
        status=status,
        reason=reason,
    )


def _grid_points(cid: CheckId, p_max: int, r_min: int):
    spec = REGISTRY[cid]
    if cid is CheckId.LR_11_MOD_P7_FAILURE:
        return [(p_max, None)]
    rs = [None] if spec.r_family is None else [r for r in range(r_min, 2) if admissible_r(spec.r_family, r)]
    if not spec.uses_p:
        return [(None, r) for r in rs]
    return [(p, r) for p in primerange(spec.p_min, p_max + 1) for r in rs]


def _run_point(args):
    return run_check(*args)


def run_grid(
    check,
    p_max: int,
    r_min: int = 1,
    precision: int | None = None,
    seed: int = 0,
    jobs: int = 1,
    trials: int | None = None,
) -> list[CongruenceReport]:
    """One report per admissible (p, r), skips included, in canonical (p, r) order."""
    cid = CheckId.parse(check)
    if p_max < 3:
        raise ValueError("p_max must be >= 3")
    if r_min > 1:
        raise ValueError("r_min must be <= 1")
    tasks = [(cid, p, r, precision, seed, trials) for p, r in _grid_points(cid, p_max, r_min)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_run_point, tasks))
    else:
        reports = [_run_point(t) for t in tasks]
    return sorted(reports, key=lambda rep: (rep.p or 0, rep.r if rep.r is not None else 0))


# ----------------------------------------------------------------------------
# Cross-consistency between statements


def _cross_i(p, prec):
    _require(p > 3 and p % 3 == 2, "p ≡ 2 (mod 3), p > 3 violated")
    c = _ctx(p, prec or 6)
    rhs = -c(Fraction(10, 27)) * c(p) ** 4 * gamma_at(c, Fraction(1, 3)) ** 9
    return _case(rhs_cubic(c, 1), rhs, c.k)


def _cross_ii(p, prec):
    _require(p % 6 == 1, "p ≡ 1 (mod 6) violated")
    c = _ctx(p, prec or 5)
    rhs = 140 * c(p) ** 4 * gamma_at(c, Fraction(2, 3)) ** 9
    return _case(rhs_cubic(c, -1), rhs, c.k)


def _cross_iii(p, prec):
    _odd(p)
    _require(p % 5 == 2, "p ≡ 2 (mod 5) violated")
    c = _ctx(p, prec or 5)
    return _case(rhs_quintic(c, 1), corollary_r1_rhs(c), c.k)


CROSS_PAIRS: dict[str, tuple[tuple[str, str], Callable]] = {
    "i": (("thm_1_1", "lr_11"), _cross_i),
    "ii": (("thm_1_1", "liu_13"), _cross_ii),
    "iii": (("thm_1_2", "thm_1_2_r1_corollary"), _cross_iii),
}


def cross_consistency(pair, p: int, precision: int | None = None) -> CongruenceReport:
    """Compare closed forms that two registered statements claim agree."""
    key = None
    if isinstance(pair, str) and pair in CROSS_PAIRS:
        key = pair
    else:
        for name, (ids, _) in CROSS_PAIRS.items():
            if tuple(pair) == ids:
                key = name
    if key is None:
        raise UnknownPair(f"no registered consistency relation {pair!r}")
    if not isprime(p):
        raise NotPrime(f"{p} is not prime")
    ids, fn = CROSS_PAIRS[key]
    r = {"i": 1, "ii": -1, "iii": 1}[key]
    label = f"cross_{key}:{ids[0]}~{ids[1]}"
    start = time.perf_counter()
    try:
        case = fn(p, precision)
    except _Skip as exc:
        return CongruenceReport(label, p, r, precision, "", "", None, Status.SKIPPED, str(exc),
                                elapsed=time.perf_counter() - start)
    status = Status.PASS if case.ok else Status.FAIL
    return CongruenceReport(label, p, r, case.demanded, render(case.lhs), render(case.rhs),
                            case.diff, status, elapsed=time.perf_counter() - start)

"""Dense exact arithmetic for integer-coefficient univariate polynomials.

A polynomial is a tuple of Python ints in ascending degree order with no
trailing zero; the zero polynomial is the empty tuple.  Keeping the
representation hashable lets expensive derived data (Sturm chains) be
cached per polynomial.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import EndpointIsRoot

IntPoly = tuple  # tuple[int, ...], ascending degree, canonical form

ZERO: IntPoly = ()
ONE: IntPoly = (1,)
X: IntPoly = (0, 1)


def normalize(coeffs: Iterable[int]) -> IntPoly:
    """Strip trailing zero coefficients and return the canonical tuple."""
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(p: IntPoly) -> int:
    """Degree of p; -1 for the zero polynomial."""
    return len(p) - 1


def leading(p: IntPoly) -> int:
    return p[-1] if p else 0


def is_zero(p: IntPoly) -> bool:
    return not p


def is_monic(p: IntPoly) -> bool:
    return bool(p) and p[-1] == 1


def add(p: IntPoly, q: IntPoly) -> IntPoly:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return normalize(out)


def neg(p: IntPoly) -> IntPoly:
    return tuple(-c for c in p)


def sub(p: IntPoly, q: IntPoly) -> IntPoly:
    return add(p, neg(q))


def scale(p: IntPoly, k: int) -> IntPoly:
    if k == 0:
        return ZERO
    return tuple(c * k for c in p)


def shift(p: IntPoly, k: int) -> IntPoly:
    """Multiply by X**k."""
    if not p:
        return ZERO
    return (0,) * k + tuple(p)


def mul(p: IntPoly, q: IntPoly) -> IntPoly:
    if not p or not q:
        return ZERO
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return tuple(out)


def mul_many(polys: Sequence[IntPoly]) -> IntPoly:
    out = ONE
    for p in polys:
        out = mul(out, p)
    return out


def pow_int(p: IntPoly, n: int) -> IntPoly:
    out = ONE
    base = p
    while n > 0:
        if n & 1:
            out = mul(out, base)
        base = mul(base, base)
        n >>= 1
    return out


def binomial_xn_plus_1(n: int) -> IntPoly:
    """X**n + 1."""
    return normalize([1] + [0] * (n - 1) + [1])


def derivative(p: IntPoly) -> IntPoly:
    return normalize(i * c for i, c in enumerate(p) if i >= 1)


def reverse(p: IntPoly) -> IntPoly:
    """Coefficient reversal X**deg(p) * p(1/X)."""
    return normalize(reversed(p))


def eval_at(p: IntPoly, x):
    """Exact Horner evaluation at an int or Fraction."""
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def eval_interval(p: IntPoly, lo: Fraction, hi: Fraction) -> tuple:
    """Exact interval Horner: bounds for {p(x) : lo <= x <= hi}."""
    alo, ahi = Fraction(0), Fraction(0)
    for c in reversed(p):
        cands = (alo * lo, alo * hi, ahi * lo, ahi * hi)
        alo, ahi = min(cands) + c, max(cands) + c
    return alo, ahi


def content(p: IntPoly) -> int:
    """Positive gcd of the coefficients; 0 for the zero polynomial."""
    g = 0
    for c in p:
        g = math.gcd(g, c)
        if g == 1:
            break
    return g


def primitive(p: IntPoly) -> IntPoly:
    """Primitive part with positive leading coefficient."""
    if not p:
        return ZERO
    g = content(p)
    if p[-1] < 0:
        g = -g
    return tuple(c // g for c in p)


def monic_divmod(p: IntPoly, m: IntPoly) -> tuple:
    """Integer quotient/remainder of p by a monic integer polynomial m."""
    assert is_monic(m), "divisor must be monic"
    r = list(p)
    dm = degree(m)
    q = [0] * max(len(p) - dm, 0)
    for k in range(len(r) - 1 - dm, -1, -1):
        c = r[k + dm]
        if c:
            q[k] = c
            for i, mc in enumerate(m):
                r[k + i] -= c * mc
    return normalize(q), normalize(r[:dm])


def _pseudo_rem(p: IntPoly, q: IntPoly) -> IntPoly:
    """Pseudo-remainder: exactly lc(q)**(deg p - deg q + 1) * (p mod q)."""
    dp, dq = degree(p), degree(q)
    assert dp >= dq >= 0
    l = q[-1]
    n = dp - dq + 1
    r = p
    while r and degree(r) >= dq:
        c = r[-1]
        k = degree(r) - dq
        n -= 1
        scaled = [x * l for x in r]
        for i, qc in enumerate(q):
            scaled[k + i] -= c * qc
        r = normalize(scaled)
    if n > 0 and r:
        r = tuple(c * l ** n for c in r)
    return r


def gcd(p: IntPoly, q: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient (primitive PRS)."""
    a, b = primitive(p), primitive(q)
    if not a:
        return b
    if not b:
        return a
    if degree(a) < degree(b):
        a, b = b, a
    while b:
        r = _pseudo_rem(a, b)
        a, b = b, primitive(r)
    return primitive(a)


def divexact(p: IntPoly, d: IntPoly) -> IntPoly:
    """Exact division p/d for integer polynomials with d | p over Q."""
    if not p:
        return ZERO
    num = [Fraction(c) for c in p]
    dd = degree(d)
    lead = Fraction(d[-1])
    q = [Fraction(0)] * (len(p) - dd)
    for k in range(len(num) - 1 - dd, -1, -1):
        c = num[k + dd] / lead
        q[k] = c
        if c:
            for i, dc in enumerate(d):
                num[k + i] -= c * dc
    assert all(x == 0 for x in num[:dd]), "division was not exact"
    assert all(x.denominator == 1 for x in q), "quotient not integral"
    return normalize(int(x) for x in q)


def square_free_part(p: IntPoly) -> IntPoly:
    if degree(p) <= 0:
        return primitive(p) if p else ZERO
    return divexact(primitive(p), gcd(p, derivative(p)))


def square_free_decomposition(p: IntPoly) -> list:
    """Yun decomposition: list of (factor, multiplicity), factors primitive.

    The integer content is dropped; the product of factor**mult equals p up
    to a rational constant, which is irrelevant for root bookkeeping.
    """
    p = primitive(p)
    if degree(p) <= 0:
        return []
    out = []
    g = gcd(p, derivative(p))
    if degree(g) == 0:
        return [(p, 1)]
    w = divexact(p, g)
    z = sub(divexact(derivative(p), g), derivative(w))
    i = 1
    while degree(w) > 0:
        f = gcd(w, z)
        if degree(f) > 0:
            out.append((primitive(f), i))
        w = divexact(w, f)
        z = sub(divexact(z, f), derivative(w))
        i += 1
    return out


def cauchy_bound(p: IntPoly) -> Fraction:
    """1 + max|c_i|/|c_lead|: all complex roots have modulus below this."""
    assert p and degree(p) >= 1
    rest = max((abs(c) for c in p[:-1]), default=0)
    return 1 + Fraction(rest, abs(p[-1]))


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def sign_variations(values: Sequence) -> int:
    """Sign changes in a sequence, zeros skipped."""
    signs = [_sign(v) for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def signed_remainder_chain(f0: IntPoly, f1: IntPoly) -> tuple:
    """Generalized Sturm chain of (f0, f1), members positively rescaled.

    Each member equals the classical negated-remainder chain member times a
    positive constant, so sign-variation counts are unchanged.
    """
    if f0 and f1:
        assert degree(f0) >= degree(f1)
    chain = [primitive_signed(f0), primitive_signed(f1)]
    while chain[-1] and degree(chain[-1]) > 0:
        a, b = chain[-2], chain[-1]
        r = _pseudo_rem(a, b)
        if not r:
            break
        # prem = lc(b)**k * rem with k = deg a - deg b + 1; fix the sign so
        # the stored member is a positive multiple of -rem.
        k = degree(a) - degree(b) + 1
        s = _sign(b[-1]) ** k
        r = tuple(-s * c for c in r)
        chain.append(primitive_signed(r))
    return tuple(c for c in chain if c)


def primitive_signed(p: IntPoly) -> IntPoly:
    """Divide by the positive content, keeping the sign of the polynomial."""
    if not p:
        return ZERO
    g = content(p)
    return tuple(c // g for c in p)


def chain_variations_at(chain: Sequence[IntPoly], x) -> int:
    return sign_variations([eval_at(f, x) for f in chain])


@lru_cache(maxsize=4096)
def sturm_chain(p: IntPoly) -> tuple:
    """Sturm chain of the square-free part of p (counts distinct roots)."""
    sf = square_free_part(p)
    return signed_remainder_chain(sf, derivative(sf))


def sturm_count(p: IntPoly, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots of p in [lo, hi].

    Endpoints must not be roots; raises EndpointIsRoot otherwise so the
    caller can perturb.
    """
    if is_zero(p):
        raise ValueError("zero polynomial has no root count")
    lo, hi = Fraction(lo), Fraction(hi)
    if lo > hi:
        raise ValueError("empty interval")
    if eval_at(p, lo) == 0 or eval_at(p, hi) == 0:
        raise EndpointIsRoot(f"interval endpoint is a root of {p}")
    if degree(p) == 0:
        return 0
    if lo == hi:
        return 0
    chain = sturm_chain(p)
    return chain_variations_at(chain, lo) - chain_variations_at(chain, hi)


def count_real_roots(p: IntPoly) -> int:
    """Number of distinct real roots of p."""
    if degree(p) <= 0:
        return 0
    b = cauchy_bound(p)
    return sturm_count(p, -b, b)


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial."""
    assert n >= 1
    num = normalize([-1] + [0] * (n - 1) + [1])  # X**n - 1
    for d in range(1, n):
        if n % d == 0:
            num, rem = monic_divmod(num, cyclotomic(d))
            assert not rem
    return num


def poly_to_string(p: IntPoly, var: str = "X") -> str:
    """Human-readable rendering, highest degree first."""
    if not p:
        return "0"
    parts = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        if i == 0:
            term = str(abs(c))
        else:
            coeff = "" if abs(c) == 1 else str(abs(c)) + "*"
            term = f"{coeff}{var}" + (f"^{i}" if i > 1 else "")
        parts.append(("- " if c < 0 else "+ ") + term)
    s = " ".join(parts)
    return s[2:] if s.startswith("+ ") else "-" + s[2:]

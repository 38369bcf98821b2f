"""Exact root censuses of integer polynomials relative to the unit circle.

The census of a polynomial is the triple (inside, on, outside) of root
counts with multiplicity.  Everything is decided in integer/rational
arithmetic:

* roots at the origin are stripped first (counted as inside),
* a square-free decomposition reduces to the square-free case,
* the self-inversive part gcd(f, reverse(f)) carries every root on the
  circle plus the reciprocal off-circle pairs; substituting x = z + 1/z
  turns its census into real-root counts of a half-degree polynomial,
* the remaining cofactor has no circle roots; its inside count comes from
  the Schur-Cohn iteration, with a Cauchy-index computation on the unit
  circle as a complete fallback for degenerate steps.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import polys
from .errors import DegenerateSchurStep

# Schur-Cohn coefficient blow-up guard before switching to the fallback
_COHN_BIT_LIMIT = 1 << 16


@dataclass(frozen=True)
class UnitCircleCensus:
    inside: int
    on: int
    outside: int

    def __add__(self, other: "UnitCircleCensus") -> "UnitCircleCensus":
        return UnitCircleCensus(
            self.inside + other.inside, self.on + other.on, self.outside + other.outside
        )

    def scaled(self, k: int) -> "UnitCircleCensus":
        return UnitCircleCensus(self.inside * k, self.on * k, self.outside * k)

    @property
    def total(self) -> int:
        return self.inside + self.on + self.outside


_EMPTY = UnitCircleCensus(0, 0, 0)


def unit_circle_census(p) -> UnitCircleCensus:
    """Exact (inside, on, outside) counts, with multiplicity.

    Roots at the origin count as inside.  The result always satisfies
    inside + on + outside == degree(p).
    """
    if polys.is_zero(p):
        raise ValueError("census of the zero polynomial")
    if polys.degree(p) == 0:
        return _EMPTY
    k = 0
    while p[k] == 0:
        k += 1
    census = UnitCircleCensus(k, 0, 0)
    p = polys.normalize(p[k:])
    for factor, mult in polys.square_free_decomposition(p):
        census = census + _census_square_free(factor).scaled(mult)
    assert census.total == polys.degree(p) + k, "census lost roots"
    return census


def _census_square_free(f) -> UnitCircleCensus:
    if polys.degree(f) <= 0:
        return _EMPTY
    s = polys.gcd(f, polys.reverse(f))
    if polys.degree(s) >= 1:
        h = polys.divexact(f, s)
    else:
        h = f
    out = _census_self_inversive(s) if polys.degree(s) >= 1 else _EMPTY
    if polys.degree(h) >= 1:
        try:
            inside = _cohn_inside(h)
        except DegenerateSchurStep:
            inside = _winding_inside(h)
        out = out + UnitCircleCensus(inside, 0, polys.degree(h) - inside)
    return out


@lru_cache(maxsize=None)
def _pair_power(j: int):
    """P_j with z**j + z**-j == P_j(z + 1/z): P_0 = 2, P_1 = x."""
    if j == 0:
        return (2,)
    if j == 1:
        return (0, 1)
    return polys.sub(polys.mul((0, 1), _pair_power(j - 1)), _pair_power(j - 2))


def half_transform(s):
    """g with s(z) == z**k * g(z + 1/z) for palindromic s of degree 2k."""
    n = polys.degree(s)
    assert n % 2 == 0
    k = n // 2
    assert all(s[i] == s[n - i] for i in range(k + 1)), "not palindromic"
    g = (s[k],)
    for j in range(1, k + 1):
        g = polys.add(g, polys.scale(_pair_power(j), s[k + j]))
    return g


def _census_self_inversive(s) -> UnitCircleCensus:
    """Census of a square-free polynomial whose root set is inversion-closed."""
    on = 0
    for value, root_poly in ((1, (-1, 1)), (-1, (1, 1))):
        if polys.eval_at(s, value) == 0:
            s = polys.divexact(s, root_poly)
            on += 1
    if polys.degree(s) == 0:
        return UnitCircleCensus(0, on, 0)
    g = half_transform(polys.primitive(s))
    k = polys.degree(g)
    r_in = polys.sturm_count(g, -2, 2)
    r_all = polys.count_real_roots(g)
    r_out = r_all - r_in
    cplx = k - r_all
    # real x in (-2,2): conjugate pair on the circle; real x outside: real
    # reciprocal pair (one in, one out); complex x: quadruple (two in, two out)
    return UnitCircleCensus(r_out + cplx, on + 2 * r_in, r_out + cplx)


def _cohn_inside(h) -> int:
    """Inside count by the Schur-Cohn iteration; raises on degenerate steps."""
    cur = polys.primitive_signed(h)
    n = polys.degree(cur)
    if n == 0:
        return 0
    a0, an = cur[0], cur[-1]
    delta = a0 * a0 - an * an
    if delta == 0:
        raise DegenerateSchurStep("leading Schur-Cohn parameter vanished")
    if max(abs(a0), abs(an)).bit_length() > _COHN_BIT_LIMIT:
        raise DegenerateSchurStep("coefficient blow-up")
    nxt = polys.sub(polys.scale(cur, a0), polys.scale(polys.reverse(cur), an))
    assert polys.degree(nxt) < n and nxt and nxt[0] == delta
    t = _cohn_inside(nxt)
    return t if delta > 0 else n - t


def _winding_inside(h) -> int:
    """Inside count as the winding number of h around the unit circle.

    With z = e**(i theta) and c = cos(theta), h(z) = u(c) + i sin(theta) w(c)
    where u, w expand over Chebyshev polynomials.  The winding number equals
    the Cauchy index of w/u on (-1, 1), a generalized Sturm count.  Requires
    h without roots on the circle (h(1) != 0 != h(-1) in particular).
    """
    u = ()
    w = ()
    for k, c in enumerate(h):
        if c:
            u = polys.add(u, polys.scale(_chebyshev_t(k), c))
            if k >= 1:
                w = polys.add(w, polys.scale(_chebyshev_u(k - 1), c))
    assert polys.eval_at(u, 1) != 0 and polys.eval_at(u, -1) != 0, "root on circle"
    chain = polys.signed_remainder_chain(u, w)
    return polys.chain_variations_at(chain, -1) - polys.chain_variations_at(chain, 1)


@lru_cache(maxsize=None)
def _chebyshev_t(k: int):
    if k == 0:
        return (1,)
    if k == 1:
        return (0, 1)
    return polys.sub(polys.scale(polys.mul((0, 1), _chebyshev_t(k - 1)), 2), _chebyshev_t(k - 2))


@lru_cache(maxsize=None)
def _chebyshev_u(k: int):
    if k == 0:
        return (1,)
    if k == 1:
        return (0, 2)
    return polys.sub(polys.scale(polys.mul((0, 1), _chebyshev_u(k - 1)), 2), _chebyshev_u(k - 2))


def euler_phi(n: int) -> int:
    out = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            out -= out // p
        p += 1
    if m > 1:
        out -= out // m
    return out


def strip_cyclotomic_factors(p, max_degree: int):
    """Divide out every cyclotomic factor of degree <= max_degree.

    Returns (stripped, removed) where removed lists (n, multiplicity).
    """
    removed = []
    q = p
    n = 1
    # phi(n) >= sqrt(n/2), so phi(n) <= D forces n <= 2 D^2 (+ slack for n=1,2)
    limit = max(2 * max_degree * max_degree + 2, 6)
    while n <= limit:
        if euler_phi(n) <= max_degree:
            c = polys.cyclotomic(n)
            mult = 0
            while polys.degree(q) >= polys.degree(c):
                quot, rem = polys.monic_divmod(q, c)
                if rem:
                    break
                q = quot
                mult += 1
            if mult:
                removed.append((n, mult))
        n += 1
    return q, removed


def is_self_reciprocal(p) -> bool:
    """True when reverse(p) == +-p (root multiset closed under inversion)."""
    r = polys.reverse(p)
    return r == p or r == polys.neg(p)


def salem_pisot_label(p, strip_degree_bound: int):
    """Best-effort Salem/Pisot label for the dominant root of p.

    After removing cyclotomic factors: no roots on the circle means every
    non-dominant conjugate is strictly inside (pisot_like); remaining circle
    roots on a self-reciprocal cofactor match the Salem shape (salem_like);
    circle roots on a non-reciprocal cofactor cannot be attributed without
    factoring, so the label stays undetermined.
    """
    stripped, removed = strip_cyclotomic_factors(p, strip_degree_bound)
    c = unit_circle_census(stripped)
    if c.on == 0:
        return "pisot_like", stripped, removed
    if is_self_reciprocal(stripped):
        return "salem_like", stripped, removed
    return "undetermined", stripped, removed

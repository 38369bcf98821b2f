"""Exact arithmetic in Q[X]/(modulus), evaluated at a distinguished root.

Elements are rational-coefficient polynomials of degree below the modulus,
stored as an integer coefficient tuple over a positive common denominator.
The modulus need not be irreducible: deciding whether an element vanishes
at the distinguished root lambda therefore never trusts interval evaluation
for a zero verdict; the certificate is a polynomial gcd with a Sturm count
on lambda's isolating interval.  Interval evaluation is only used the other
way round, to certify nonzero values and signs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import polys
from .algebraic import AlgebraicReal, isolate_largest_real_root, refine, refine_clear_of
from .errors import ModulusMismatch, NotInvertible


class ResidueContext:
    """Shared modulus plus the certified root all decisions refer to."""

    def __init__(self, modulus, root: AlgebraicReal):
        modulus = polys.normalize(modulus)
        if polys.degree(modulus) < 1:
            raise ValueError("modulus must be nonconstant")
        if not polys.is_monic(modulus):
            raise ValueError("modulus must be monic")
        # zero certificates below rely on the root being a root of the
        # modulus isolated by its interval, i.e. root.defining | modulus
        if root.is_exact:
            if polys.eval_at(modulus, root.exact_value) != 0:
                raise ValueError("root is not a root of the modulus")
        elif polys.gcd(root.defining, modulus) != root.defining:
            raise ValueError("root.defining must divide the modulus")
        self.modulus = modulus
        self.root = root
        self._powers = [(polys.ONE, 1)]
        self.zero = ResidueElement(self, (), 1)
        self.one = ResidueElement(self, (1,), 1)

    @staticmethod
    def for_largest_root(p) -> "ResidueContext":
        return ResidueContext(p, isolate_largest_real_root(p))

    def __eq__(self, other):
        return isinstance(other, ResidueContext) and self.modulus == other.modulus

    def __hash__(self):
        return hash(self.modulus)

    # -- construction -----------------------------------------------------

    def reduce(self, coeffs) -> "ResidueElement":
        """Reduce a rational-coefficient polynomial modulo the modulus."""
        fracs = [Fraction(c) for c in coeffs]
        den = math.lcm(*(f.denominator for f in fracs)) if fracs else 1
        num = polys.normalize(int(f * den) for f in fracs)
        num = self._mod(num)
        return self._make(num, den)

    def constant(self, value) -> "ResidueElement":
        return self.reduce([value])

    def x_power(self, k: int) -> "ResidueElement":
        """X**k reduced, memoised: the workhorse for lambda-power formulas."""
        while len(self._powers) <= k:
            prev, _ = self._powers[-1]
            nxt = self._mod(polys.shift(prev, 1))
            self._powers.append((nxt, 1))
        num, den = self._powers[k]
        return ResidueElement(self, num, den)

    def _mod(self, num):
        if polys.degree(num) >= polys.degree(self.modulus):
            _, num = polys.monic_divmod(num, self.modulus)
        return num

    def _make(self, num, den: int) -> "ResidueElement":
        if not num:
            return ResidueElement(self, (), 1)
        g = math.gcd(polys.content(num), den)
        if den < 0:
            g = -g
        return ResidueElement(self, tuple(c // g for c in num), den // g)

    # -- refinement shared by all elements of the context -------------------

    def refine_root(self, width) -> None:
        self.root = refine(self.root, width)


@dataclass(frozen=True)
class ResidueElement:
    """representative = num/den, an element of Q[X]/(modulus)."""

    context: ResidueContext
    num: tuple
    den: int

    def _check(self, other) -> "ResidueElement":
        if not isinstance(other, ResidueElement):
            return self.context.reduce([other])
        if other.context != self.context:
            raise ModulusMismatch("operands reduced modulo different polynomials")
        return other

    def __add__(self, other):
        other = self._check(other)
        num = polys.add(polys.scale(self.num, other.den), polys.scale(other.num, self.den))
        return self.context._make(num, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return ResidueElement(self.context, polys.neg(self.num), self.den)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        num = self.context._mod(polys.mul(self.num, other.num))
        return self.context._make(num, self.den * other.den)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = self.context.one
        base = self
        while k > 0:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __truediv__(self, other):
        other = self._check(other)
        return self * other.inverse()

    def inverse(self) -> "ResidueElement":
        """Ring inverse via the extended Euclidean algorithm over Q[X].

        Raises NotInvertible when the representative shares a factor with
        the modulus (the value at lambda may still be nonzero; the ring
        simply has no inverse for it).
        """
        if not self.num:
            raise NotInvertible("zero has no inverse")
        u = _ext_gcd_inverse(self.num, self.context.modulus)
        if u is None:
            raise NotInvertible(
                "representative shares a polynomial factor with the modulus"
            )
        ucoeffs, uden = u
        inv = self.context._make(self.context._mod(ucoeffs), uden)
        return inv * self.context.constant(self.den)

    def representative(self) -> list:
        """Rational coefficients of the reduced representative."""
        return [Fraction(c, self.den) for c in self.num]

    @property
    def is_zero_poly(self) -> bool:
        return not self.num

    def __repr__(self):
        return f"ResidueElement({polys.poly_to_string(self.num)})/{self.den}"


def _ext_gcd_inverse(num, modulus):
    """Bezout coefficient u with u*num = gcd (mod modulus), as (ints, den).

    Returns None when gcd(num, modulus) is nonconstant.
    """
    r0 = [Fraction(c) for c in modulus]
    r1 = [Fraction(c) for c in num]
    u0, u1 = [Fraction(0)], [Fraction(1)]

    def fdeg(f):
        return len(f) - 1

    def fnorm(f):
        while f and f[-1] == 0:
            f.pop()
        return f

    while fnorm(r1):
        # divide r0 by r1
        q = [Fraction(0)] * max(fdeg(r0) - fdeg(r1) + 1, 0)
        r = list(r0)
        d1 = fdeg(r1)
        lead = r1[-1]
        for k in range(len(r) - 1 - d1, -1, -1):
            c = r[k + d1] / lead
            q[k] = c
            if c:
                for i, rc in enumerate(r1):
                    r[k + i] -= c * rc
        r = fnorm(r[:d1])
        # u_next = u0 - q*u1
        qu = [Fraction(0)] * (len(q) + len(u1) - 1) if q and u1 else []
        for i, a in enumerate(q):
            if a:
                for j, b in enumerate(u1):
                    qu[i + j] += a * b
        un = [Fraction(0)] * max(len(u0), len(qu))
        for i, a in enumerate(u0):
            un[i] += a
        for i, a in enumerate(qu):
            un[i] -= a
        r0, r1 = [Fraction(c) for c in r1], r
        u0, u1 = u1, fnorm(un) or [Fraction(0)]
    if fdeg(fnorm(r0)) != 0:
        return None
    g = r0[0]
    inv = [c / g for c in u0]
    den = math.lcm(*(c.denominator for c in inv)) if inv else 1
    return polys.normalize(int(c * den) for c in inv), den


# -- module-level operations ----------------------------------------------


def residue_reduce(coeffs, modulus, root: AlgebraicReal | None = None) -> ResidueElement:
    """Reduce a rational-coefficient polynomial modulo `modulus`."""
    ctx = ResidueContext(modulus, root) if root else ResidueContext.for_largest_root(modulus)
    return ctx.reduce(coeffs)


def residue_is_zero(e: ResidueElement) -> bool:
    """True iff the representative vanishes at the distinguished root.

    Zero verdicts are certified by gcd + Sturm; nonzero verdicts by exact
    interval evaluation or a trivial gcd.
    """
    if e.is_zero_poly:
        return True
    ctx = e.context
    # fast nonzero path: exact interval arithmetic excluding 0
    root = ctx.root
    for _ in range(3):
        if root.is_exact:
            return polys.eval_at(e.num, root.exact_value) == 0
        lo, hi = polys.eval_interval(e.num, root.interval.lo, root.interval.hi)
        if lo > 0 or hi < 0:
            ctx.root = root
            return False
        root = refine(root, root.interval.width / 2**20)
    ctx.root = root
    # certificate path
    g = polys.gcd(e.num, ctx.modulus)
    if polys.degree(g) < 1:
        return False
    root = refine_clear_of(root, g)
    ctx.root = root
    return polys.sturm_count(g, root.interval.lo, root.interval.hi) >= 1


def residue_sign(e: ResidueElement) -> int:
    """Exact sign of the representative at the distinguished root."""
    if residue_is_zero(e):
        return 0
    ctx = e.context
    root = ctx.root
    while True:
        if root.is_exact:
            v = polys.eval_at(e.num, root.exact_value)
            return (v > 0) - (v < 0)
        lo, hi = polys.eval_interval(e.num, root.interval.lo, root.interval.hi)
        if lo > 0:
            ctx.root = root
            return 1
        if hi < 0:
            ctx.root = root
            return -1
        root = refine(root, root.interval.width / 2**10)


def reduced_modulus_context(p, denominators) -> ResidueContext:
    """Context for the largest real root of p, with `denominators` invertible.

    Factors of p shared with any denominator are divided out after
    certifying they do not vanish at the root, so that ring inverses of the
    denominators exist even when p is reducible.  Raises NotInvertible if a
    denominator vanishes at the root.
    """
    root = isolate_largest_real_root(p)
    m = polys.normalize(p)
    for d in denominators:
        while True:
            g = polys.gcd(m, d)
            if polys.degree(g) < 1:
                break
            if _vanishes_at(g, root):
                raise NotInvertible(
                    f"denominator {polys.poly_to_string(d)} vanishes at the root"
                )
            m = polys.divexact(m, g)
    if m != polys.normalize(p):
        # re-certify: the old interval still isolates a root of the reduced
        # modulus (its endpoints cannot be roots, as roots of m are roots of p)
        sf = polys.square_free_part(m)
        root = AlgebraicReal(sf, root.interval)
        assert polys.sturm_count(sf, root.interval.lo, root.interval.hi) == 1
    return ResidueContext(m, root)


def _vanishes_at(g, root: AlgebraicReal) -> bool:
    if root.is_exact:
        return polys.eval_at(g, root.exact_value) == 0
    common = polys.gcd(g, root.defining)
    if polys.degree(common) < 1:
        return False
    r = refine_clear_of(root, common)
    return polys.sturm_count(common, r.interval.lo, r.interval.hi) >= 1

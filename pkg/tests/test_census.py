"""Unit-circle censuses.

Random inputs are built as products of factors with root locations known by
construction (rational roots, circle pairs z^2 - az + 1 with |a| < 2,
complex pairs of modulus sqrt(m/k)), which is the independent oracle.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from salemforge import census as cen
from salemforge import polys
from salemforge.census import UnitCircleCensus, unit_circle_census
from salemforge.errors import DegenerateSchurStep


def C(i, o, u):
    return UnitCircleCensus(i, o, u)


def test_roots_of_unity():
    assert unit_circle_census((1, 0, 1)) == C(0, 2, 0)
    assert unit_circle_census(polys.cyclotomic(12)) == C(0, 4, 0)
    assert unit_circle_census((-1, 1)) == C(0, 1, 0)


def test_golden_quadratic():
    # roots (3 +- sqrt(13))/2: one in, one out (their product is -1)
    assert unit_circle_census((-1, -3, 1)) == C(1, 0, 1)


def test_quartic_dominant_root():
    assert unit_circle_census((-1, -2, 0, -3, 1)) == C(3, 0, 1)


def test_origin_roots_count_inside():
    p = polys.mul((0, 1), (-2, 1))  # X(X-2)
    assert unit_circle_census(p) == C(1, 0, 1)


def test_multiplicities():
    p = polys.mul(polys.pow_int((-1, 1), 2), (1, 1))  # (X-1)^2 (X+1)
    assert unit_circle_census(p) == C(0, 3, 0)


def test_reciprocal_pair_without_circle_roots():
    # (z-2)(2z-1): self-inversive but no roots on the circle
    p = polys.mul((-2, 1), (-1, 2))
    assert unit_circle_census(p) == C(1, 0, 1)


def test_degenerate_schur_step_falls_back():
    # roots 2, 3, 1/6: |a_0| == |a_lead| so the first Schur-Cohn step
    # degenerates, yet there is no reciprocal pair to extract
    p = polys.mul_many([(-2, 1), (-3, 1), (-1, 6)])
    with pytest.raises(DegenerateSchurStep):
        cen._cohn_inside(p)
    assert unit_circle_census(p) == C(1, 0, 2)


def test_half_transform_identity():
    # s = z^4 + 3z^3 + z^2 + 3z + 1 is palindromic: s(z) = z^2 g(z + 1/z)
    s = (1, 3, 1, 3, 1)
    g = cen.half_transform(s)
    x = Fraction(7, 3)
    z = Fraction(5, 2)
    assert polys.eval_at(s, z) == z**2 * polys.eval_at(g, z + 1 / z)
    assert polys.eval_at(g, x) == polys.eval_at(g, x)


# --- randomized factored inputs with known censuses ---------------------

rational_roots = st.tuples(st.integers(-9, 9), st.integers(1, 9))

circle_pairs = st.integers(-3, 3)  # z^2 - a z + 1 with |a| <= 2·1

modulus_pairs = st.tuples(st.integers(1, 5), st.integers(1, 5), st.integers(-3, 3))


def known_factors():
    def from_rational(ab):
        a, b = ab
        loc = C(1, 0, 0) if abs(a) < b else (C(0, 1, 0) if abs(a) == b else C(0, 0, 1))
        return (-a, b), loc

    def from_circle(a):
        if abs(a) >= 2:
            return None
        return (1, -a, 1), C(0, 2, 0)

    def from_modulus(mka):
        m, k, a = mka
        if a * a >= 4 * m * k:
            return None  # roots real, covered by the rational generator
        loc = C(2, 0, 0) if m < k else (C(0, 2, 0) if m == k else C(0, 0, 2))
        return (m, -a, k), loc

    return st.one_of(
        rational_roots.map(from_rational),
        circle_pairs.map(from_circle),
        modulus_pairs.map(from_modulus),
    ).filter(lambda v: v is not None)


@given(st.lists(known_factors(), min_size=1, max_size=4))
@settings(max_examples=150, deadline=None)
def test_census_matches_constructed_roots(factors):
    p = polys.ONE
    expect = C(0, 0, 0)
    for f, loc in factors:
        p = polys.mul(p, f)
        expect = expect + loc
    assert unit_circle_census(p) == expect


@given(st.lists(known_factors(), min_size=1, max_size=3), st.lists(known_factors(), min_size=1, max_size=3))
@settings(max_examples=60, deadline=None)
def test_census_additive_over_products(fs, gs):
    p = polys.mul_many([f for f, _ in fs])
    q = polys.mul_many([g for g, _ in gs])
    assert unit_circle_census(polys.mul(p, q)) == unit_circle_census(p) + unit_circle_census(q)


@given(st.lists(rational_roots, min_size=1, max_size=5))
@settings(max_examples=80, deadline=None)
def test_cohn_and_winding_agree(roots):
    # avoid circle roots so both methods are applicable
    roots = [(a, b) for a, b in roots if abs(a) != b]
    if not roots:
        return
    p = polys.mul_many([(-a, b) for a, b in roots])
    expect = sum(1 for a, b in roots if abs(a) < b)
    assert cen._winding_inside(p) == expect
    try:
        assert cen._cohn_inside(p) == expect
    except DegenerateSchurStep:
        pass


def test_strip_cyclotomic_factors():
    p = polys.mul_many([polys.cyclotomic(1), polys.cyclotomic(4), (-1, -3, 1)])
    stripped, removed = cen.strip_cyclotomic_factors(p, 4)
    assert stripped == (-1, -3, 1)
    assert sorted(removed) == [(1, 1), (4, 1)]


def test_strip_respects_degree_bound():
    p = polys.mul(polys.cyclotomic(12), (-1, -3, 1))  # phi(12) = 4
    stripped, removed = cen.strip_cyclotomic_factors(p, 2)
    assert stripped == p and removed == []


def test_label_pisot():
    label, stripped, _ = cen.salem_pisot_label((-1, -2, 0, -3, 1), 4)
    assert label == "pisot_like"


def test_label_salem_shape():
    # Lehmer's polynomial: the classical degree-10 Salem minimal polynomial
    lehmer = (1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1)
    assert cen.is_self_reciprocal(lehmer)
    label, stripped, removed = cen.salem_pisot_label(lehmer, 6)
    assert label == "salem_like"
    c = unit_circle_census(lehmer)
    assert (c.inside, c.on, c.outside) == (1, 8, 1)


def test_label_undetermined():
    # (X^2-3X-1) times a non-cyclotomic, non-reciprocal-completing factor
    # with both roots on the circle: 2z^2 - 3z + 2
    p = polys.mul((-1, -3, 1), (2, -3, 2))
    label, stripped, _ = cen.salem_pisot_label(p, 8)
    assert label == "undetermined"
    assert unit_circle_census(p) == C(1, 2, 1)

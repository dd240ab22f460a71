"""Mahler measures, absolute heights, the Kronecker test and the bounded
height enumeration."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mp, mpf

from otlck import (
    BoundaryTie,
    InputError,
    IntPoly,
    PrecisionContext,
    UnitSubgroup,
    enumerate_bounded_height,
    height_algebraic,
    is_root_of_unity,
    mahler_measure,
    new_field,
    projective_height_rational,
    search_equal_modulus_units,
    unit_point_height,
)

CTX = PrecisionContext(64, 2, 4096)


def test_mahler_fixtures():
    m = mahler_measure(IntPoly((-1, -1, 0, 1)))  # plastic
    assert abs(m.as_float - 1.3247179572447460) < 1e-14
    m2 = mahler_measure(IntPoly((-1, -1, 1)))  # golden
    assert abs(m2.as_float - (1 + 5**0.5) / 2) < 1e-14
    # Lehmer's degree-10 polynomial
    lehmer = IntPoly((1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1))
    m3 = mahler_measure(lehmer)
    assert abs(m3.as_float - 1.17628081825991750) < 1e-12


def test_mahler_scales_with_lc():
    m = mahler_measure(IntPoly((-3, 2)))  # 2x - 3, M = 3
    assert abs(m.as_float - 3.0) < 1e-20


def test_height_exact_paths():
    assert height_algebraic(Fraction(0)).exact == 1
    assert height_algebraic(Fraction(2, 3)).exact == 3
    assert height_algebraic(Fraction(-7)).exact == 7
    assert height_algebraic(IntPoly((1, 1))).exact == 1  # -1


def test_height_golden():
    # H = M^(1/deg) = phi^(1/2)
    h = height_algebraic(IntPoly((-1, -1, 1)))
    assert abs(h.as_float - ((1 + 5**0.5) / 2) ** 0.5) < 1e-14


def test_height_inversion_invariance(plastic):
    rho = plastic.theta()
    h1 = height_algebraic(rho)
    h2 = height_algebraic(rho.inverse())
    assert abs(h1.as_float - h2.as_float) < 1e-20


def test_height_power_law(plastic):
    rho = plastic.theta()
    h1 = height_algebraic(rho).as_float
    h3 = height_algebraic(rho ** 3).as_float
    assert abs(h3 - h1**3) < 1e-12


@given(st.fractions(min_value=-30, max_value=30, max_denominator=30))
@settings(max_examples=60, deadline=None)
def test_rational_height_formula(q):
    h = height_algebraic(q)
    expected = max(abs(q.numerator), q.denominator) if q != 0 else 1
    assert h.exact == expected


@given(
    st.fractions(min_value=-10, max_value=10, max_denominator=10),
    st.integers(min_value=1, max_value=4),
)
@settings(max_examples=40, deadline=None)
def test_rational_height_power_law(q, n):
    if q == 0:
        return
    assert height_algebraic(q**n).exact == height_algebraic(q).exact ** n


def test_root_of_unity_detection():
    assert is_root_of_unity(Fraction(1))
    assert is_root_of_unity(Fraction(-1))
    assert not is_root_of_unity(Fraction(2))
    assert is_root_of_unity(IntPoly((1, 1, 1, 1, 1)))  # Phi_5
    assert is_root_of_unity(IntPoly((1, 0, 0, 0, 1)))  # Phi_8
    assert is_root_of_unity(IntPoly((1, 0, -1, 0, 1)))  # Phi_12
    assert not is_root_of_unity(IntPoly((-1, -1, 1)))  # golden
    assert not is_root_of_unity(IntPoly((-2, 0, 1)))


def test_projective_height():
    assert projective_height_rational([Fraction(1, 2), Fraction(3), Fraction(-5)]) == 10
    assert projective_height_rational([Fraction(2), Fraction(4)]) == 2
    with pytest.raises(InputError):
        projective_height_rational([Fraction(0), Fraction(0)])


@given(
    st.lists(st.fractions(min_value=-8, max_value=8, max_denominator=6),
             min_size=2, max_size=4),
    st.fractions(min_value=-5, max_value=5, max_denominator=3).filter(lambda q: q != 0),
)
@settings(max_examples=40, deadline=None)
def test_projective_height_scale_invariant(coords, scale):
    if all(c == 0 for c in coords):
        return
    h1 = projective_height_rational(coords)
    h2 = projective_height_rational([scale * c for c in coords])
    assert h1 == h2


def test_unit_point_height_golden(zeta5):
    golden = zeta5.element([0, 0, -1, -1])
    h = unit_point_height(golden, ctx=CTX)
    assert abs(h.as_float - (1 + 5**0.5) / 2) < 1e-12


def test_unit_point_height_torsion(zeta5):
    h = unit_point_height(zeta5.theta(), ctx=CTX)
    assert h.exact == 1


def test_unit_point_height_quintic(quintic):
    h = unit_point_height(quintic.theta(), ctx=CTX)
    assert abs(h.as_float - 1.0962598656179325) < 1e-10


def test_unit_point_height_validation(sqrt2, quintic):
    with pytest.raises(InputError):
        unit_point_height(sqrt2.one() + sqrt2.theta(), ctx=CTX)  # t = 0
    with pytest.raises(InputError):
        unit_point_height(quintic.from_rational(2), ctx=CTX)  # not a unit


def test_enumerate_degree_one():
    records = enumerate_bounded_height(1, Fraction(2), CTX)
    recs = [r for r in records if r.min_poly.degree == 1]
    assert len(recs) == 7
    values = sorted(Fraction(-r.min_poly.coeffs[0], r.min_poly.coeffs[1]) for r in recs)
    assert values == [Fraction(v) for v in (-2, -1, Fraction(-1, 2), 0, Fraction(1, 2), 1, 2)]


def test_enumerate_deg2_h1():
    records = enumerate_bounded_height(2, Fraction(1), CTX)
    assert len(records) == 9


def test_enumerate_sorted_and_validated():
    records = enumerate_bounded_height(2, Fraction(1), CTX)
    keys = [(r.min_poly.degree, r.min_poly.coeffs, r.root_index) for r in records]
    assert keys == sorted(keys)
    with pytest.raises(InputError):
        enumerate_bounded_height(0, Fraction(2), CTX)
    with pytest.raises(InputError):
        enumerate_bounded_height(7, Fraction(2), CTX)
    with pytest.raises(InputError):
        enumerate_bounded_height(2, Fraction(1, 2), CTX)


def test_enumerate_brute_force_degree_one():
    bound = Fraction(6)
    records = enumerate_bounded_height(1, bound, CTX)
    got = sorted(Fraction(-r.min_poly.coeffs[0], r.min_poly.coeffs[1]) for r in records)
    expected = sorted(
        {
            Fraction(p, q)
            for q in range(1, 7)
            for p in range(-6, 7)
            if math.gcd(abs(p), q) == 1 and max(abs(p), q) <= bound
        }
    )
    assert got == expected


def test_search_equal_modulus_trivial_group(zeta5):
    group = UnitSubgroup(zeta5, [], CTX)
    found = search_equal_modulus_units(group, 0)
    assert len(found) == 2  # +-1

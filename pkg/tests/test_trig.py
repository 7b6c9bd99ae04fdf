import math
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclotrig import (
    Algebraic,
    IntPoly,
    NotRealQuadratic,
    OutOfRange,
    Pole,
    PoleError,
    Quadratic,
    Rational,
    Surd,
    TrigQuery,
    change_conductor,
    classify,
    cos_element,
    cos_rationality_witness,
    degree,
    double_angle_point,
    eval_numeric,
    is_rational,
    minimal_polynomial,
    niven_table,
    normalize_angle,
    sin_element,
    surd_from_quadratic,
    tan_element,
    tan_rationality_witness,
    totient,
    verify_root,
    zeta,
    constant,
)
from cyclotrig.trig import iter_angles, minimal_polynomial_exact, trig_element
from oracles import cos_orbit_minpoly, niven_values, trig_minpoly_sympy


def angle(a, b=1):
    return normalize_angle(a, b)


def test_cos_element_examples():
    assert cos_element(angle(1, 3)) == Fraction(1, 2)
    assert cos_element(angle(0)) == 1
    assert minimal_polynomial(cos_element(angle(1, 5))) == IntPoly([-1, -2, 4])
    assert all(cos_element(angle(a, 7)).is_real() for a in range(14))


def test_sin_element_examples():
    assert sin_element(angle(1, 6)) == Fraction(1, 2)
    assert sin_element(angle(1, 2)) == 1
    x = sin_element(angle(1, 10))
    assert minimal_polynomial(x) == IntPoly([-1, 2, 4])
    assert abs(complex(x).real - 0.3090169944) < 1e-10


def test_tan_element_examples():
    assert tan_element(angle(1, 4)) == 1
    assert tan_element(angle(0)) == 0
    with pytest.raises(PoleError):
        tan_element(angle(1, 2))
    with pytest.raises(PoleError):
        tan_element(angle(3, 2))


def test_minimal_polynomial_examples():
    assert minimal_polynomial(zeta(4)) == IntPoly([1, 0, 1])
    assert minimal_polynomial(cos_element(angle(2, 7))) == IntPoly(cos_orbit_minpoly(1, 7))
    assert list(minimal_polynomial(cos_element(angle(2, 7))).coeffs) == [-1, -4, 4, 8]


def test_degree_examples():
    assert degree(zeta(6)) == 2
    assert degree(zeta(5)) == 4
    assert degree(constant(Fraction(7, 3), 9)) == 1


def test_classify_examples():
    assert classify(TrigQuery.of("cos", 1, 3)) == Rational(Fraction(1, 2))
    assert classify(TrigQuery.of("tan", 1, 8)) == Quadratic(Surd(-1, 1, 1, 2))
    assert classify(TrigQuery.of("tan", 1, 12)) == Quadratic(Surd(2, -1, 1, 3))
    result = classify(TrigQuery.of("cos", 1, 7))
    assert isinstance(result, Algebraic)
    assert result.degree == 3 and list(result.minpoly.coeffs) == [1, -4, -4, 8]
    assert classify(TrigQuery.of("tan", 1, 2)) == Pole()


def test_surd_from_quadratic_examples():
    assert surd_from_quadratic(IntPoly([-1, -2, 4]), 0.809) == Surd(1, 1, 4, 5)
    assert surd_from_quadratic(IntPoly([-1, 2, 4]), 0.309) == Surd(-1, 1, 4, 5)
    assert surd_from_quadratic(IntPoly([-1, 2, 1]), 0.414) == Surd(-1, 1, 1, 2)
    assert surd_from_quadratic(IntPoly([-1, 2, 1]), -2.4) == Surd(-1, -1, 1, 2)
    with pytest.raises(NotRealQuadratic):
        surd_from_quadratic(IntPoly([1, 0, 1]), 0)


def test_surd_validation():
    with pytest.raises(ValueError):
        Surd(1, 0, 1, 2)
    with pytest.raises(ValueError):
        Surd(1, 1, 1, 8)
    with pytest.raises(ValueError):
        Surd(2, 2, 2, 3)
    assert str(Surd(2, -1, 1, 3)) == "(2 - 1*sqrt(3))/1"


def test_double_angle_point_examples():
    assert double_angle_point(Fraction(0)) == (1, 0)
    assert double_angle_point(Fraction(1)) == (0, 1)
    assert double_angle_point(Fraction(1, 2)) == (Fraction(3, 5), Fraction(4, 5))


def test_cos_witness_examples():
    assert cos_rationality_witness(Fraction(1, 2)) == 6
    assert cos_rationality_witness(Fraction(0)) == 4
    assert cos_rationality_witness(Fraction(1)) == 1
    assert cos_rationality_witness(Fraction(-1)) == 2
    assert cos_rationality_witness(Fraction(-1, 2)) == 3
    assert cos_rationality_witness(Fraction(1, 3)) is None
    with pytest.raises(OutOfRange):
        cos_rationality_witness(Fraction(3, 2))


def test_tan_witness_examples():
    assert tan_rationality_witness(Fraction(1)) == 4
    assert tan_rationality_witness(Fraction(0)) == 1
    assert tan_rationality_witness(Fraction(-1)) == 4
    assert tan_rationality_witness(Fraction(2)) is None
    assert double_angle_point(Fraction(2)) == (Fraction(-3, 5), Fraction(4, 5))


def test_niven_table_examples():
    cos6 = niven_table("cos", 6)
    assert {v for _, _, v in cos6} == niven_values()
    assert {b for _, b, _ in cos6} <= {1, 2, 3, 4, 6}
    tan6 = niven_table("tan", 6)
    assert {v for _, _, v in tan6} == {-1, 0, 1}
    assert {b for _, b, _ in tan6} == {1, 4}
    assert niven_table("sin", 2) == [
        (0, 1, 0),
        (1, 1, 0),
        (1, 2, 1),
        (3, 2, -1),
    ]
    with pytest.raises(ValueError):
        niven_table("sin", 0)


def test_iter_angles_order():
    angles = list(iter_angles(6))
    assert angles == sorted(angles, key=lambda ab: (ab[1], ab[0]))
    assert all(math.gcd(a, b) == 1 and 0 <= Fraction(a, b) < 2 for a, b in angles)


def test_pythagorean_identity():
    for a, b in iter_angles(24):
        s, c = sin_element(angle(a, b)), cos_element(angle(a, b))
        n = math.lcm(s.conductor, c.conductor)
        s, c = change_conductor(s, n), change_conductor(c, n)
        assert s * s + c * c == 1


def test_degree_law():
    for d in range(1, 61):
        for c in range(d):
            if math.gcd(c, d) == 1:
                expected = 1 if d <= 2 else totient(d) // 2
                # angle 2*pi*c/d is (2c/d)*pi
                assert degree(cos_element(angle(2 * c, d))) == expected


def test_minpoly_of_zeta_is_cyclotomic():
    from cyclotrig import cyclotomic_poly

    for d in range(1, 101):
        assert minimal_polynomial(zeta(d)) == cyclotomic_poly(d)


def test_dichotomy_small_conductors():
    for d in (3, 4, 6):
        for c in range(d):
            if math.gcd(c, d) == 1:
                s = sin_element(normalize_angle(2 * c, d))
                cos = cos_element(normalize_angle(2 * c, d))
                assert s.is_zero() or is_rational(cos) is not None


@pytest.mark.parametrize(
    "func, a, b",
    [("cos", 1, 7), ("sin", 1, 9), ("tan", 1, 10), ("cos", 3, 11), ("tan", 2, 9),
     ("sin", 1, 12), ("cos", 1, 16), ("tan", 1, 5), ("sin", 5, 13), ("tan", 3, 16)],
)
def test_minpoly_against_sympy(func, a, b):
    x = trig_element(func, angle(a, b))
    assert list(minimal_polynomial(x).coeffs) == trig_minpoly_sympy(func, a, b)


def test_modular_minpoly_matches_integer_expansion():
    rng = random.Random(5)
    for _ in range(25):
        func = rng.choice(["sin", "cos", "tan"])
        b = rng.randint(1, 40)
        a = rng.choice([a for a in range(2 * b) if math.gcd(a, b) == 1])
        try:
            x = trig_element(func, angle(a, b))
        except PoleError:
            continue
        assert minimal_polynomial(x) == minimal_polynomial_exact(x)


def test_minpoly_vanishes_exactly_and_numerically():
    for func in ("sin", "cos", "tan"):
        for a, b in iter_angles(12):
            try:
                x = trig_element(func, angle(a, b))
            except PoleError:
                continue
            p = minimal_polynomial(x)
            assert p(x).is_zero()
            assert verify_root(p, x, 128)
            assert p.leading > 0 and p.content() == 1


def test_cos_evenness_and_sin_shift():
    for a, b in iter_angles(16):
        assert classify(TrigQuery.of("cos", a, b)) == classify(TrigQuery.of("cos", 2 * b - a, b))
        assert classify(TrigQuery.of("sin", a, b)) == classify(
            TrigQuery.of("cos", b - 2 * a, 2 * b)
        )


def test_classification_fields():
    q = classify(TrigQuery.of("tan", 1, 8))
    assert q.kind == "quadratic" and q.degree == 2 and q.minpoly == IntPoly([-1, 2, 1])
    r = classify(TrigQuery.of("sin", 1, 6))
    assert r.kind == "rational" and r.minpoly == IntPoly([-1, 2])
    assert Pole().degree is None and Pole().kind == "pole"


@given(st.fractions(min_value=-1, max_value=1, max_denominator=50))
def test_cos_witness_iff_niven_value(s):
    assert (cos_rationality_witness(s) is not None) == (s in niven_values())


@given(st.integers(-25, 25), st.integers(1, 25))
def test_tan_witness_iff_unit(num, den):
    r = Fraction(num, den)
    assert (tan_rationality_witness(r) is not None) == (r in {-1, 0, 1})


@given(st.fractions())
def test_double_angle_on_unit_circle(r):
    x, y = double_angle_point(r)
    assert x * x + y * y == 1


def test_quadratic_branches_agree_with_numerics():
    for func in ("sin", "cos", "tan"):
        for a, b in iter_angles(24):
            result = classify(TrigQuery.of(func, a, b))
            if isinstance(result, Quadratic):
                ball = eval_numeric(trig_element(func, angle(a, b)), 128)
                assert abs(float(result.surd) - float(ball.re_mid)) < 1e-12

import threading

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclotrig import (
    IntPoly,
    InvalidArgument,
    InvariantViolation,
    cyclotomic_poly,
    divisors,
    inverse_totient,
    totient,
)
from cyclotrig.cyclotomic import _cyclotomic, factorize, mobius
from oracles import cyclotomic_mobius, cyclotomic_sympy, totient_bruteforce

PRIMES_TO_100 = [p for p in range(2, 101) if all(p % q for q in range(2, p))]


@pytest.mark.parametrize("n, expected", [(1, 1), (6, 2), (12, 4)])
def test_totient_examples(n, expected):
    assert totient(n) == expected


@pytest.mark.parametrize(
    "n, expected", [(1, [1]), (6, [1, 2, 3, 6]), (12, [1, 2, 3, 4, 6, 12])]
)
def test_divisors_examples(n, expected):
    assert divisors(n) == expected


@pytest.mark.parametrize(
    "n, coeffs", [(1, [-1, 1]), (6, [1, -1, 1]), (12, [1, 0, -1, 0, 1])]
)
def test_cyclotomic_examples(n, coeffs):
    assert cyclotomic_poly(n) == IntPoly(coeffs)


@pytest.mark.parametrize("k, expected", [(4, [5, 8, 10, 12]), (1, [1, 2]), (3, [])])
def test_inverse_totient_examples(k, expected):
    assert inverse_totient(k) == expected


@pytest.mark.parametrize("fn", [totient, divisors, cyclotomic_poly, inverse_totient])
def test_zero_rejected(fn):
    with pytest.raises(InvalidArgument):
        fn(0)


def test_totient_matches_bruteforce():
    assert all(totient(n) == totient_bruteforce(n) for n in range(1, 500))


def test_divisor_sum_of_totients():
    assert all(sum(totient(d) for d in divisors(n)) == n for n in range(1, 1001))


def test_cyclotomic_degree_and_monic():
    for n in range(1, 301):
        p = cyclotomic_poly(n)
        assert p.degree == totient(n) and p.is_monic


def test_product_over_divisors_is_x_n_minus_1():
    for n in range(1, 101):
        prod = IntPoly([1])
        for d in divisors(n):
            prod = prod * cyclotomic_poly(d)
        assert prod == IntPoly.x_pow_minus_one(n)


def test_inverse_totient_contains_preimage():
    assert all(n in inverse_totient(totient(n)) for n in range(1, 501))


def test_prime_cyclotomic_is_geometric_sum():
    for p in PRIMES_TO_100:
        assert cyclotomic_poly(p) == IntPoly([1] * p)


def test_against_sympy():
    for n in range(1, 121):
        assert list(cyclotomic_poly(n).coeffs) == cyclotomic_sympy(n)


def test_phi_105_coefficient_minus_two():
    coeffs = list(cyclotomic_poly(105).coeffs)
    assert coeffs == cyclotomic_mobius(105)
    assert [i for i, c in enumerate(coeffs) if c == -2] == [7, 41]
    assert all(set(cyclotomic_poly(n).coeffs) <= {-1, 0, 1} for n in range(1, 105))


def test_inexact_division_is_invariant_violation():
    with pytest.raises(InvariantViolation):
        IntPoly([1, 0, 1]).divmod_exact(IntPoly([1, 1]))


def test_memo_cache_concurrent_consistency():
    _cyclotomic.cache_clear()
    results = {}

    def work(i):
        results[i] = [cyclotomic_poly(n) for n in range(1, 80)]

    threads = [threading.Thread(target=work, args=(i,)) for i in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    first = results[0]
    assert all(r == first for r in results.values())


@given(st.integers(1, 10**6))
def test_factorize_roundtrip(n):
    prod = 1
    for p, e in factorize(n).items():
        prod *= p**e
    assert prod == n


@given(st.integers(1, 2000))
def test_mobius_sum(n):
    assert sum(mobius(d) for d in divisors(n)) == (1 if n == 1 else 0)


def test_intpoly_normalization_and_ops():
    p = IntPoly([1, 2, 0, 0])
    assert p.coeffs == (1, 2) and p.degree == 1
    assert IntPoly([]).is_zero() and IntPoly([0, 0]).is_zero()
    assert (IntPoly([1, 1]) * IntPoly([-1, 1])) == IntPoly([-1, 0, 1])
    assert IntPoly([4, 6, 2]).primitive() == IntPoly([2, 3, 1])
    assert IntPoly([2, -4]).primitive() == IntPoly([-1, 2])
    assert str(IntPoly([1, -4, -4, 8])) == "8x^3 - 4x^2 - 4x + 1"

import random
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclotrig import _pykernels, classify, kernels, TrigQuery, zeta
from cyclotrig.cyclotomic import cyclotomic_poly, totient
from cyclotrig.field import _split_prime

needs_compiled = pytest.mark.skipif(
    not kernels.compiled_available(), reason="compiled kernels not built"
)
conductors = st.sampled_from([1, 2, 3, 5, 7, 8, 12, 15, 24, 30, 60, 105])


def _vec(draw, n, bound):
    return draw(st.lists(st.integers(-bound, bound), min_size=totient(n), max_size=totient(n)))


@st.composite
def vector_pairs(draw, bound=50):
    n = draw(conductors)
    return n, _vec(draw, n, bound), _vec(draw, n, bound)


@needs_compiled
@given(vector_pairs())
def test_mulmod_parity(case):
    from cyclotrig import _ckernels

    n, a, b = case
    phi = cyclotomic_poly(n).coeffs
    assert _ckernels.mulmod(a, b, phi) == _pykernels.mulmod(a, b, phi)


@needs_compiled
@given(vector_pairs(), st.integers(-200, 200))
def test_substitute_and_orbit_parity(case, k):
    from cyclotrig import _ckernels

    n, a, _ = case
    phi = cyclotomic_poly(n).coeffs
    assert _ckernels.substitute(a, k, n, phi) == _pykernels.substitute(a, k, n, phi)
    assert _ckernels.orbit(a, n, phi) == _pykernels.orbit(a, n, phi)


@needs_compiled
@given(vector_pairs(bound=5), st.integers(0, 3))
def test_product_kernels_parity(case, i):
    from cyclotrig import _ckernels

    n, a, _ = case
    phi = cyclotomic_poly(n).coeffs
    orbit = _pykernels.orbit(a, n, phi)[:8]
    assert _ckernels.orbit_product(orbit, 3, phi) == _pykernels.orbit_product(orbit, 3, phi)
    p, g = _split_prime(n, i)
    assert _ckernels.orbit_product_split(orbit, 3, n, p, g) == _pykernels.orbit_product_split(
        orbit, 3, n, p, g
    )
    assert _ckernels.inverse_mod_p(a, phi, p) == _pykernels.inverse_mod_p(a, phi, p)


@needs_compiled
def test_overflow_signals_fallback():
    from cyclotrig import _ckernels

    phi = cyclotomic_poly(5).coeffs
    big = [2**62, 1, 0, 0]
    assert _ckernels.mulmod(big, big, phi) is None
    assert kernels.mulmod(big, big, phi) == _pykernels.mulmod(big, big, phi)
    assert _ckernels.mulmod([2**70, 0, 0, 0], [1, 0, 0, 0], phi) is None


def test_split_product_detects_irrational_coefficients():
    # a lone conjugate of zeta_5 is not Galois-stable
    p, g = _split_prime(5, 0)
    _, rational = _pykernels.orbit_product_split([[0, 1, 0, 0]], 1, 5, p, g)
    assert not rational
    _, rational = _pykernels.orbit_product_split(
        _pykernels.orbit([0, 1, 0, 0], 5, cyclotomic_poly(5).coeffs), 1, 5, p, g
    )
    assert rational


def test_split_primes():
    for n in (1, 2, 3, 4, 7, 60, 236):
        for i in range(3):
            p, g = _split_prime(n, i)
            assert p < 2**31 and (p - 1) % n == 0
            assert pow(g, n, p) == 1
            assert all(pow(g, n // q, p) != 1 for q in (2, 3, 5, 7, 59) if n % q == 0)


def test_backend_switching(backend):
    assert kernels.backend() == backend
    with pytest.raises(ValueError):
        kernels.set_backend("fortran")


def test_results_independent_of_backend(backend):
    rng = random.Random(11)
    x = sum((rng.randint(-5, 5) * zeta(21, k) for k in range(12)), zeta(21, 0) * 0)
    assert x * x.inverse() == 1
    got = [str(classify(TrigQuery.of(f, a, 15))) for f in ("sin", "cos", "tan") for a in (1, 2, 4)]
    kernels.set_backend("auto")
    ref = [str(classify(TrigQuery.of(f, a, 15))) for f in ("sin", "cos", "tan") for a in (1, 2, 4)]
    assert got == ref


def test_fallback_selected_when_extension_missing():
    script = """
import importlib.abc, sys
class Block(importlib.abc.MetaPathFinder):
    def find_spec(self, name, path, target=None):
        if name == "cyclotrig._ckernels":
            raise ImportError("blocked")
sys.meta_path.insert(0, Block())
from cyclotrig import kernels, classify, TrigQuery
assert not kernels.compiled_available() and kernels.backend() == "python"
print(classify(TrigQuery.of("tan", 1, 12)).surd)
"""
    proc = subprocess.run([sys.executable, "-c", script], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.strip() == "(2 - 1*sqrt(3))/1"

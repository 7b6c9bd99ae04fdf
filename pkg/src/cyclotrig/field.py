"""Exact arithmetic in the cyclotomic field Q(zeta_n).

An element is stored in the power basis 1, zeta, ..., zeta**(phi(n)-1)
reduced modulo Phi_n, as integer numerators over one positive common
denominator. The basis makes the representation unique, so equality,
the zero test and the rationality test are coefficient comparisons.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Union

from . import kernels
from .cyclotomic import cyclotomic_poly, divisors, factorize, totient
from .errors import (
    ConductorMismatch,
    DivisionByZero,
    InvalidArgument,
    InvalidConductor,
    InvariantViolation,
    NotAnAutomorphism,
)

__all__ = [
    "CycloElement",
    "zeta",
    "constant",
    "add",
    "sub",
    "neg",
    "mul",
    "inverse",
    "power",
    "change_conductor",
    "galois_apply",
    "is_rational",
    "order_as_root_of_unity",
]

Scalar = Union[int, Fraction]


@lru_cache(maxsize=None)
def _phi(n: int) -> tuple[int, ...]:
    return cyclotomic_poly(n).coeffs


def _check_conductor(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise InvalidArgument(f"conductor must be a positive integer, got {n!r}")


class CycloElement:
    """Immutable element of Q(zeta_n), ``n = conductor``."""

    __slots__ = ("conductor", "_nums", "_den")

    conductor: int
    _nums: tuple[int, ...]
    _den: int

    def __init__(self, conductor: int, coeffs: Iterable[Scalar]):
        _check_conductor(conductor)
        fracs = [Fraction(c) for c in coeffs]
        m = totient(conductor)
        if len(fracs) != m:
            raise InvalidArgument(
                f"Q(zeta_{conductor}) needs {m} coefficients, got {len(fracs)}"
            )
        den = math.lcm(*(f.denominator for f in fracs)) if fracs else 1
        self._set(conductor, [f.numerator * (den // f.denominator) for f in fracs], den)

    def _set(self, conductor: int, nums, den: int) -> None:
        g = math.gcd(den, *nums)
        if g != 1:
            nums = [v // g for v in nums]
            den //= g
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "_nums", tuple(nums))
        object.__setattr__(self, "_den", den)

    @classmethod
    def _raw(cls, conductor: int, nums, den: int = 1) -> CycloElement:
        # nums already reduced mod Phi_n; den > 0
        self = cls.__new__(cls)
        self._set(conductor, nums, den)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("CycloElement is immutable")

    # -- views -----------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(v, self._den) for v in self._nums)

    @property
    def numerators(self) -> tuple[int, ...]:
        """Integer coefficients over :attr:`denominator`."""
        return self._nums

    @property
    def denominator(self) -> int:
        return self._den

    @property
    def dimension(self) -> int:
        return len(self._nums)

    def is_zero(self) -> bool:
        return not any(self._nums)

    def as_rational(self) -> Optional[Fraction]:
        """The value as a Fraction if it lies in Q, else None."""
        if any(self._nums[1:]):
            return None
        return Fraction(self._nums[0], self._den)

    def is_real(self) -> bool:
        return self.conj() == self

    def __repr__(self) -> str:
        return f"CycloElement({self.conductor}, {[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        terms = []
        for j, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if j == 0 else f"({c})*z{self.conductor}^{j}")
        return " + ".join(terms) or "0"

    def __complex__(self) -> complex:
        z = complex(math.cos(2 * math.pi / self.conductor), math.sin(2 * math.pi / self.conductor))
        acc = 0j
        for c in reversed(self._nums):
            acc = acc * z + c
        return acc / self._den

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other) -> CycloElement:
        if isinstance(other, CycloElement):
            if other.conductor != self.conductor:
                raise ConductorMismatch(
                    f"conductors {self.conductor} and {other.conductor} differ; "
                    "promote with change_conductor first"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return constant(other, self.conductor)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, CycloElement):
            return (
                self.conductor == other.conductor
                and self._den == other._den
                and self._nums == other._nums
            )
        if isinstance(other, (int, Fraction)):
            return self.as_rational() == other
        return NotImplemented

    def __hash__(self) -> int:
        q = self.as_rational()
        if q is not None:
            return hash(q)
        return hash((self.conductor, self._nums, self._den))

    def __neg__(self) -> CycloElement:
        return CycloElement._raw(self.conductor, [-v for v in self._nums], self._den)

    def __add__(self, other) -> CycloElement:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        da, db = self._den, other._den
        nums = [a * db + b * da for a, b in zip(self._nums, other._nums)]
        return CycloElement._raw(self.conductor, nums, da * db)

    __radd__ = __add__

    def __sub__(self, other) -> CycloElement:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> CycloElement:
        return (-self) + other

    def __mul__(self, other) -> CycloElement:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        nums = kernels.mulmod(list(self._nums), list(other._nums), _phi(self.conductor))
        return CycloElement._raw(self.conductor, nums, self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> CycloElement:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other) -> CycloElement:
        return self.inverse() * other

    def __pow__(self, m: int) -> CycloElement:
        if not isinstance(m, int):
            return NotImplemented
        if m < 0:
            return self.inverse() ** (-m)
        result = constant(1, self.conductor)
        base = self
        while m:
            if m & 1:
                result = result * base
            m >>= 1
            if m:
                base = base * base
        return result

    def inverse(self) -> CycloElement:
        """Multiplicative inverse.

        Solved modulo word-sized primes and lifted by CRT and rational
        reconstruction, with the candidate checked exactly; the extended
        Euclidean algorithm with Phi_n over Q is the fallback.
        """
        if self.is_zero():
            raise DivisionByZero("zero has no inverse")
        q = self.as_rational()
        if q is not None:
            return constant(1 / q, self.conductor)
        phi = _phi(self.conductor)
        inv = _inverse_modular(self._nums, phi)
        if inv is None:
            inv = _inverse_euclid(self._nums, phi)
        nums, den = inv
        # (a/den)^-1 = den * a^-1
        return CycloElement._raw(self.conductor, [v * self._den for v in nums], den)

    # -- field maps ------------------------------------------------------

    def galois(self, k: int) -> CycloElement:
        """sigma_k: zeta -> zeta**k."""
        n = self.conductor
        if math.gcd(k, n) != 1:
            raise NotAnAutomorphism(f"gcd({k}, {n}) != 1")
        k %= n
        if k == 1 or n <= 2:
            return self
        nums = kernels.substitute(list(self._nums), k, n, _phi(n))
        return CycloElement._raw(n, nums, self._den)

    def conj(self) -> CycloElement:
        """Complex conjugation, sigma_{-1}."""
        return self.galois(-1)

    def to_conductor(self, m: int) -> CycloElement:
        """Same number written in Q(zeta_m), using zeta_n = zeta_m**(m/n)."""
        _check_conductor(m)
        n = self.conductor
        if m % n:
            raise InvalidConductor(f"{n} does not divide {m}")
        if m == n:
            return self
        nums = kernels.substitute(list(self._nums), m // n, m, _phi(m))
        return CycloElement._raw(m, nums, self._den)

    def conjugates(self) -> list[CycloElement]:
        """Distinct Galois conjugates, in order of the smallest k producing each."""
        n = self.conductor
        images = kernels.orbit(list(self._nums), n, _phi(n))
        return [CycloElement._raw(n, v, self._den) for v in images]

    def root_of_unity_order(self) -> Optional[int]:
        # The roots of unity in Q(zeta_n) are exactly the lcm(2, n)-th ones:
        # a primitive r-th root lies in Q(zeta_n) only if phi(lcm(r, n)) == phi(n),
        # which forces r | lcm(2, n).
        bound = math.lcm(2, self.conductor)
        if self.is_zero():
            return None
        for m in divisors(bound):
            if self**m == 1:
                return m
        return None


def _inverse_euclid(nums, phi) -> tuple[list[int], int]:
    """a^-1 mod phi by the extended Euclidean algorithm over Q.

    Returns (numerators, denominator). Slow on large conductors, but it
    shares nothing with the modular route and serves as its fallback.
    """
    m = len(phi) - 1

    def trim(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    r0 = trim([Fraction(c) for c in phi])
    r1 = trim([Fraction(c) for c in nums])
    s0: list[Fraction] = []
    s1 = [Fraction(1)]
    while len(r1) > 1:
        # r0 = q * r1 + r
        r = list(r0)
        q = [Fraction(0)] * (len(r) - len(r1) + 1)
        lead = r1[-1]
        while len(r) >= len(r1):
            c = r[-1] / lead
            shift = len(r) - len(r1)
            q[shift] = c
            for j, v in enumerate(r1):
                r[shift + j] -= c * v
            r.pop()
            trim(r)
        ns = list(s0) + [Fraction(0)] * max(0, len(q) + len(s1) - 1 - len(s0))
        for i, a in enumerate(q):
            if a:
                for j, b in enumerate(s1):
                    ns[i + j] -= a * b
        r0, r1 = r1, r
        s0, s1 = s1, trim(ns)
    if not r1:
        raise InvariantViolation("element not invertible modulo the cyclotomic polynomial")
    c = r1[0]
    out = [v / c for v in s1]
    out += [Fraction(0)] * (m - len(out))
    den = math.lcm(*(f.denominator for f in out))
    return [f.numerator * (den // f.denominator) for f in out], den


_PRIMES: list[int] = []
_PRIMES_LOCK = threading.Lock()


def _modular_prime(i: int) -> int:
    """The i-th prime below 2**31, counting down from 2**31 - 1."""
    with _PRIMES_LOCK:
        while len(_PRIMES) <= i:
            c = (_PRIMES[-1] if _PRIMES else (1 << 31) + 1) - 2
            while not _is_prime(c):
                c -= 2
            _PRIMES.append(c)
        return _PRIMES[i]


_SPLIT: dict[int, list[tuple[int, int]]] = {}


def _split_prime(n: int, i: int) -> tuple[int, int]:
    """The i-th prime p = 1 mod lcm(n, 2) below 2**31, with a primitive n-th root of unity mod p."""
    step = n if n % 2 == 0 else 2 * n
    with _PRIMES_LOCK:
        found = _SPLIT.setdefault(n, [])
        while len(found) <= i:
            p = found[-1][0] - step if found else ((1 << 31) - 2) // step * step + 1
            while p > 3 and not _is_prime(p):
                p -= step
            if p <= 3:
                raise ArithmeticError(f"ran out of primes split by Phi_{n}")
            found.append((p, _root_of_unity_mod(n, p)))
        return found[i]


def _root_of_unity_mod(n: int, p: int) -> int:
    qs = list(factorize(n))
    for h in range(2, p):
        g = pow(h, (p - 1) // n, p)
        if all(pow(g, n // q, p) != 1 for q in qs):
            return g
    raise ArithmeticError(f"no primitive {n}-th root of unity mod {p}")


def _is_prime(n: int) -> bool:
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def _rational_reconstruct(c: int, modulus: int) -> Optional[Fraction]:
    """The unique a/b == c mod modulus with |a|, b <= sqrt(modulus/2), if any."""
    bound = math.isqrt(modulus // 2)
    r0, r1 = modulus, c % modulus
    t0, t1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if t1 == 0 or abs(t1) > bound or math.gcd(r1, t1) != 1:
        return None
    return Fraction(r1, t1)


_MAX_PRIMES = 400


def _inverse_modular(nums, phi) -> Optional[tuple[list[int], int]]:
    """a^-1 mod phi from images mod many primes, CRT and rational reconstruction.

    Each candidate is checked exactly (a * candidate == 1), so a returned
    value is always correct; None means the prime budget ran out.
    """
    nums = list(nums)
    m = len(phi) - 1
    residues = [0] * m
    modulus = 1
    for i in range(_MAX_PRIMES):
        p = _modular_prime(i)
        image = kernels.inverse_mod_p(nums, phi, p)
        if image is None:
            continue
        # CRT: residues mod modulus, image mod p  ->  mod modulus*p
        k = pow(modulus, -1, p)
        residues = [r + modulus * ((u - r) * k % p) for r, u in zip(residues, image)]
        modulus *= p
        fracs = [_rational_reconstruct(r, modulus) for r in residues]
        if any(f is None for f in fracs):
            continue
        den = math.lcm(*(f.denominator for f in fracs))
        cand = [f.numerator * (den // f.denominator) for f in fracs]
        if kernels.mulmod(nums, cand, phi) == [den] + [0] * (m - 1):
            return cand, den
    return None


# -- functional interface -------------------------------------------------


def constant(q: Scalar, n: int = 1) -> CycloElement:
    """The rational q as an element of Q(zeta_n)."""
    _check_conductor(n)
    q = Fraction(q)
    return CycloElement._raw(n, [q.numerator] + [0] * (totient(n) - 1), q.denominator)


def zeta(n: int, k: int = 1) -> CycloElement:
    """zeta_n**k with zeta_n = exp(2*pi*i/n)."""
    _check_conductor(n)
    phi = _phi(n)
    e = k % n
    return CycloElement._raw(n, kernels.reduce([0] * e + [1], phi))


def add(x: CycloElement, y: CycloElement) -> CycloElement:
    return x + y


def sub(x: CycloElement, y: CycloElement) -> CycloElement:
    return x - y


def neg(x: CycloElement) -> CycloElement:
    return -x


def mul(x: CycloElement, y: CycloElement) -> CycloElement:
    return x * y


def inverse(x: CycloElement) -> CycloElement:
    return x.inverse()


def power(x: CycloElement, m: int) -> CycloElement:
    if m < 0:
        raise InvalidArgument("power needs a nonnegative exponent")
    return x**m


def change_conductor(x: CycloElement, m: int) -> CycloElement:
    return x.to_conductor(m)


def galois_apply(k: int, x: CycloElement) -> CycloElement:
    return x.galois(k)


def is_rational(x: CycloElement) -> Optional[Fraction]:
    return x.as_rational()


def order_as_root_of_unity(x: CycloElement) -> Optional[int]:
    return x.root_of_unity_order()

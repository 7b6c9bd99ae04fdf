"""Totient, divisors, inverse totient and cyclotomic polynomials."""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import InvalidArgument, InvariantViolation

__all__ = [
    "IntPoly",
    "factorize",
    "totient",
    "divisors",
    "cyclotomic_poly",
    "inverse_totient",
]


@dataclass(frozen=True)
class IntPoly:
    """Dense polynomial with integer coefficients, ``coeffs[i]`` multiplies x**i.

    Trailing zeros are stripped on construction; the zero polynomial has
    an empty coefficient tuple.
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def x_pow_minus_one(cls, n: int) -> IntPoly:
        return cls([-1] + [0] * (n - 1) + [1])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def primitive(self) -> IntPoly:
        """Divide out the content and make the leading coefficient positive."""
        if not self.coeffs:
            return self
        g = self.content()
        if self.leading < 0:
            g = -g
        return IntPoly(c // g for c in self.coeffs)

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __add__(self, other: IntPoly) -> IntPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __mul__(self, other: IntPoly) -> IntPoly:
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    def divmod_exact(self, divisor: IntPoly) -> IntPoly:
        """Quotient of an exact division by a polynomial with leading coefficient +-1."""
        if divisor.leading not in (1, -1):
            raise InvalidArgument("divisor must have unit leading coefficient")
        rem = list(self.coeffs)
        dc = divisor.coeffs
        dl = len(dc)
        if len(rem) < dl:
            if rem:
                raise InvariantViolation("inexact polynomial division")
            return IntPoly()
        quot = [0] * (len(rem) - dl + 1)
        lead = divisor.leading
        for i in range(len(rem) - dl, -1, -1):
            q = rem[i + dl - 1] * lead
            quot[i] = q
            if q:
                for j, c in enumerate(dc):
                    rem[i + j] -= q * c
        if any(rem):
            raise InvariantViolation("inexact polynomial division")
        return IntPoly(quot)

    def __str__(self) -> str:
        from .cli import format_poly

        return format_poly(self.coeffs)


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division."""
    if n < 1:
        raise InvalidArgument(f"expected a positive integer, got {n}")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def totient(n: int) -> int:
    """Euler's phi, computed from the factorization of n."""
    result = n
    for p in factorize(n):
        result -= result // p
    return result


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def mobius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


@lru_cache(maxsize=None)
def _cyclotomic(n: int) -> IntPoly:
    poly = IntPoly.x_pow_minus_one(n)
    for d in divisors(n)[:-1]:
        poly = poly.divmod_exact(_cyclotomic(d))
    return poly


def cyclotomic_poly(n: int) -> IntPoly:
    """Phi_n from ``x**n - 1 = prod_{d | n} Phi_d``, by repeated exact division.

    Results are memoized; concurrent callers may recompute an entry but
    always observe the same value.
    """
    if n < 1:
        raise InvalidArgument(f"cyclotomic_poly needs n >= 1, got {n}")
    return _cyclotomic(n)


def inverse_totient(k: int) -> list[int]:
    """All n with phi(n) == k.

    For n > 6, phi(n) >= sqrt(n), so every solution lies in [1, max(6, k*k)].
    """
    if k < 1:
        raise InvalidArgument(f"inverse_totient needs k >= 1, got {k}")
    bound = max(6, k * k)
    if bound > _SIEVE_LIMIT:
        return [n for n in range(1, bound + 1) if totient(n) == k]
    table = _totient_table(bound)
    return [n for n in range(1, bound + 1) if table[n] == k]


_SIEVE_LIMIT = 1 << 22
_TABLE: list[int] = [0]
_TABLE_LOCK = threading.Lock()


def _totient_table(limit: int) -> list[int]:
    """phi(0..m) for some m >= limit, sieved once and grown by doubling."""
    global _TABLE
    with _TABLE_LOCK:
        if len(_TABLE) <= limit:
            size = min(max(limit + 1, 2 * len(_TABLE)), _SIEVE_LIMIT + 1)
            phi = list(range(size))
            for p in range(2, size):
                if phi[p] == p:
                    for m in range(p, size, p):
                        phi[m] -= phi[m] // p
            _TABLE = phi
        return _TABLE


def coprime_residues(n: int) -> list[int]:
    return [k for k in range(1, n + 1) if math.gcd(k, n) == 1]

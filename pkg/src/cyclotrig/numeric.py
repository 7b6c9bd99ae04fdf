"""Rigorous complex evaluation of cyclotomic field elements.

Midpoints are MPFR numbers at the requested precision. Every operation
adds a bound on its own rounding error to the radius, and all radius
arithmetic is rounded upward, so the true value always lies in the ball.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import gmpy2
from gmpy2 import mpfr, mpq

from .cyclotomic import IntPoly
from .errors import InvalidArgument, NotReal, PrecisionExhausted
from .field import CycloElement

__all__ = [
    "ComplexBall",
    "eval_numeric",
    "sign_of_real",
    "verify_root",
    "MAX_PRECISION",
]

MAX_PRECISION = 4096
_RAD_PREC = 64


def _up():
    return gmpy2.context(gmpy2.get_context(), precision=_RAD_PREC, round=gmpy2.RoundUp)


def _mid(prec: int):
    return gmpy2.context(gmpy2.get_context(), precision=prec, round=gmpy2.RoundToNearest)


@dataclass(frozen=True)
class ComplexBall:
    """Midpoint ``re_mid + i*im_mid`` with error bound ``radius``.

    The exact value z satisfies ``|z - mid| <= radius``, hence each
    component is also within ``radius`` of its midpoint.
    """

    re_mid: mpfr
    im_mid: mpfr
    radius: mpfr
    precision: int

    @property
    def ulp(self) -> mpfr:
        # relative rounding error of one correctly rounded operation
        return mpfr(2) ** (-self.precision)

    def _mag(self) -> mpfr:
        with _up():
            return abs(self.re_mid) + abs(self.im_mid)

    def __add__(self, other: ComplexBall) -> ComplexBall:
        p = self.precision
        with _mid(p):
            re = self.re_mid + other.re_mid
            im = self.im_mid + other.im_mid
        with _up():
            rad = self.radius + other.radius + 2 * self.ulp * (abs(re) + abs(im))
        return ComplexBall(re, im, rad, p)

    def __mul__(self, other: ComplexBall) -> ComplexBall:
        p = self.precision
        a, b, c, d = self.re_mid, self.im_mid, other.re_mid, other.im_mid
        with _mid(p):
            re = a * c - b * d
            im = a * d + b * c
        with _up():
            ma, mb = self._mag(), other._mag()
            rounding = 8 * self.ulp * ma * mb
            rad = ma * other.radius + mb * self.radius + self.radius * other.radius + rounding
        return ComplexBall(re, im, rad, p)

    def scale_down(self, den: int) -> ComplexBall:
        """Divide by a positive integer."""
        p = self.precision
        # int operands enter MPFR exactly, so each quotient rounds once
        with _mid(p):
            re = self.re_mid / den
            im = self.im_mid / den
        with _up():
            rad = self.radius / den + 2 * self.ulp * (abs(re) + abs(im))
        return ComplexBall(re, im, rad, p)

    def contains(self, re: Union[int, Fraction], im: Union[int, Fraction] = 0) -> bool:
        """Whether the exact rational point re + i*im lies within radius componentwise."""
        r = mpq(self.radius)
        return abs(mpq(self.re_mid) - _mpq(re)) <= r and abs(mpq(self.im_mid) - _mpq(im)) <= r

    def contains_zero(self) -> bool:
        return self.contains(0, 0)

    def __str__(self) -> str:
        digits = max(6, int(self.precision * 0.30103) - 2)
        sign = "-" if self.im_mid < 0 else "+"
        return (
            f"{self.re_mid:.{digits}g} {sign} {abs(self.im_mid):.{digits}g}i "
            f"+/- {float(self.radius):.3e}"
        )


def _mpq(q: Union[int, Fraction]) -> mpq:
    q = Fraction(q)
    return mpq(int(q.numerator), int(q.denominator))


def _exact_ball(q: Union[int, Fraction], prec: int) -> ComplexBall:
    q = Fraction(q)
    with _mid(prec):
        re = mpfr(mpq(q.numerator, q.denominator))
    with _up():
        rad = mpfr(2) ** (-prec) * abs(re) * 2
    return ComplexBall(re, mpfr(0, prec), rad, prec)


def zeta_ball(n: int, prec: int) -> ComplexBall:
    """exp(2*pi*i/n) as a ball."""
    with _mid(prec):
        theta = 2 * gmpy2.const_pi() / n
        re = gmpy2.cos(theta)
        im = gmpy2.sin(theta)
    with _up():
        u = mpfr(2) ** (-prec)
        # theta carries at most two roundings; cos and sin are 1-Lipschitz
        # and each correctly rounded
        rad = 4 * u * abs(theta) + 4 * u
    return ComplexBall(re, im, rad, prec)


def eval_numeric(x: CycloElement, precision_bits: int = 128) -> ComplexBall:
    """Evaluate x at zeta = exp(2*pi*i/n) by Horner's rule."""
    if precision_bits < 32:
        raise InvalidArgument("precision_bits must be at least 32")
    prec = int(precision_bits)
    nums = x.numerators
    z = zeta_ball(x.conductor, prec)
    acc = _exact_ball(nums[-1], prec)
    for c in reversed(nums[:-1]):
        acc = acc * z
        if c:
            acc = acc + _exact_ball(c, prec)
    if x.denominator != 1:
        acc = acc.scale_down(x.denominator)
    return acc


def sign_of_real(x: CycloElement) -> int:
    """Sign of a real field element.

    Zero is decided exactly. Otherwise precision doubles from 64 bits until
    the ball excludes zero; a nonzero algebraic number always separates
    at finite precision.
    """
    if not x.is_real():
        raise NotReal("sign_of_real needs an element fixed by complex conjugation")
    if x.is_zero():
        return 0
    prec = 64
    while prec <= MAX_PRECISION:
        ball = eval_numeric(x, prec)
        if ball.re_mid > ball.radius:
            return 1
        if ball.re_mid < -ball.radius:
            return -1
        prec *= 2
    raise PrecisionExhausted(
        f"could not separate a nonzero element from 0 at {MAX_PRECISION} bits"
    )


def eval_poly(p: IntPoly, ball: ComplexBall) -> ComplexBall:
    prec = ball.precision
    acc = _exact_ball(0, prec)
    for c in reversed(p.coeffs):
        acc = acc * ball + _exact_ball(c, prec)
    return acc


def verify_root(p: IntPoly, x: CycloElement, precision_bits: int = 128) -> bool:
    """True iff p evaluated on the ball around x is consistent with zero."""
    return eval_poly(p, eval_numeric(x, precision_bits)).contains_zero()

"""Reduced rationals and angles expressed as rational multiples of pi."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByZero

__all__ = [
    "NormalizedAngle",
    "reduce_fraction",
    "normalize_angle",
    "as_fraction_of_two_pi",
]


def reduce_fraction(num: int, den: int) -> Fraction:
    """Return num/den in lowest terms with a positive denominator."""
    if den == 0:
        raise DivisionByZero(f"zero denominator in {num}/{den}")
    return Fraction(num, den)


@dataclass(frozen=True)
class NormalizedAngle:
    """The angle ``t*pi`` with ``0 <= t < 2``.

    ``original`` keeps the multiple of pi the caller supplied, so that
    ``t == original mod 2``.
    """

    t: Fraction
    original: Fraction

    @classmethod
    def from_fraction(cls, q: Fraction) -> NormalizedAngle:
        q = Fraction(q)
        return cls(q % 2, q)

    def __str__(self) -> str:
        t = self.t
        if t == 0:
            return "0"
        a = "" if t.numerator == 1 else f"{t.numerator}*"
        b = "" if t.denominator == 1 else f"/{t.denominator}"
        return f"{a}pi{b}"


def normalize_angle(a: int, b: int) -> NormalizedAngle:
    """Reduce the angle ``a*pi/b`` into ``[0, 2*pi)``."""
    return NormalizedAngle.from_fraction(reduce_fraction(a, b))


def as_fraction_of_two_pi(angle: NormalizedAngle) -> Fraction:
    """Return c/d with ``t*pi == 2*pi*c/d``."""
    return angle.t / 2

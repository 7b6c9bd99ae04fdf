"""sin, cos and tan of rational multiples of pi as cyclotomic field elements.

With ``t*pi = 2*pi*c/d``, ``cos(t*pi) = (zeta_d**c + zeta_d**-c) / 2`` lives
in Q(zeta_d); sin is cos of the complementary angle and tan is their
quotient in the compositum. Degrees and minimal polynomials come from
Galois orbits, and the classification follows from the degree.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import ClassVar, Iterator, Optional, Union

from . import kernels
from .cyclotomic import IntPoly, cyclotomic_poly, factorize, inverse_totient
from .errors import InvariantViolation, NotRealQuadratic, OutOfRange, PoleError
from .field import CycloElement, _phi, _split_prime, constant, zeta
from .numeric import sign_of_real
from .rational import NormalizedAngle, as_fraction_of_two_pi, normalize_angle

__all__ = [
    "Func",
    "TrigQuery",
    "Surd",
    "Classification",
    "Rational",
    "Quadratic",
    "Algebraic",
    "Pole",
    "cos_element",
    "sin_element",
    "tan_element",
    "trig_element",
    "minimal_polynomial",
    "minimal_polynomial_exact",
    "degree",
    "classify",
    "surd_from_quadratic",
    "double_angle_point",
    "cos_rationality_witness",
    "tan_rationality_witness",
    "iter_angles",
    "niven_table",
]


class Func(str, enum.Enum):
    SIN = "sin"
    COS = "cos"
    TAN = "tan"


@dataclass(frozen=True)
class TrigQuery:
    func: Func
    angle: NormalizedAngle

    @classmethod
    def of(cls, func: Union[Func, str], a: int, b: int = 1) -> TrigQuery:
        return cls(Func(func), normalize_angle(a, b))


# -- element construction --------------------------------------------------


def cos_element(angle: NormalizedAngle) -> CycloElement:
    c_over_d = as_fraction_of_two_pi(angle)
    c, d = c_over_d.numerator, c_over_d.denominator
    return (zeta(d, c) + zeta(d, -c)) / 2


def sin_element(angle: NormalizedAngle) -> CycloElement:
    # sin(t*pi) = cos((1/2 - t)*pi)
    return cos_element(NormalizedAngle.from_fraction(Fraction(1, 2) - angle.t))


def tan_element(angle: NormalizedAngle) -> CycloElement:
    s = sin_element(angle)
    c = cos_element(angle)
    n = math.lcm(s.conductor, c.conductor)
    c = c.to_conductor(n)
    if c.is_zero():
        raise PoleError(f"tan has a pole at {angle}")
    return s.to_conductor(n) / c


_BUILDERS = {Func.SIN: sin_element, Func.COS: cos_element, Func.TAN: tan_element}


def trig_element(func: Union[Func, str], angle: NormalizedAngle) -> CycloElement:
    return _BUILDERS[Func(func)](angle)


# -- minimal polynomials ---------------------------------------------------


def _orbit_vectors(x: CycloElement) -> tuple[list[list[int]], int]:
    conj = x.conjugates()
    den = math.lcm(*(c.denominator for c in conj))
    return [[v * (den // c.denominator) for v in c.numerators] for c in conj], den


def minimal_polynomial(x: CycloElement) -> IntPoly:
    """Primitive integer minimal polynomial, as the product of den*X - s over the orbit of x.

    The product is expanded modulo primes p = 1 mod n, where Phi_n splits
    into linear factors and the field coefficients become tuples of
    residues; rationality means the residues agree. Every conjugate s has
    |den*s| <= sum |numerators| since |zeta| = 1, so each coefficient is at
    most (den + that sum)**degree, and the CRT lift is exact once the
    modulus exceeds twice this bound.
    """
    vectors, den = _orbit_vectors(x)
    n = x.conductor
    bound = (den + sum(abs(v) for v in vectors[0])) ** len(vectors)
    modulus, lifted = 1, [0] * (len(vectors) + 1)
    i = 0
    while modulus <= 2 * bound:
        p, g = _split_prime(n, i)
        i += 1
        residues, rational = kernels.orbit_product_split(vectors, den, n, p, g)
        if not rational:
            raise InvariantViolation(f"orbit product of {x!r} has irrational coefficients")
        inv = pow(modulus, -1, p)
        for k, r in enumerate(residues):
            lifted[k] += modulus * ((r - lifted[k]) * inv % p)
        modulus *= p
    half = modulus // 2
    return IntPoly(c - modulus if c > half else c for c in lifted).primitive()


def minimal_polynomial_exact(x: CycloElement) -> IntPoly:
    """Same as minimal_polynomial, expanded over the integers without CRT."""
    vectors, den = _orbit_vectors(x)
    rows = kernels.orbit_product(vectors, den, _phi(x.conductor))
    if any(any(row[1:]) for row in rows):
        raise InvariantViolation(f"orbit product of {x!r} has irrational coefficients")
    return IntPoly(row[0] for row in rows).primitive()


def degree(x: CycloElement) -> int:
    """Degree over Q: the size of the Galois orbit."""
    return len(x.conjugates())


# -- surds -----------------------------------------------------------------


def _squarefree_split(n: int) -> tuple[int, int]:
    """n = s*s*D with D squarefree; returns (s, D). n > 0."""
    s, core = 1, 1
    for p, e in factorize(n).items():
        s *= p ** (e // 2)
        if e % 2:
            core *= p
    return s, core


@dataclass(frozen=True)
class Surd:
    """The real number ``(p + q*sqrt(D)) / r`` in lowest terms."""

    p: int
    q: int
    r: int
    D: int

    def __post_init__(self):
        if self.q == 0 or self.r < 1 or self.D < 2:
            raise ValueError(f"not a canonical surd: {self!r}")
        if _squarefree_split(self.D)[0] != 1:
            raise ValueError(f"D={self.D} is not squarefree")
        if math.gcd(self.p, self.q, self.r) != 1:
            raise ValueError(f"{self!r} is not in lowest terms")

    def __str__(self) -> str:
        sign = "-" if self.q < 0 else "+"
        return f"({self.p} {sign} {abs(self.q)}*sqrt({self.D}))/{self.r}"

    def minpoly(self) -> IntPoly:
        # r*x - p = q*sqrt(D)  =>  r^2 x^2 - 2pr x + p^2 - q^2 D = 0
        return IntPoly([self.p**2 - self.q**2 * self.D, -2 * self.p * self.r, self.r**2]).primitive()

    def to_decimal(self, digits: int = 50):
        """Independent decimal evaluation via the decimal module."""
        import decimal

        with decimal.localcontext() as ctx:
            ctx.prec = digits + 10
            val = (decimal.Decimal(self.p) + self.q * decimal.Decimal(self.D).sqrt()) / self.r
        return val

    def __float__(self) -> float:
        return (self.p + self.q * math.sqrt(self.D)) / self.r


def _surd_on_branch(minpoly: IntPoly, branch: int) -> Surd:
    if minpoly.degree != 2:
        raise ValueError("expected a quadratic")
    c, b, a = minpoly.coeffs
    if a < 0:
        a, b, c = -a, -b, -c
    disc = b * b - 4 * a * c
    if disc < 0:
        raise NotRealQuadratic(f"discriminant {disc} is negative")
    s, core = _squarefree_split(disc) if disc else (0, 1)
    if core == 1:
        raise ValueError(f"{minpoly} is reducible over Q")
    p, q, r = -b, branch * s, 2 * a
    g = math.gcd(p, q, r)
    return Surd(p // g, q // g, r // g, core)


def surd_from_quadratic(minpoly: IntPoly, approx) -> Surd:
    """Canonical surd for the real root of ``minpoly`` nearest to ``approx``."""
    plus = _surd_on_branch(minpoly, 1)
    minus = _surd_on_branch(minpoly, -1)
    target = float(approx)
    if abs(float(plus) - target) <= abs(float(minus) - target):
        return plus
    return minus


# -- classification ----------------------------------------------------------


class Classification:
    """Base of the four outcomes; ``kind`` names the variant."""

    kind: ClassVar[str]


@dataclass(frozen=True)
class Rational(Classification):
    value: Fraction
    kind: ClassVar[str] = "rational"
    degree: ClassVar[int] = 1

    @property
    def minpoly(self) -> IntPoly:
        return IntPoly([-self.value.numerator, self.value.denominator])


@dataclass(frozen=True)
class Quadratic(Classification):
    surd: Surd
    kind: ClassVar[str] = "quadratic"
    degree: ClassVar[int] = 2

    @property
    def minpoly(self) -> IntPoly:
        return self.surd.minpoly()


@dataclass(frozen=True)
class Algebraic(Classification):
    degree: int
    minpoly: IntPoly
    kind: ClassVar[str] = "algebraic"


@dataclass(frozen=True)
class Pole(Classification):
    kind: ClassVar[str] = "pole"
    degree: ClassVar[None] = None
    minpoly: ClassVar[None] = None


def classify_element(x: CycloElement) -> Classification:
    q = x.as_rational()
    if q is not None:
        # the power basis is a Q-basis, so degree 1 <=> only a constant term
        return Rational(q)
    poly = minimal_polynomial(x)
    if poly.degree == 2:
        c, b, a = poly.coeffs
        # x = (-b + branch*sqrt(disc)) / 2a with a > 0, so branch = sign(2a*x + b)
        branch = sign_of_real(x * (2 * a) + b)
        return Quadratic(_surd_on_branch(poly, branch))
    return Algebraic(poly.degree, poly)


def classify(query: TrigQuery) -> Classification:
    try:
        x = trig_element(query.func, query.angle)
    except PoleError:
        return Pole()
    return classify_element(x)


# -- the rationality witnesses ------------------------------------------------


def double_angle_point(r: Fraction) -> tuple[Fraction, Fraction]:
    """((1 - r^2)/(1 + r^2), 2r/(1 + r^2)): the square of (1 + ri)/|1 + ri|."""
    r = Fraction(r)
    w = 1 + r * r
    return (1 - r * r) / w, 2 * r / w


def cos_rationality_witness(s: Fraction) -> Optional[int]:
    """d such that w = s + i*sqrt(1 - s^2) is a primitive d-th root of unity.

    w and its conjugate are the roots of x^2 - 2s x + 1. If w is a root of
    unity its degree is at most 2, so that polynomial is Phi_d (phi(d) = 2)
    or Phi_d squared (phi(d) = 1, w = +-1).
    """
    s = Fraction(s)
    if abs(s) > 1:
        raise OutOfRange(f"|{s}| > 1 is not a cosine")
    target = (Fraction(1), -2 * s, Fraction(1))
    for k in (1, 2):
        for d in inverse_totient(k):
            phi_d = cyclotomic_poly(d)
            if k == 1:
                phi_d = phi_d * phi_d
            if tuple(Fraction(c) for c in phi_d.coeffs) == target:
                return d
    return None


_HALVING_DENOMINATORS = (1, 2, 3, 4, 6, 8, 12)


def tan_rationality_witness(r: Fraction) -> Optional[int]:
    """b such that tan(a*pi/b) == r for some a coprime to b, else None.

    Doubling the angle of 1 + ri lands on the rational unit-circle point
    ``double_angle_point(r)``, which must be a root of unity of degree at
    most 2. The finitely many angles whose double is such a root are then
    checked exactly.
    """
    r = Fraction(r)
    x, _ = double_angle_point(r)
    if cos_rationality_witness(x) is None:
        return None
    for b in _HALVING_DENOMINATORS:
        for a in range(b):
            if math.gcd(a, b) != 1:
                continue
            try:
                value = tan_element(normalize_angle(a, b))
            except PoleError:
                continue
            if value == r:
                return b
    return None


# -- sweeps -------------------------------------------------------------------


def iter_angles(b_max: int) -> Iterator[tuple[int, int]]:
    """Reduced (a, b) with 0 <= a/b < 2 and b <= b_max, sorted by b then a."""
    for b in range(1, b_max + 1):
        for a in range(2 * b):
            if math.gcd(a, b) == 1:
                yield a, b


def niven_table(func: Union[Func, str], b_max: int) -> list[tuple[int, int, Fraction]]:
    """All angles up to denominator b_max at which func is rational, with values."""
    if b_max < 1:
        raise ValueError("b_max must be positive")
    out = []
    for a, b in iter_angles(b_max):
        result = classify(TrigQuery.of(func, a, b))
        if isinstance(result, Rational):
            out.append((a, b, result.value))
    return out

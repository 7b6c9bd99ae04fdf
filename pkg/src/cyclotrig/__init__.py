"""Exact sin/cos/tan at rational multiples of pi, through cyclotomic fields."""

from .cyclotomic import IntPoly, cyclotomic_poly, divisors, inverse_totient, totient
from .errors import (
    ConductorMismatch,
    CyclotrigError,
    DivisionByZero,
    InvalidArgument,
    InvalidConductor,
    InvariantViolation,
    NotAnAutomorphism,
    NotReal,
    NotRealQuadratic,
    OutOfRange,
    PoleError,
    PrecisionExhausted,
)
from .field import (
    CycloElement,
    change_conductor,
    constant,
    galois_apply,
    inverse,
    is_rational,
    order_as_root_of_unity,
    power,
    zeta,
)
from .numeric import ComplexBall, eval_numeric, sign_of_real, verify_root
from .rational import NormalizedAngle, as_fraction_of_two_pi, normalize_angle, reduce_fraction
from .trig import (
    Algebraic,
    Classification,
    Func,
    Pole,
    Quadratic,
    Rational,
    Surd,
    TrigQuery,
    classify,
    cos_element,
    cos_rationality_witness,
    degree,
    double_angle_point,
    minimal_polynomial,
    niven_table,
    sin_element,
    surd_from_quadratic,
    tan_element,
    tan_rationality_witness,
)

__version__ = "0.1.0"

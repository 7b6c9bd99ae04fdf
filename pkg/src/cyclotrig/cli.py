"""``cyclotrig`` command line interface.

Exit codes: 0 success, 1 a verification check failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Optional, Sequence

from . import numeric, trig
from .cyclotomic import IntPoly, cyclotomic_poly, inverse_totient, totient
from .errors import CyclotrigError, InvariantViolation, PoleError
from .rational import NormalizedAngle, normalize_angle
from .trig import Func, TrigQuery

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- text formats --------------------------------------------------------------


def format_poly(coeffs: Sequence[int], var: str = "x") -> str:
    """Render ascending coefficients as e.g. ``8x^3 - 4x^2 - 4x + 1``."""
    parts = []
    for power in range(len(coeffs) - 1, -1, -1):
        c = coeffs[power]
        if c == 0:
            continue
        mag = abs(c)
        if power == 0:
            body = str(mag)
        else:
            mono = var if power == 1 else f"{var}^{power}"
            body = mono if mag == 1 else f"{mag}{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(parts) if parts else "0"


_ANGLE_RE = re.compile(r"^(-)?(?:(\d+)(\*pi)?|pi)(?:/(\d+))?$")


def parse_angle(text: str) -> tuple[int, int]:
    """Parse ``a/b``, ``a*pi/b``, ``pi/b``, ``0`` (optionally negated) into reduced (a, b).

    The angle always means a*pi/b; the ``pi`` token is optional.
    """
    m = _ANGLE_RE.match(re.sub(r"\s+", "", text))
    if not m:
        raise UsageError(f"cannot parse angle {text!r}; expected a/b, a*pi/b or pi/b")
    neg, num, _, den = m.groups()
    a = int(num) if num is not None else 1
    b = int(den) if den is not None else 1
    if b == 0:
        raise UsageError(f"zero denominator in angle {text!r}")
    q = Fraction(-a if neg else a, b)
    return q.numerator, q.denominator


def render_angle(a: int, b: int) -> str:
    if a == 0:
        return "0"
    sign = "-" if a < 0 else ""
    head = "pi" if abs(a) == 1 else f"{abs(a)}*pi"
    return f"{sign}{head}" + ("" if b == 1 else f"/{b}")


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(re.sub(r"\s+", "", text))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse rational number {text!r}") from None


def _approx(x) -> str:
    return f"{float(numeric.eval_numeric(x, 64).re_mid) + 0.0:.12g}"


# -- records -------------------------------------------------------------------


@dataclass(frozen=True)
class ReportRecord:
    """One classification or witness result, in the shared JSON schema."""

    func: Optional[str] = None
    a: Optional[int] = None
    b: Optional[int] = None
    kind: Optional[str] = None
    value: Optional[str] = None
    surd: Optional[dict] = None
    minpoly: Optional[list] = None
    degree: Optional[int] = None
    witness: Optional[int] = None
    approx: Optional[str] = field(default=None, compare=False)

    def to_dict(self) -> dict[str, Any]:
        return {k: v for k, v in asdict(self).items() if v is not None and k != "approx"}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> ReportRecord:
        data = json.loads(text)
        unknown = set(data) - {f for f in cls.__dataclass_fields__ if f != "approx"}
        if unknown:
            raise ValueError(f"unknown fields {sorted(unknown)}")
        return cls(**data)

    def to_text(self) -> str:
        if self.kind == "pole":
            body = "pole"
        elif self.kind == "rational":
            body = f"rational: {self.value}"
        elif self.kind == "quadratic":
            body = f"quadratic: {self.value}"
        else:
            body = f"algebraic: degree {self.degree}, minpoly {format_poly(self.minpoly)}"
        if self.approx is not None:
            body += f" ≈ {self.approx}"
        return body


def record_for(func: Func, a: int, b: int) -> ReportRecord:
    query = TrigQuery.of(func, a, b)
    result = trig.classify(query)
    base = dict(func=query.func.value, a=a, b=b, kind=result.kind)
    if isinstance(result, trig.Pole):
        return ReportRecord(**base)
    approx = _approx(trig.trig_element(query.func, query.angle))
    if isinstance(result, trig.Rational):
        return ReportRecord(**base, value=str(result.value), degree=1, approx=approx)
    poly = list(result.minpoly.coeffs)
    if isinstance(result, trig.Quadratic):
        s = result.surd
        return ReportRecord(
            **base,
            value=str(s),
            surd={"p": s.p, "q": s.q, "r": s.r, "D": s.D},
            minpoly=poly,
            degree=2,
            approx=approx,
        )
    return ReportRecord(**base, minpoly=poly, degree=result.degree, approx=approx)


def _emit(args, record: ReportRecord, text: str) -> None:
    print(record.to_json() if args.json else text)


def _dump(args, payload: dict, text: str) -> None:
    print(json.dumps(payload, separators=(",", ":")) if args.json else text)


# -- subcommands ---------------------------------------------------------------


def cmd_classify(args) -> int:
    a, b = parse_angle(args.angle)
    record = record_for(Func(args.func), a, b)
    _emit(args, record, record.to_text())
    return EXIT_OK


def cmd_minpoly(args) -> int:
    a, b = parse_angle(args.angle)
    record = record_for(Func(args.func), a, b)
    if record.kind == "pole":
        _emit(args, record, "pole")
        return EXIT_OK
    poly = record.minpoly
    if poly is None:
        q = Fraction(record.value)
        poly = [-q.numerator, q.denominator]
    payload = dict(func=record.func, a=a, b=b, minpoly=poly, degree=len(poly) - 1)
    _dump(args, payload, format_poly(poly))
    return EXIT_OK


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise UsageError(f"expected a positive integer, got {text!r}") from None
    if n < 1:
        raise UsageError(f"expected a positive integer, got {n}")
    return n


def cmd_cyclotomic(args) -> int:
    n = _positive(args.n)
    coeffs = list(cyclotomic_poly(n).coeffs)
    _dump(args, {"n": n, "coeffs": coeffs}, format_poly(coeffs))
    return EXIT_OK


def cmd_totient(args) -> int:
    n = _positive(args.n)
    value = totient(n)
    _dump(args, {"n": n, "totient": value}, str(value))
    return EXIT_OK


def cmd_inverse_totient(args) -> int:
    k = _positive(args.k)
    values = inverse_totient(k)
    _dump(args, {"k": k, "preimage": values}, " ".join(map(str, values)) or "none")
    return EXIT_OK


def cmd_table(args) -> int:
    n = _positive(str(args.max_b))
    limit = None if args.degree_at_most is None else _positive(str(args.degree_at_most))
    func = Func(args.func)
    for a, b in trig.iter_angles(n):
        record = record_for(func, a, b)
        if limit is not None and (record.degree is None or record.degree > limit):
            continue
        text = f"{func.value}({render_angle(a, b)}) = {record.to_text()}"
        _emit(args, record, text)
    return EXIT_OK


def cmd_witness(args) -> int:
    value = parse_fraction(args.value)
    if args.func == "cos":
        if abs(value) > 1:
            raise UsageError(f"cos witness needs |value| <= 1, got {value}")
        w, label = trig.cos_rationality_witness(value), "d"
    else:
        w, label = trig.tan_rationality_witness(value), "b"
    record = ReportRecord(func=args.func, value=str(value), witness=w)
    _emit(args, record, "none" if w is None else f"{label} = {w}")
    return EXIT_OK


# -- verify --------------------------------------------------------------------


class _Suite:
    def __init__(self, name: str):
        self.name, self.passed, self.total = name, 0, 0
        self.failure: Optional[str] = None

    def check(self, ok: bool, detail: str) -> None:
        self.total += 1
        if ok:
            self.passed += 1
        elif self.failure is None:
            self.failure = detail


def _suite_pythagorean(max_b: int) -> _Suite:
    suite = _Suite("pythagorean")
    for a, b in trig.iter_angles(max_b):
        angle = normalize_angle(a, b)
        s, c = trig.sin_element(angle), trig.cos_element(angle)
        n = math.lcm(s.conductor, c.conductor)
        s, c = s.to_conductor(n), c.to_conductor(n)
        suite.check(s * s + c * c == 1, f"sin^2 + cos^2 != 1 at {render_angle(a, b)}")
    return suite


def _suite_degree_law(max_b: int) -> _Suite:
    suite = _Suite("degree-law")
    for d in range(1, max_b + 1):
        expected = 1 if d <= 2 else totient(d) // 2
        for c in range(d):
            if math.gcd(c, d) != 1:
                continue
            got = trig.degree(trig.cos_element(NormalizedAngle.from_fraction(Fraction(2 * c, d))))
            suite.check(got == expected, f"deg cos(2*pi*{c}/{d}) = {got}, expected {expected}")
    return suite


def _suite_niven(max_b: int) -> _Suite:
    suite = _Suite("niven-fact1-fact2")
    # {1,2,3,4,6} is only necessary; these are the exact denominator sets
    exact = {Func.SIN: {1, 2, 6}, Func.COS: {1, 2, 3}, Func.TAN: {1, 4}}
    for func in Func:
        for a, b in trig.iter_angles(max_b):
            result = trig.classify(TrigQuery.of(func, a, b))
            if isinstance(result, trig.Pole):
                suite.check(func is Func.TAN and b == 2, f"unexpected pole {func.value}({a}/{b})")
                continue
            is_rat = isinstance(result, trig.Rational)
            where = f"{func.value}({render_angle(a, b)})"
            suite.check(not is_rat or b in {1, 2, 3, 4, 6}, f"{where} rational with b={b}")
            suite.check(is_rat == (b in exact[func]), f"{where} rational={is_rat}")
            if not is_rat:
                continue
            if func is Func.TAN:
                w = trig.tan_rationality_witness(result.value)
                suite.check(w == b, f"tan witness of {where} = {w}")
            else:
                w = trig.cos_rationality_witness(result.value)
                suite.check(w is not None, f"cos witness of {where} absent")
    return suite


def _suite_numeric(max_b: int, precision: int) -> _Suite:
    suite = _Suite("minpoly-numeric")
    for func in Func:
        for a, b in trig.iter_angles(max_b):
            query = TrigQuery.of(func, a, b)
            try:
                x = trig.trig_element(func, query.angle)
            except PoleError:
                continue
            p = trig.minimal_polynomial(x)
            suite.check(
                numeric.verify_root(p, x, precision) and p(x).is_zero(),
                f"minpoly of {func.value}({render_angle(a, b)}) does not vanish",
            )
            r = x.as_rational()
            if r is not None:
                sign = (r > 0) - (r < 0)
                suite.check(numeric.sign_of_real(x) == sign, f"sign mismatch at {a}/{b}")
    return suite


def _to_fraction(x) -> Fraction:
    num, den = x.as_integer_ratio()
    return Fraction(int(num), int(den))


QUADRATIC_IDENTITIES = (
    (Func.COS, 1, 5, trig.Surd(1, 1, 4, 5)),
    (Func.SIN, 1, 10, trig.Surd(-1, 1, 4, 5)),
    (Func.TAN, 1, 8, trig.Surd(-1, 1, 1, 2)),
    (Func.TAN, 1, 12, trig.Surd(2, -1, 1, 3)),
)


def _suite_identities(precision: int) -> _Suite:
    suite = _Suite("quadratic-identities")
    tol = Fraction(1, 10**30) if precision >= 128 else Fraction(1, 2 ** (precision - 10))
    for func, a, b, surd in QUADRATIC_IDENTITIES:
        query = TrigQuery.of(func, a, b)
        where = f"{func.value}({render_angle(a, b)})"
        result = trig.classify(query)
        suite.check(result == trig.Quadratic(surd), f"{where} classified as {result}")
        ball = numeric.eval_numeric(trig.trig_element(func, query.angle), precision)
        exact = Fraction(surd.to_decimal(60))
        err = abs(_to_fraction(ball.re_mid) - exact) + abs(_to_fraction(ball.im_mid))
        suite.check(err < tol, f"{where} numeric error {float(err):.3e} exceeds {float(tol):.1e}")
    return suite


def cmd_verify(args) -> int:
    max_b = _positive(str(args.max_b))
    precision = args.precision
    if precision < 32:
        raise UsageError("--precision must be at least 32")
    suites = [
        _suite_pythagorean(max_b),
        _suite_degree_law(max_b),
        _suite_niven(max_b),
        _suite_numeric(max_b, precision),
        _suite_identities(precision),
    ]
    failed = [s for s in suites if s.failure is not None]
    for s in suites:
        status = "ok" if s.failure is None else "FAIL"
        if args.json:
            print(json.dumps({"suite": s.name, "passed": s.passed, "total": s.total}, separators=(",", ":")))
        else:
            print(f"{s.name}: {s.passed}/{s.total} passed [{status}]")
    if failed:
        print(f"first counterexample: {failed[0].failure}", file=sys.stderr if args.json else sys.stdout)
        return EXIT_FAIL
    if not args.json:
        print("all suites pass")
    return EXIT_OK


# -- parser --------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let "-1/3" and "-pi/4" through as positional angles
        self._negative_number_matcher = re.compile(r"^-\s*(\d|pi)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cyclotrig", description=__doc__.splitlines()[0])
    json_flag = _Parser(add_help=False)
    json_flag.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    funcs = [f.value for f in Func]
    p = sub.add_parser("classify", parents=[json_flag], help="classify sin/cos/tan at a*pi/b")
    p.add_argument("func", choices=funcs)
    p.add_argument("angle", help="a/b, a*pi/b or pi/b (always a multiple of pi)")
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("minpoly", parents=[json_flag], help="integer minimal polynomial")
    p.add_argument("func", choices=funcs)
    p.add_argument("angle")
    p.set_defaults(handler=cmd_minpoly)

    p = sub.add_parser("cyclotomic", parents=[json_flag], help="cyclotomic polynomial Phi_n")
    p.add_argument("n")
    p.set_defaults(handler=cmd_cyclotomic)

    p = sub.add_parser("totient", parents=[json_flag], help="Euler's phi(n)")
    p.add_argument("n")
    p.set_defaults(handler=cmd_totient)

    p = sub.add_parser("inverse-totient", parents=[json_flag], help="all n with phi(n) = k")
    p.add_argument("k")
    p.set_defaults(handler=cmd_inverse_totient)

    p = sub.add_parser("table", parents=[json_flag], help="sweep angles up to a denominator")
    p.add_argument("func", choices=funcs)
    p.add_argument("--max-b", type=int, required=True)
    p.add_argument("--degree-at-most", type=int, default=None)
    p.set_defaults(handler=cmd_table)

    p = sub.add_parser("witness", parents=[json_flag], help="rationality witness for a value")
    p.add_argument("func", choices=["cos", "tan"])
    p.add_argument("value")
    p.set_defaults(handler=cmd_witness)

    p = sub.add_parser("verify", parents=[json_flag], help="run the invariant suites")
    p.add_argument("--max-b", type=int, default=24)
    p.add_argument("--precision", type=int, default=128)
    p.set_defaults(handler=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.handler(args)
    except InvariantViolation:
        raise
    except (UsageError, CyclotrigError) as exc:
        print(f"cyclotrig: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

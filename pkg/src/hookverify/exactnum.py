"""Exact arithmetic over Q and Q(t).

Rationals (``BigRat``) are ``gmpy2.mpq`` when available, else
:class:`fractions.Fraction`; the two compare and hash alike and both are
accepted as inputs.  On top of them sit dense univariate polynomials
(:class:`Poly`) and reduced rational functions (:class:`RatFunc`) in a single
indeterminate ``t``.  Every value is kept in a
canonical form so that equality is plain structural comparison.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Union

__all__ = [
    "BigRat",
    "Poly",
    "RatFunc",
    "PoleError",
    "ParseError",
    "rat_add",
    "rat_mul",
    "rat_neg",
    "rat_div",
    "poly_add",
    "poly_mul",
    "poly_scale",
    "poly_gcd",
    "rf_make",
    "rf_add",
    "rf_mul",
    "rf_pow",
    "rf_eval",
    "rf_format",
    "rf_parse",
    "as_ratfunc",
    "parse_rational",
]

try:
    from gmpy2 import mpq as BigRat
except ImportError:  # pragma: no cover
    BigRat = Fraction

_RATIONALS = (int, Fraction, BigRat)
_ZERO = BigRat(0)
_ONE = BigRat(1)


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at a root of its denominator."""


class ParseError(ValueError):
    """Malformed rational-function text.  ``position`` is a 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


# -- rationals ---------------------------------------------------------------

def rat_add(a: BigRat, b: BigRat) -> BigRat:
    return BigRat(a) + BigRat(b)


def rat_mul(a: BigRat, b: BigRat) -> BigRat:
    return BigRat(a) * BigRat(b)


def rat_neg(a: BigRat) -> BigRat:
    return -BigRat(a)


def rat_div(a: BigRat, b: BigRat) -> BigRat:
    b = BigRat(b)
    if not b:
        raise ZeroDivisionError("rational division by zero")
    return BigRat(a) / b


def parse_rational(text: str) -> BigRat:
    """Parse ``"p"`` or ``"p/q"`` (optionally signed) into a BigRat."""
    m = re.fullmatch(r"\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?", text)
    if m is None:
        raise ValueError(f"not a rational number: {text!r}")
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return BigRat(int(m.group(1)), den)


# -- polynomials -------------------------------------------------------------

Scalar = Union[int, Fraction, BigRat]


class Poly:
    """Dense polynomial in ``t`` with rational coefficients.

    ``coeffs[i]`` is the coefficient of ``t**i``; trailing zeros are always
    stripped, so the zero polynomial has ``coeffs == ()``.  Instances are
    treated as immutable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [c if type(c) is BigRat else BigRat(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, coeffs: list) -> "Poly":
        # caller guarantees BigRat entries; only trimming is done here
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        p = object.__new__(cls)
        p.coeffs = tuple(coeffs)
        return p

    @classmethod
    def constant(cls, c: Scalar) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: Scalar = 1) -> "Poly":
        return cls([0] * degree + [c])

    @classmethod
    def linear(cls, a: Scalar, b: Scalar) -> "Poly":
        """The polynomial ``a*t + b``."""
        return cls((b, a))

    @property
    def degree(self) -> float:
        """Index of the leading coefficient; ``-math.inf`` for zero."""
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    @property
    def lead(self) -> BigRat:
        return self.coeffs[-1] if self.coeffs else _ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == 1

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, _RATIONALS):
            return self.coeffs == Poly.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Poly", self.coeffs))

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    def __neg__(self) -> "Poly":
        return Poly._raw([-c for c in self.coeffs])

    def __add__(self, other: "Poly | Scalar") -> "Poly":
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly._raw(out)

    __radd__ = __add__

    def __sub__(self, other: "Poly | Scalar") -> "Poly":
        return self + (-_as_poly(other))

    def __rsub__(self, other: Scalar) -> "Poly":
        return _as_poly(other) - self

    def __mul__(self, other: "Poly | Scalar") -> "Poly":
        if isinstance(other, _RATIONALS):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly._raw(out)

    __rmul__ = __mul__

    def scale(self, s: Scalar) -> "Poly":
        s = BigRat(s)
        if not s:
            return Poly()
        return Poly._raw([c * s for c in self.coeffs])

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative power of a polynomial; use RatFunc")
        result, base = Poly((1,)), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.coeffs
        dn = len(d) - 1
        if len(rem) <= dn:
            return Poly(), self
        inv_lead = 1 / d[-1]
        quot = [_ZERO] * (len(rem) - dn)
        for k in range(len(rem) - 1, dn - 1, -1):
            c = rem[k]
            if not c:
                continue
            q = c * inv_lead
            quot[k - dn] = q
            base = k - dn
            for j in range(dn):
                rem[base + j] -= q * d[j]
            rem[k] = _ZERO
        return Poly._raw(quot), Poly._raw(rem[:dn])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        if other.is_one():
            return self
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def monic(self) -> "Poly":
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        inv = 1 / self.coeffs[-1]
        return Poly._raw([c * inv for c in self.coeffs])

    def __call__(self, x: Scalar) -> BigRat:
        x = BigRat(x)
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def _as_poly(x: "Poly | Scalar") -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, _RATIONALS):
        return Poly.constant(x)
    raise TypeError(f"cannot interpret {type(x).__name__} as a polynomial")


def poly_add(p: Poly, q: Poly) -> Poly:
    return p + q


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def poly_scale(p: Poly, s: Scalar) -> Poly:
    return p.scale(s)


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd over Q by the Euclidean algorithm.

    Remainders are made monic at every step, which keeps coefficient sizes
    in check for the degrees encountered here.
    """
    if not p and not q:
        raise ValueError("gcd of two zero polynomials is undefined")
    a, b = p.monic(), q.monic()
    if a.degree < b.degree:
        a, b = b, a
    while b:
        if b.degree == 0:
            return Poly((1,))
        a, b = b, (a % b).monic()
    return a


# -- rational functions ------------------------------------------------------

class RatFunc:
    """Reduced fraction ``num/den`` of polynomials with a monic denominator.

    Build through :func:`rf_make` (or the arithmetic operators); the bare
    constructor trusts its arguments to be canonical already.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        self.num = num
        self.den = den

    @classmethod
    def const(cls, c: Scalar) -> "RatFunc":
        return cls(Poly.constant(c), _POLY_ONE)

    @classmethod
    def poly(cls, p: Poly) -> "RatFunc":
        return cls(p, _POLY_ONE)

    def is_zero(self) -> bool:
        return not self.num

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def is_constant(self) -> bool:
        return self.den.is_one() and self.num.is_constant()

    def constant_value(self) -> BigRat:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num.coeffs[0] if self.num.coeffs else _ZERO

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (Poly,) + _RATIONALS):
            return self == as_ratfunc(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("RatFunc", self.num.coeffs, self.den.coeffs))

    def __repr__(self) -> str:
        return f"RatFunc({rf_format(self)!r})"

    def __str__(self) -> str:
        return rf_format(self)

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __add__(self, other) -> "RatFunc":
        return rf_add(self, as_ratfunc(other))

    __radd__ = __add__

    def __sub__(self, other) -> "RatFunc":
        return rf_add(self, -as_ratfunc(other))

    def __rsub__(self, other) -> "RatFunc":
        return rf_add(as_ratfunc(other), -self)

    def __mul__(self, other) -> "RatFunc":
        return rf_mul(self, as_ratfunc(other))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        return rf_mul(self, rf_pow(as_ratfunc(other), -1))

    def __rtruediv__(self, other) -> "RatFunc":
        return rf_mul(as_ratfunc(other), rf_pow(self, -1))

    def __pow__(self, e: int) -> "RatFunc":
        return rf_pow(self, e)

    def __call__(self, point: Scalar) -> BigRat:
        return rf_eval(self, point)


_POLY_ONE = Poly((1,))


def as_ratfunc(x: "RatFunc | Poly | Scalar") -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, Poly):
        return RatFunc(x, _POLY_ONE)
    if isinstance(x, _RATIONALS):
        return RatFunc.const(x)
    raise TypeError(f"cannot interpret {type(x).__name__} as a rational function")


def rf_make(num: Poly, den: Poly) -> RatFunc:
    """Canonical reduced form of ``num/den``."""
    num, den = _as_poly(num), _as_poly(den)
    if not den:
        raise ZeroDivisionError("rational function with zero denominator")
    if not num:
        return RatFunc(Poly(), _POLY_ONE)
    if den.degree > 0 and num.degree > 0:
        g = poly_gcd(num, den)
        if not g.is_one():
            num, den = num.exact_div(g), den.exact_div(g)
    lc = den.lead
    if lc != 1:
        inv = 1 / lc
        num, den = num.scale(inv), den.scale(inv)
    return RatFunc(num, den)


def _gcd_or_one(p: Poly, q: Poly) -> Poly:
    if p.degree <= 0 or q.degree <= 0:
        return _POLY_ONE
    return poly_gcd(p, q)


def rf_mul(f: RatFunc, g: RatFunc) -> RatFunc:
    if not f.num or not g.num:
        return RatFunc(Poly(), _POLY_ONE)
    # cross-cancel before multiplying; denominators stay monic
    g1 = _gcd_or_one(f.num, g.den)
    g2 = _gcd_or_one(g.num, f.den)
    num = f.num.exact_div(g1) * g.num.exact_div(g2)
    den = f.den.exact_div(g2) * g.den.exact_div(g1)
    return RatFunc(num, den)


def rf_add(f: RatFunc, g: RatFunc) -> RatFunc:
    if not f.num:
        return g
    if not g.num:
        return f
    if f.den == g.den:
        return rf_make(f.num + g.num, f.den)
    d = _gcd_or_one(f.den, g.den)
    fd, gd = f.den.exact_div(d), g.den.exact_div(d)
    num = f.num * gd + g.num * fd
    den = f.den * gd
    if not num:
        return RatFunc(Poly(), _POLY_ONE)
    # only factors of d can survive in common with the new numerator
    h = _gcd_or_one(num, d)
    if not h.is_one():
        num, den = num.exact_div(h), den.exact_div(h)
    return RatFunc(num, den)


def rf_reciprocal(f: RatFunc) -> RatFunc:
    if not f.num:
        raise ZeroDivisionError("reciprocal of the zero rational function")
    inv = 1 / f.num.lead
    return RatFunc(f.den.scale(inv), f.num.scale(inv))


def rf_pow(f: RatFunc, e: int) -> RatFunc:
    """Integer power; negative exponents invert first.  ``0**e`` with e <= 0 fails."""
    if not f.num and e <= 0:
        raise ZeroDivisionError(f"zero rational function raised to power {e}")
    if e < 0:
        f, e = rf_reciprocal(f), -e
    # coprime, monic-denominator inputs stay that way under powering
    return RatFunc(f.num ** e, f.den ** e)


def rf_eval(f: RatFunc, point: Scalar) -> BigRat:
    d = f.den(point)
    if not d:
        raise PoleError(f"{rf_format(f)} has a pole at t = {BigRat(point)}")
    return f.num(point) / d


# -- text form ---------------------------------------------------------------

def format_poly(p: Poly) -> str:
    if not p.coeffs:
        return "0"
    parts: list[str] = []
    for deg in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[deg]
        if not c:
            continue
        mag = abs(c)
        if deg == 0:
            body = str(mag)
        else:
            var = "t" if deg == 1 else f"t^{deg}"
            body = var if mag == 1 else f"{mag}*{var}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(parts)


def rf_format(f: RatFunc) -> str:
    """Canonical text: expanded numerator, then ``/ (den)`` unless den is 1."""
    if f.den.is_one():
        return format_poly(f.num)
    return f"({format_poly(f.num)}) / ({format_poly(f.den)})"


_TOKEN = re.compile(r"\s*(?:(\d+)|(t)|([-+*/^()]))")


class _Parser:
    """Recursive descent over ``expr := term (('+'|'-') term)*`` and friends."""

    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if m is None:
                bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
                raise ParseError(f"unexpected character {text[bad]!r}", bad)
            start = m.start(m.lastindex)
            if m.group(1):
                self.tokens.append(("int", m.group(1), start))
            elif m.group(2):
                self.tokens.append(("t", "t", start))
            else:
                self.tokens.append(("op", m.group(3), start))
            pos = m.end()
        self.i = 0

    def peek(self) -> tuple[str, str, int] | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self) -> tuple[str, str, int]:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", len(self.text))
        self.i += 1
        return tok

    def at_op(self, *ops: str) -> bool:
        tok = self.peek()
        return tok is not None and tok[0] == "op" and tok[1] in ops

    def parse(self) -> RatFunc:
        if not self.tokens:
            raise ParseError("empty expression", 0)
        value = self.expr()
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return value

    def expr(self) -> RatFunc:
        value = self.term()
        while self.at_op("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> RatFunc:
        value = self.factor()
        while self.at_op("*", "/"):
            _, op, pos = self.take()
            rhs = self.factor()
            if op == "*":
                value = value * rhs
            else:
                if rhs.is_zero():
                    raise ParseError("division by zero", pos)
                value = value / rhs
        return value

    def factor(self) -> RatFunc:
        if self.at_op("-"):
            self.take()
            return -self.factor()
        if self.at_op("+"):
            self.take()
            return self.factor()
        return self.power()

    def power(self) -> RatFunc:
        base = self.atom()
        if self.at_op("^"):
            self.take()
            kind, val, pos = self.take()
            if kind != "int":
                raise ParseError("expected a nonnegative integer exponent", pos)
            e = int(val)
            if e == 0 and base.is_zero():
                raise ParseError("0^0 is undefined", pos)
            base = rf_pow(base, e)
        return base

    def atom(self) -> RatFunc:
        kind, val, pos = self.take()
        if kind == "int":
            return RatFunc.const(int(val))
        if kind == "t":
            return RatFunc(Poly((0, 1)), _POLY_ONE)
        if val == "(":
            inner = self.expr()
            tok = self.take()
            if tok[1] != ")":
                raise ParseError("expected ')'", tok[2])
            return inner
        raise ParseError(f"unexpected {val!r}", pos)


def rf_parse(text: str) -> RatFunc:
    """Parse the textual grammar produced by :func:`rf_format` (and a superset)."""
    return _Parser(text).parse()

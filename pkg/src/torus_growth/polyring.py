"""Exact univariate polynomials and rational functions over the integers.

Polynomials are dense, lowest degree first, with Python ints as
coefficients. Rational functions are kept in a canonical reduced form so
that equality of two functions is plain equality of coefficient tuples.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence, Union


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in self.coeffs))

    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "Polynomial":
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __call__(self, t):
        acc = 0 * t
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return poly_add(self, -other)

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return poly_add(other, -self)

    def __mul__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, r: int):
        return poly_pow(self, r)

    def content(self) -> int:
        return reduce(gcd, self.coeffs, 0)

    def primitive(self) -> "Polynomial":
        """Divide out the content; the sign is left alone."""
        c = self.content()
        if c in (0, 1):
            return self
        return Polynomial(tuple(x // c for x in self.coeffs))

    def __str__(self) -> str:
        return format_poly(self)


def _as_poly(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, int):
        return Polynomial((x,))
    return NotImplemented


T = Polynomial((0, 1))
ONE = Polynomial((1,))
ZERO = Polynomial(())


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    n = max(len(a.coeffs), len(b.coeffs))
    return Polynomial(tuple(a[k] + b[k] for k in range(n)))


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    if a.is_zero() or b.is_zero():
        return ZERO
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x == 0:
            continue
        for j, y in enumerate(b.coeffs):
            out[i + j] += x * y
    return Polynomial(tuple(out))


def poly_pow(a: Polynomial, r: int) -> Polynomial:
    if r < 0:
        raise ValueError("negative exponent")
    result, base = ONE, a
    while r:
        if r & 1:
            result = poly_mul(result, base)
        r >>= 1
        if r:
            base = poly_mul(base, base)
    return result


def poly_scale(a: Polynomial, c: int) -> Polynomial:
    return Polynomial(tuple(c * x for x in a.coeffs))


def pseudo_remainder(a: Polynomial, b: Polynomial) -> Polynomial:
    """Remainder of lc(b)^(deg a - deg b + 1) * a divided by b, over Z."""
    if b.is_zero():
        raise ZeroDivisionError("pseudo-remainder by zero polynomial")
    db, lb = b.degree, b.lead
    r = list(a.coeffs)
    e = max(a.degree - db + 1, 0)
    while r and len(r) - 1 >= db:
        top, shift = r[-1], len(r) - 1 - db
        r = [lb * x for x in r]
        for j, y in enumerate(b.coeffs):
            r[shift + j] -= top * y
        r = list(_trim(r))
        e -= 1
    return Polynomial(tuple(lb**e * x for x in r))


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Greatest common divisor over Q, primitive with positive leading coefficient.

    Uses the primitive polynomial remainder sequence so coefficients stay
    integral without blowing up.
    """
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    a, b = a.primitive(), b.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        a, b = b, pseudo_remainder(a, b).primitive()
    if a.lead < 0:
        a = -a
    return a


def poly_divmod_exact(a: Polynomial, b: Polynomial) -> Polynomial:
    """Quotient a / b over Z; raises ArithmeticError unless b divides a exactly."""
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    r = list(a.coeffs)
    q = [0] * max(a.degree - b.degree + 1, 0)
    lb = b.lead
    for shift in range(len(q) - 1, -1, -1):
        top = r[shift + b.degree]
        if top % lb:
            raise ArithmeticError("inexact polynomial division")
        c = top // lb
        q[shift] = c
        if c:
            for j, y in enumerate(b.coeffs):
                r[shift + j] -= c * y
    if any(r):
        raise ArithmeticError("inexact polynomial division")
    return Polynomial(tuple(q))


def reciprocal_polynomial(a: Polynomial) -> Polynomial:
    """t^deg(a) * a(1/t)."""
    if a.is_zero():
        raise ValueError("reciprocal of the zero polynomial")
    return Polynomial(tuple(reversed(a.coeffs)))


@dataclass(frozen=True)
class RationalFunction:
    """num/den in lowest terms, integer coefficients with joint content 1,
    den with positive leading coefficient. Build through ``make``."""

    num: Polynomial
    den: Polynomial

    @classmethod
    def make(cls, num, den=ONE) -> "RationalFunction":
        num, den = _as_poly(num), _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            return cls(ZERO, ONE)
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = poly_divmod_exact(num, g), poly_divmod_exact(den, g)
        c = gcd(num.content(), den.content())
        if den.lead < 0:
            c = -c
        if c != 1:
            num = Polynomial(tuple(x // c for x in num.coeffs))
            den = Polynomial(tuple(x // c for x in den.coeffs))
        return cls(num, den)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other):
        return rf_combine(self, _as_rf(other), "add")

    __radd__ = __add__

    def __sub__(self, other):
        return rf_combine(self, _as_rf(other), "sub")

    def __rsub__(self, other):
        return rf_combine(_as_rf(other), self, "sub")

    def __mul__(self, other):
        return rf_combine(self, _as_rf(other), "mul")

    __rmul__ = __mul__

    def __truediv__(self, other):
        return rf_combine(self, _as_rf(other), "div")

    def __rtruediv__(self, other):
        return rf_combine(_as_rf(other), self, "div")

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __pow__(self, r: int):
        if r < 0:
            return RationalFunction.make(self.den**-r, self.num**-r)
        return RationalFunction.make(self.num**r, self.den**r)

    def __call__(self, t):
        return self.num(t) / self.den(t)

    def __str__(self) -> str:
        return f"({format_poly(self.num)}) / ({format_poly(self.den)})"


def _as_rf(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    return RationalFunction.make(_as_poly(x))


def rf_combine(a: RationalFunction, b: RationalFunction, op: str) -> RationalFunction:
    if op == "add":
        return RationalFunction.make(a.num * b.den + b.num * a.den, a.den * b.den)
    if op == "sub":
        return RationalFunction.make(a.num * b.den - b.num * a.den, a.den * b.den)
    if op == "mul":
        return RationalFunction.make(a.num * b.num, a.den * b.den)
    if op == "div":
        if b.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction.make(a.num * b.den, a.den * b.num)
    raise ValueError(f"unknown operation {op!r}")


class NonIntegralSeries(ArithmeticError):
    pass


def series_expand(
    f: RationalFunction, N: int, integral: bool = True
) -> list[int] | list[Fraction]:
    """Taylor coefficients a_0..a_N of f at t = 0.

    Solves den * sum(a_n t^n) = num term by term. With ``integral`` the
    coefficients must come out as integers, otherwise NonIntegralSeries.
    """
    if N < 0:
        raise ValueError("N must be non-negative")
    q0 = f.den[0]
    if q0 == 0:
        raise ZeroDivisionError("denominator vanishes at t = 0")
    den = f.den.coeffs
    out: list = []
    for n in range(N + 1):
        s = f.num[n]
        for k in range(1, min(n, len(den) - 1) + 1):
            s -= den[k] * out[n - k]
        a = Fraction(s, q0) if isinstance(s, int) else s / q0
        if integral:
            if a.denominator != 1:
                raise NonIntegralSeries(f"coefficient a_{n} = {a} is not an integer")
            a = a.numerator
        out.append(a)
    return out


def format_poly(a: Polynomial, var: str = "t") -> str:
    if a.is_zero():
        return "0"
    parts = []
    for k, c in enumerate(a.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    s = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s


# serialization: decimal strings, lowest degree first

def poly_to_json(a: Polynomial) -> list[str]:
    return [str(c) for c in a.coeffs]


def poly_from_json(data: Sequence[Union[str, int]]) -> Polynomial:
    return Polynomial(tuple(int(c) for c in data))


def rf_to_json(f: RationalFunction) -> dict:
    return {"num": poly_to_json(f.num), "den": poly_to_json(f.den)}


def rf_from_json(data: dict) -> RationalFunction:
    return RationalFunction.make(poly_from_json(data["num"]), poly_from_json(data["den"]))


def dumps(obj) -> str:
    return json.dumps(obj, indent=2)

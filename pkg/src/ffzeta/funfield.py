r"""The rational function field F(t) and its valuation at infinity.

Polynomials in t over a finite field F sit inside the Laurent series field
F((1/t)); the valuation there is v(f) = -deg f, extended to fractions by
v(num/den) = deg den - deg num and to 0 by v(0) = +infinity.  The induced
absolute value is |x| = q**(-v(x)) with q = |F|.  Working with eigenvalues
in extensions forces rational exponents, so absolute values are carried
around as exact base-q exponents (AbsExp) rather than floats.

RatFun is a reduced fraction with a monic denominator, which makes equality
of torus points (fractions mod F[t]) a plain structural comparison.
FracField wraps RatFun as a coefficient domain, with hooks that let the
resultant routine clear denominators into F[t] and divide back out.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import errors
from .polycore import Domain, Poly, poly_gcd, polyring

INFINITY = math.inf

PolyT = Poly


@dataclass(frozen=True)
class AbsExp:
    """An absolute value, stored as its exact base-q exponent.

    The value is q**exponent, except when is_zero is set, which encodes
    |0| = 0 (exponent -infinity, unrepresentable as a Fraction).
    """

    is_zero: bool
    exponent: Fraction

    @classmethod
    def zero(cls) -> "AbsExp":
        return cls(True, Fraction(0))

    @classmethod
    def of(cls, exponent) -> "AbsExp":
        return cls(False, Fraction(exponent))

    def __le__(self, other: "AbsExp") -> bool:
        if self.is_zero:
            return True
        if other.is_zero:
            return False
        return self.exponent <= other.exponent

    def __lt__(self, other: "AbsExp") -> bool:
        return self <= other and self != other


class RatFun:
    """Element of F(t): num/den with den monic and gcd(num, den) = 1."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field, num: Poly, den: Poly):
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            den = Poly.const(field, field.one)
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
            lc = den.lc
            if lc != field.one:
                c = field.inv(lc)
                num = num.scale(c)
                den = den.scale(c)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("RatFun is immutable")

    @classmethod
    def from_poly(cls, field, num: Poly) -> "RatFun":
        return cls(field, num, Poly.const(field, field.one))

    def __bool__(self):
        return bool(self.num)

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __add__(self, other):
        return RatFun(
            self.field,
            self.num * other.den + other.num * self.den,
            self.den * other.den,
        )

    def __sub__(self, other):
        return RatFun(
            self.field,
            self.num * other.den - other.num * self.den,
            self.den * other.den,
        )

    def __neg__(self):
        return RatFun(self.field, -self.num, self.den)

    def __mul__(self, other):
        return RatFun(self.field, self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if not other.num:
            raise ZeroDivisionError("division by zero rational function")
        return RatFun(self.field, self.num * other.den, self.den * other.num)

    def frac_part(self) -> "RatFun":
        """Representative mod F[t]: numerator reduced mod the denominator."""
        if self.num.degree < self.den.degree:
            return self
        return RatFun(self.field, self.num % self.den, self.den)

    def __eq__(self, other):
        return (
            isinstance(other, RatFun)
            and self.field == other.field
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((RatFun, self.num.coeffs, self.den.coeffs))

    def __repr__(self):
        if self.is_polynomial():
            return f"RatFun({self.num.format('t')})"
        return f"RatFun(({self.num.format('t')})/({self.den.format('t')}))"


class FracField(Domain):
    """F(t) as a coefficient domain for polynomials in X."""

    is_field = True

    def __init__(self, field):
        self.field = field
        self.zero = RatFun.from_poly(field, Poly(field))
        self.one = RatFun.from_poly(field, Poly.const(field, field.one))

    def is_zero(self, a):
        return not a

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        return a / b

    def inv(self, a):
        return self.one / a

    def from_int(self, n):
        return RatFun.from_poly(self.field, Poly.const(self.field, self.field.from_int(n)))

    # Hooks used by polycore.resultant to work in F[t] instead of F(t).

    def clear_denominators(self, f: Poly):
        """Rewrite f with coefficients in F[t]: returns (f * d, d) pieces.

        The result polynomial lives over the PolyRing(F) domain and equals
        d * f coefficient-wise, where d is the lcm of the denominators.
        """
        ring = polyring(self.field)
        d = Poly.const(self.field, self.field.one)
        for c in f.coeffs:
            if c and c.den.degree > 0:
                g = poly_gcd(d, c.den)
                d = d * c.den.exact_div(g) if g.degree > 0 else d * c.den
        coeffs = []
        for c in f.coeffs:
            coeffs.append(c.num * d.exact_div(c.den) if c else Poly(self.field))
        return Poly(ring, coeffs), d

    def from_fraction(self, num: Poly, den: Poly) -> RatFun:
        return RatFun(self.field, num, den)

    def __eq__(self, other):
        return isinstance(other, FracField) and self.field == other.field

    def __hash__(self):
        return hash((FracField, self.field))

    def __repr__(self):
        return f"FracField({self.field!r})"


def valuation(x):
    """Valuation at infinity: -deg on F[t], deg den - deg num on F(t)."""
    if isinstance(x, RatFun):
        if not x.num:
            return INFINITY
        return x.den.degree - x.num.degree
    if isinstance(x, Poly):
        if not x:
            return INFINITY
        return -x.degree
    raise TypeError(f"no valuation for {type(x).__name__}")


def abs_value(field, x) -> AbsExp:
    """|x| as an exact base-q exponent; |x| = q**(-v(x))."""
    v = valuation(x)
    if v is INFINITY:
        return AbsExp.zero()
    return AbsExp.of(-v)


def redunit(x):
    """Leading unit: the coefficient of the top Laurent term of x at infinity.

    For a polynomial this is the leading coefficient; for a fraction it is
    lc(num)/lc(den), which is lc(num) in the monic-denominator normal form.
    """
    if isinstance(x, RatFun):
        if not x.num:
            raise errors.ZeroInputError("zero has no leading unit")
        return x.field.div(x.num.lc, x.den.lc)
    if isinstance(x, Poly):
        return x.lc
    raise TypeError(f"no leading unit for {type(x).__name__}")

"""Dense univariate polynomials over an exact field.

Coefficients are stored ascending with no trailing zeros, so structural
equality is value equality.  The zero polynomial has an empty coefficient
tuple and its degree is the NEG_INF sentinel (never -1), which keeps degree
comparisons total in the order-at-infinity bookkeeping.
"""

from __future__ import annotations

from fractions import Fraction

from . import _intpoly
from .errors import FieldMismatchError, PreconditionError
from .fields import Field, QQ

NEG_INF = float("-inf")


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs):
        cs = [field(c) if isinstance(c, int) else c for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls(field, ())

    @classmethod
    def one(cls, field: Field) -> "Poly":
        return cls(field, (field.one,))

    @classmethod
    def x(cls, field: Field) -> "Poly":
        return cls(field, (field.zero, field.one))

    @classmethod
    def constant(cls, field: Field, c) -> "Poly":
        return cls(field, (field(c),))

    # -- basic structure ---------------------------------------------------

    @property
    def degree(self):
        """Degree, or NEG_INF for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self):
        if not self.coeffs:
            raise PreconditionError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int):
        """Coefficient of x^i (zero beyond the stored length)."""
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        _same_field(self, other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.field,
                    [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other: "Poly") -> "Poly":
        _same_field(self, other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.field,
                    [self.coeff(i) - other.coeff(i) for i in range(n)])

    def __neg__(self) -> "Poly":
        return Poly(self.field, [-c for c in self.coeffs])

    def __mul__(self, other: "Poly") -> "Poly":
        _same_field(self, other)
        if self.is_zero or other.is_zero:
            return Poly.zero(self.field)
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(self.field, out)

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise PreconditionError("negative polynomial power")
        result = Poly.one(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> "Poly":
        c = self.field(c) if isinstance(c, int) else c
        return Poly(self.field, [a * c for a in self.coeffs])

    def shift_up(self, k: int) -> "Poly":
        """Multiply by x^k."""
        if self.is_zero:
            return self
        return Poly(self.field, (self.field.zero,) * k + self.coeffs)

    # -- evaluation and calculus -------------------------------------------

    def __call__(self, a):
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(self.field,
                    [c * i for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "Poly":
        if self.is_zero:
            raise PreconditionError("cannot normalize the zero polynomial")
        lead = self.lc
        if lead == self.field.one:
            return self
        return Poly(self.field, [c / lead for c in self.coeffs])

    def taylor_shift(self, a) -> "Poly":
        """f(x + a), by Horner composition with (x + a)."""
        xa = Poly(self.field, (self.field(a) if isinstance(a, int) else a,
                               self.field.one))
        return poly_compose(self, xa)

    def __repr__(self):
        return f"Poly({self.field!r}, {list(self.coeffs)!r})"


def _same_field(f: Poly, g: Poly) -> None:
    if f.field != g.field:
        raise FieldMismatchError(f"{f.field!r} vs {g.field!r}")


def poly_divmod(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    """Quotient and remainder with f = q*g + r and deg r < deg g (or r = 0)."""
    _same_field(f, g)
    if g.is_zero:
        raise PreconditionError("division by the zero polynomial")
    if f.degree < g.degree:
        return Poly.zero(f.field), f
    field = f.field
    dg = g.degree
    inv_lead = field.one / g.lc
    rem = list(f.coeffs)
    quot = [field.zero] * (len(f.coeffs) - dg)
    for k in range(len(quot) - 1, -1, -1):
        c = rem[k + dg] * inv_lead
        quot[k] = c
        if c:
            for i in range(dg + 1):
                rem[k + i] = rem[k + i] - c * g.coeffs[i]
    return Poly(field, quot), Poly(field, rem[:dg])


def poly_exact_div(f: Poly, g: Poly) -> Poly:
    q, r = poly_divmod(f, g)
    if not r.is_zero:
        raise PreconditionError("inexact polynomial division")
    return q


def _fraction_coeffs_to_ints(f: Poly) -> list[int]:
    den = 1
    for c in f.coeffs:
        den = den * c.denominator // _gcd_int(den, c.denominator)
    return [int(c * den) for c in f.coeffs]


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a if a else 1


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd.  Over Q this clears denominators and runs a primitive-part
    PRS in Z[x] to avoid the coefficient blowup of fraction Euclid."""
    _same_field(f, g)
    if f.is_zero and g.is_zero:
        raise PreconditionError("gcd of two zero polynomials")
    if f.is_zero:
        return g.monic()
    if g.is_zero:
        return f.monic()
    if f.field.char == 0:
        raw = _intpoly.prs_gcd(_fraction_coeffs_to_ints(f),
                               _fraction_coeffs_to_ints(g))
        return Poly(QQ, [Fraction(c) for c in raw]).monic()
    a, b = f, g
    while not b.is_zero:
        a, b = b, poly_divmod(a, b)[1]
    return a.monic()


def poly_compose(g: Poly, h: Poly) -> Poly:
    """g(h(x)) by Horner; deg(g o h) = deg g * deg h for nonconstant inputs."""
    _same_field(g, h)
    acc = Poly.zero(g.field)
    for c in reversed(g.coeffs):
        acc = acc * h + Poly.constant(g.field, c)
    return acc

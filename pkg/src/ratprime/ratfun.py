"""Rational functions in reduced canonical form.

Canonical means gcd(numerator, denominator) = 1 with a monic denominator,
so equality of values is coefficient equality.  The order at infinity is
deg(denominator) - deg(numerator); constants have order 0 and the zero
function has neither a degree nor an order.
"""

from __future__ import annotations

from .errors import FieldMismatchError, PreconditionError
from .poly import Poly, poly_compose, poly_divmod, poly_exact_div, poly_gcd


class RatFun:
    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: Poly, denominator: Poly | None = None):
        if denominator is None:
            denominator = Poly.one(numerator.field)
        if numerator.field != denominator.field:
            raise FieldMismatchError(f"{numerator.field!r} vs {denominator.field!r}")
        if denominator.is_zero:
            raise PreconditionError("zero denominator")
        if numerator.is_zero:
            self.numerator = numerator
            self.denominator = Poly.one(numerator.field)
            return
        g = poly_gcd(numerator, denominator)
        if g.degree > 0:
            numerator = poly_exact_div(numerator, g)
            denominator = poly_exact_div(denominator, g)
        lead = denominator.lc
        if lead != numerator.field.one:
            numerator = numerator.scale(numerator.field.one / lead)
            denominator = denominator.monic()
        self.numerator = numerator
        self.denominator = denominator

    @classmethod
    def from_poly(cls, f: Poly) -> "RatFun":
        return cls(f)

    @classmethod
    def constant(cls, field, c) -> "RatFun":
        return cls(Poly.constant(field, c))

    @property
    def field(self):
        return self.numerator.field

    @property
    def is_zero(self) -> bool:
        return self.numerator.is_zero

    @property
    def is_constant(self) -> bool:
        return self.numerator.degree <= 0 and self.denominator.degree <= 0

    @property
    def is_polynomial(self) -> bool:
        return self.denominator.degree == 0

    @property
    def degree(self) -> int:
        if self.is_zero:
            raise PreconditionError("degree of the zero function")
        return max(self.numerator.degree, self.denominator.degree)

    @property
    def ord_infinity(self) -> int:
        """deg f2 - deg f1 for the reduced form f1/f2."""
        if self.is_zero:
            raise PreconditionError("order at infinity of the zero function")
        return self.denominator.degree - self.numerator.degree

    def derivative(self) -> "RatFun":
        num = (self.numerator.derivative() * self.denominator
               - self.numerator * self.denominator.derivative())
        return RatFun(num, self.denominator * self.denominator)

    def __call__(self, a):
        bottom = self.denominator(a)
        if not bottom:
            raise PreconditionError(f"{a!r} is a pole")
        return self.numerator(a) / bottom

    # -- field arithmetic (what the expression parser builds on) -----------

    def __add__(self, other: "RatFun") -> "RatFun":
        return RatFun(self.numerator * other.denominator
                      + other.numerator * self.denominator,
                      self.denominator * other.denominator)

    def __sub__(self, other: "RatFun") -> "RatFun":
        return RatFun(self.numerator * other.denominator
                      - other.numerator * self.denominator,
                      self.denominator * other.denominator)

    def __mul__(self, other: "RatFun") -> "RatFun":
        return RatFun(self.numerator * other.numerator,
                      self.denominator * other.denominator)

    def __truediv__(self, other: "RatFun") -> "RatFun":
        if other.is_zero:
            raise ZeroDivisionError("division by the zero function")
        return RatFun(self.numerator * other.denominator,
                      self.denominator * other.numerator)

    def __neg__(self) -> "RatFun":
        return RatFun(-self.numerator, self.denominator)

    def __pow__(self, n: int) -> "RatFun":
        if n < 0:
            raise PreconditionError("negative power")
        return RatFun(self.numerator ** n, self.denominator ** n)

    def __eq__(self, other):
        if not isinstance(other, RatFun):
            return NotImplemented
        return (self.numerator == other.numerator
                and self.denominator == other.denominator)

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def __repr__(self):
        return f"RatFun({self.numerator!r}, {self.denominator!r})"


def rat_compose(g: RatFun, h: RatFun) -> RatFun:
    """Reduced g(h(x)); degrees multiply for nonconstant inputs.

    Both components of g are homogenized with h's numerator and denominator
    to the same total degree, so no rational intermediates appear.
    """
    if g.field != h.field:
        raise FieldMismatchError(f"{g.field!r} vs {h.field!r}")
    if h.is_zero or h.is_constant:
        raise PreconditionError("composition with a constant right factor")
    m = max(g.numerator.degree, g.denominator.degree)
    if m <= 0:
        return RatFun(g.numerator, g.denominator)
    h1_pow = [Poly.one(g.field)]
    h2_pow = [Poly.one(g.field)]
    for _ in range(m):
        h1_pow.append(h1_pow[-1] * h.numerator)
        h2_pow.append(h2_pow[-1] * h.denominator)
    top = Poly.zero(g.field)
    bottom = Poly.zero(g.field)
    for i, c in enumerate(g.numerator.coeffs):
        if c:
            top = top + (h1_pow[i] * h2_pow[m - i]).scale(c)
    for j, c in enumerate(g.denominator.coeffs):
        if c:
            bottom = bottom + (h1_pow[j] * h2_pow[m - j]).scale(c)
    if bottom.is_zero:
        raise AssertionError("denominator collapsed for a nonconstant right factor")
    return RatFun(top, bottom)


def mobius_inverse(u: RatFun) -> RatFun:
    """Compositional inverse of a degree-1 unit via the 2x2 coefficient inverse."""
    if u.is_zero or u.degree != 1:
        raise PreconditionError("only degree-1 functions invert under composition")
    b, a = u.numerator.coeff(0), u.numerator.coeff(1)
    d, c = u.denominator.coeff(0), u.denominator.coeff(1)
    if not a * d - b * c:
        raise PreconditionError("singular coefficient matrix")
    field = u.field
    return RatFun(Poly(field, (-b, d)), Poly(field, (a, -c)))


def normalize_right_factor(g: RatFun, h: RatFun) -> tuple[RatFun, RatFun]:
    """Rewrite g o h as G o H with ord_infinity(H) < 0 and G o H = g o h.

    When h already has negative order the pair is returned unchanged.
    Otherwise h = a + r/h2 with a the constant quotient of h1 by h2, and
    conjugating by the unit 1/(x - a) makes the right factor's order
    deg r - deg h2 < 0.
    """
    if h.is_zero or h.is_constant:
        raise PreconditionError("right factor must be nonconstant")
    if h.ord_infinity < 0:
        return g, h
    field = h.field
    q, r = poly_divmod(h.numerator, h.denominator)
    a = q.coeff(0)
    if r.is_zero:
        raise AssertionError("exact quotient would make the right factor constant")
    mu = RatFun(Poly.one(field), Poly(field, (-a, field.one)))
    mu_inv = RatFun(Poly(field, (field.one, a)), Poly.x(field))
    big_g = rat_compose(g, mu_inv)
    big_h = rat_compose(mu, h)
    if big_h.ord_infinity >= 0:
        raise AssertionError("normalization failed to push the order below zero")
    return big_g, big_h


def valency(f: RatFun | Poly, a) -> int:
    """Order of vanishing of f(x + a) - f(a) at 0.

    Taylor-coefficient order stays meaningful in characteristic p, where the
    iterated-derivative definition can degenerate; in characteristic 0 the
    two agree.  Returns >= 2 exactly when a is a critical point.
    """
    if isinstance(f, Poly):
        f = RatFun(f)
    a = f.field(a) if isinstance(a, int) else a
    if f.denominator(a) == f.field.zero:
        raise PreconditionError(f"{a!r} is a pole")
    if f.is_zero or f.is_constant:
        raise PreconditionError("valency of a constant function is undefined")
    value = f(a)
    shifted_num = f.numerator.taylor_shift(a) - f.denominator.taylor_shift(a).scale(value)
    if shifted_num.is_zero:
        raise AssertionError("nonconstant function with identically zero offset")
    order = 0
    while not shifted_num.coeffs[order]:
        order += 1
    if order < 1:
        raise AssertionError("offset does not vanish at the base point")
    return order

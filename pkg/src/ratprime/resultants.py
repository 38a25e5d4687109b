"""Resultants, discriminants, and critical-value bookkeeping.

Two exact routes coexist on purpose.  `sylvester_resultant` is the
definitional one: the Bareiss determinant of the Sylvester matrix, usable
with scalar or polynomial entries.  `resultant` is the fast one (primitive
PRS over Z after clearing denominators, plain Euclid over F_p).  The
polynomial-in-t resultants Res_x(a - t*b, c) evaluate at enough nodes and
interpolate whenever the field has room, falling back to the direct
determinant over polynomial entries when it does not; both paths are exact
and are cross-checked in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd

from . import _intpoly
from .errors import DegenerateDerivativeError, PreconditionError
from .numutil import greatest_proper_divisor
from .poly import NEG_INF, Poly, _fraction_coeffs_to_ints, _same_field, poly_compose, poly_divmod, poly_exact_div
from .ratfun import RatFun, rat_compose
from .squarefree import SquarefreeFactorization, squarefree_decompose

# ---------------------------------------------------------------------------
# Determinants


def bareiss_determinant(rows, zero, one, exact_div):
    """Fraction-free determinant; every division is exact in the entry ring."""
    n = len(rows)
    if n == 0:
        return one
    m = [list(r) for r in rows]
    sign = 1
    prev = one
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                t = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = exact_div(t, prev) if k else t
            m[i][k] = zero
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def sylvester_matrix(f: Poly, g: Poly) -> list[list]:
    """The (deg f + deg g)-square Sylvester matrix, f-rows first."""
    _same_field(f, g)
    if f.is_zero or g.is_zero:
        raise PreconditionError("Sylvester matrix needs nonzero polynomials")
    n, m = f.degree, g.degree
    if n + m == 0:
        raise PreconditionError("Sylvester matrix of two constants is empty")
    size = n + m
    zero = f.field.zero
    fd = list(reversed(f.coeffs))
    gd = list(reversed(g.coeffs))
    rows = []
    for i in range(m):
        rows.append([zero] * i + fd + [zero] * (size - i - n - 1))
    for i in range(n):
        rows.append([zero] * i + gd + [zero] * (size - i - m - 1))
    return rows


def sylvester_resultant(f: Poly, g: Poly):
    """Resultant as the Sylvester determinant (definitional route)."""
    rows = sylvester_matrix(f, g)
    return bareiss_determinant(rows, f.field.zero, f.field.one,
                               lambda a, b: a / b)


def resultant(f: Poly, g: Poly):
    """Resultant via the fast exact route; agrees with sylvester_resultant."""
    _same_field(f, g)
    if f.is_zero or g.is_zero:
        raise PreconditionError("resultant needs nonzero polynomials")
    if f.degree == 0 and g.degree == 0:
        raise PreconditionError("resultant of two constants")
    field = f.field
    if field.char == 0:
        fi = _fraction_coeffs_to_ints(f)
        gi = _fraction_coeffs_to_ints(g)
        # f = F/df with F integer, so Res(f, g) = Res(F, G) / (df^deg g * dg^deg f)
        df = Fraction(fi[-1]) / f.lc
        dg = Fraction(gi[-1]) / g.lc
        raw = _intpoly.prs_resultant(fi, gi)
        return raw / (df ** g.degree * dg ** f.degree)
    acc = field.one
    sign = 1
    a, b = f, g
    while True:
        da, db = a.degree, b.degree
        if da < db:
            if (da * db) % 2:
                sign = -sign
            a, b = b, a
            continue
        if db == 0:
            value = acc * b.lc ** da
            return value if sign > 0 else -value
        r = poly_divmod(a, b)[1]
        if r.is_zero:
            return field.zero
        acc = acc * b.lc ** (da - r.degree)
        if (da * db) % 2:
            sign = -sign
        a, b = b, r


def discriminant(f: Poly):
    """(-1)^(n(n-1)/2) / lc(f) times Res(f, f')."""
    if f.degree is NEG_INF or f.degree < 1:
        raise PreconditionError("discriminant needs degree >= 1")
    n = f.degree
    fp = f.derivative()
    if fp.is_zero:
        raise DegenerateDerivativeError("derivative vanishes identically")
    res = resultant(f, fp)
    sign = f.field(-1 if (n * (n - 1) // 2) % 2 else 1)
    return sign * res / f.lc


# ---------------------------------------------------------------------------
# Resultants with the auxiliary variable t


@dataclass(frozen=True)
class XTPoly:
    """Polynomial in x whose coefficients are polynomials in t."""

    coeffs: tuple[Poly, ...]  # ascending in x

    @property
    def x_degree(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def linear_in_t(cls, a: Poly, b: Poly) -> "XTPoly":
        """a(x) - t * b(x) as an x-polynomial over K[t]."""
        field = a.field
        n = max(len(a.coeffs), len(b.coeffs))
        cols = []
        for i in range(n):
            cols.append(Poly(field, (a.coeff(i), -b.coeff(i))))
        while cols and cols[-1].is_zero:
            cols.pop()
        return cls(tuple(cols))


def _tpoly_sylvester(xt: XTPoly, c: Poly) -> Poly:
    """Res_x over K[t] by Bareiss with polynomial entries (slow, always works)."""
    field = c.field
    n, m = xt.x_degree, c.degree
    size = n + m
    zero = Poly.zero(field)
    one = Poly.one(field)
    fd = list(reversed(xt.coeffs))
    gd = [Poly.constant(field, cc) for cc in reversed(c.coeffs)]
    rows = []
    for i in range(m):
        rows.append([zero] * i + fd + [zero] * (size - i - n - 1))
    for i in range(n):
        rows.append([zero] * i + gd + [zero] * (size - i - m - 1))
    return bareiss_determinant(rows, zero, one, poly_exact_div)


def interpolate(field, xs, ys) -> Poly:
    """Newton-form interpolation through (xs[i], ys[i]), exact in the field."""
    coeffs = list(ys)
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (xs[i] - xs[i - j])
    acc = Poly.zero(field)
    for i in range(n - 1, -1, -1):
        node = Poly(field, (-xs[i], field.one))
        acc = acc * node + Poly.constant(field, coeffs[i])
    return acc


def _nodes(field, count: int, forbidden) -> list | None:
    """count distinct evaluation nodes avoiding `forbidden`, or None if the
    field is too small."""
    out = []
    if field.char == 0:
        k = 0
        while len(out) < count:
            for cand in ([Fraction(0)] if k == 0 else [Fraction(k), Fraction(-k)]):
                if len(out) < count and cand not in forbidden:
                    out.append(cand)
            k += 1
        return out
    for v in range(field.char):
        cand = field(v)
        if cand not in forbidden:
            out.append(cand)
        if len(out) == count:
            return out
    return None


def res_x_linear_t(a: Poly, b: Poly, c: Poly) -> Poly:
    """Res_x(a(x) - t*b(x), c(x)) as an exact polynomial in t.

    The t-degree is at most deg c (only the deg-c rows of the Sylvester
    matrix carry t).  Nodes where the x-leading coefficient of a - t*b
    would vanish are excluded so specialization commutes with the
    determinant; if the field cannot supply enough nodes the direct
    polynomial-entry determinant is used instead.
    """
    _same_field(a, b)
    _same_field(a, c)
    if c.is_zero:
        raise PreconditionError("second argument is zero")
    xt = XTPoly.linear_in_t(a, b)
    n = xt.x_degree
    if n < 1:
        raise PreconditionError("first argument is constant in x")
    field = a.field
    if c.degree == 0:
        return Poly.constant(field, c.lc ** n)
    bound = c.degree
    forbidden = set()
    if b.coeff(n):
        # lc in x is a.coeff(n) - t*b.coeff(n); one bad node
        forbidden.add(a.coeff(n) / b.coeff(n))
    nodes = _nodes(field, bound + 1, forbidden)
    if nodes is None:
        return _tpoly_sylvester(xt, c)
    values = [resultant(a - b.scale(t0), c) for t0 in nodes]
    return interpolate(field, nodes, values)


def disc_in_t(f: Poly) -> Poly:
    """D[f - t]: the discriminant of f - t as a polynomial in t.

    Roots in the closure are exactly the critical values of f.
    """
    if f.degree is NEG_INF or f.degree < 2:
        raise PreconditionError("disc_in_t needs degree >= 2")
    fp = f.derivative()
    if fp.is_zero:
        raise DegenerateDerivativeError("derivative vanishes identically")
    n = f.degree
    res = res_x_linear_t(f, Poly.one(f.field), fp)
    sign = f.field(-1 if (n * (n - 1) // 2) % 2 else 1)
    return res.scale(sign / f.lc)


def rat_resultant_in_t(f: RatFun) -> Poly:
    """Res_x(f(x) - t, f'(x)) computed on numerators of the reduced forms.

    This is the discriminant analog for rational functions: its roots in
    the closure are exactly the critical values of f.
    """
    if f.is_zero or f.is_constant:
        raise PreconditionError("needs a nonconstant function")
    deriv = f.derivative()
    if deriv.numerator.is_zero:
        raise DegenerateDerivativeError("derivative vanishes identically")
    return res_x_linear_t(f.numerator, f.denominator, deriv.numerator)


# ---------------------------------------------------------------------------
# Critical values


@dataclass(frozen=True)
class CriticalValueReport:
    """Multiplicity bookkeeping for critical values, counted in the closure.

    simple_count comes from the degree of the multiplicity-one part of the
    squarefree decomposition, so no root extraction ever happens; the zero
    critical value is detected by a vanishing constant term.
    """

    disc_t: Poly
    squarefree: SquarefreeFactorization
    simple_count: int
    nonzero_simple_count: int
    zero_multiplicity: int


def critical_values(disc: Poly) -> CriticalValueReport:
    if disc.is_zero:
        raise PreconditionError("zero discriminant")
    sf = squarefree_decompose(disc)
    simple = 0
    zero_is_simple = False
    zero_mult = 0
    for factor, mult in sf.parts:
        if mult == 1:
            simple += factor.degree
        if not factor.coeff(0):
            zero_mult = mult
            zero_is_simple = mult == 1
    return CriticalValueReport(
        disc_t=disc,
        squarefree=sf,
        simple_count=simple,
        nonzero_simple_count=simple - (1 if zero_is_simple else 0),
        zero_multiplicity=zero_mult,
    )


# ---------------------------------------------------------------------------
# The discriminant of a composition


@dataclass(frozen=True)
class DiscriminantSplit:
    """Split of D[(g o h) - t] into constant * A^k * B with A = D[g - t],
    B = Res_x((g o h) - t, h') and k = deg h.  Verified exactly on build."""

    constant: object
    left_disc: Poly
    right_res: Poly
    right_degree: int


def split_discriminant(g: Poly, h: Poly) -> DiscriminantSplit:
    if g.degree is NEG_INF or h.degree is NEG_INF or g.degree < 2 or h.degree < 2:
        raise PreconditionError("both factors need degree >= 2")
    gp, hp = g.derivative(), h.derivative()
    if gp.is_zero or hp.is_zero:
        raise DegenerateDerivativeError("degenerate factor derivative")
    f = poly_compose(g, h)
    n = f.degree
    k = h.degree
    s = gp.degree
    field = f.field
    # closed-form constant: n(n - deg g) is always even, so the halved
    # exponent is an integer
    exponent = (n * (n - 1) - n * (g.degree - 1)) // 2 + n * s * (k - 1)
    a = field(-1 if exponent % 2 else 1) * g.lc ** k * h.lc ** (n * s) / f.lc
    left = disc_in_t(g)
    right = res_x_linear_t(f, Poly.one(field), hp)
    d_full = disc_in_t(f)
    if d_full != (left ** k * right).scale(a):
        raise ArithmeticError(
            "discriminant split identity failed; for char p dividing the "
            "degrees the closed-form constant is not available")
    return DiscriminantSplit(constant=a, left_disc=left, right_res=right,
                             right_degree=k)


def composite_resultant_check(g: RatFun, h: RatFun) -> tuple[int, bool]:
    """For a composition f = g o h, report the multiplicity of t = 0 in
    Res_x(f - t, f') and test the structural side condition: whenever
    gcd(deg f, ord_infinity f) = 1 and ord_infinity f exceeds the greatest
    proper divisor of deg f, that multiplicity must be positive."""
    if g.is_zero or g.is_constant or g.degree < 2 or h.is_zero or h.is_constant or h.degree < 2:
        raise PreconditionError("both factors need degree >= 2")
    f = rat_compose(g, h)
    report = critical_values(rat_resultant_in_t(f))
    ell = report.zero_multiplicity
    ord_f = f.ord_infinity
    d = greatest_proper_divisor(f.degree)
    applies = int_gcd(f.degree, abs(ord_f)) == 1 and ord_f > d
    consistent = (not applies) or ell > 0
    return ell, consistent

from fractions import Fraction
from itertools import permutations

import pytest

from ratprime import (DegenerateDerivativeError, Poly, PreconditionError,
                      PrimeField, QQ, RatFun, XTPoly, composite_resultant_check,
                      critical_values, disc_in_t, discriminant, interpolate,
                      poly_compose, rat_compose, rat_resultant_in_t,
                      res_x_linear_t, resultant, split_discriminant,
                      sylvester_matrix, sylvester_resultant)
from ratprime.resultants import _tpoly_sylvester
from conftest import fppoly, qpoly, random_poly, random_ratfun


def _naive_det(rows):
    """Permutation-expansion determinant: the independent oracle for Bareiss."""
    n = len(rows)
    total = None
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = rows[0][perm[0]]
        for i in range(1, n):
            term = term * rows[i][perm[i]]
        term = term if sign > 0 else -term
        total = term if total is None else total + term
    return total


# ---------------------------------------------------------------------------
# scalar resultants

def test_sylvester_examples():
    assert sylvester_resultant(qpoly(-2, 1), qpoly(-5, 1)) == Fraction(-3)
    assert sylvester_resultant(qpoly(-1, 0, 1), qpoly(-1, 1)) == Fraction(0)
    assert sylvester_resultant(qpoly(1, 0, 1), Poly.x(QQ)) == Fraction(1)


def test_sylvester_matrix_shape():
    rows = sylvester_matrix(qpoly(1, 0, 1), Poly.x(QQ))
    assert len(rows) == 3 and all(len(r) == 3 for r in rows)
    assert _naive_det(rows) == Fraction(1)


def test_sylvester_rejects_two_constants():
    with pytest.raises(PreconditionError):
        sylvester_resultant(qpoly(2), qpoly(3))


def test_bareiss_matches_naive_determinant(rng):
    for field in (QQ, PrimeField(7)):
        for _ in range(25):
            f = random_poly(rng, field, rng.randint(1, 3))
            g = random_poly(rng, field, rng.randint(1, 3))
            rows = sylvester_matrix(f, g)
            assert sylvester_resultant(f, g) == _naive_det(rows)


def test_fast_resultant_agrees_with_sylvester(rng):
    for field in (QQ, PrimeField(5)):
        for _ in range(40):
            f = random_poly(rng, field, rng.randint(1, 5))
            g = random_poly(rng, field, rng.randint(1, 5))
            assert resultant(f, g) == sylvester_resultant(f, g)


def test_resultant_swap_sign(rng):
    for _ in range(30):
        f = random_poly(rng, QQ, rng.randint(1, 4))
        g = random_poly(rng, QQ, rng.randint(1, 4))
        sign = -1 if (f.degree * g.degree) % 2 else 1
        assert resultant(f, g) == sign * resultant(g, f)


def test_resultant_multiplicative(rng):
    for _ in range(30):
        f = random_poly(rng, QQ, rng.randint(1, 3))
        g = random_poly(rng, QQ, rng.randint(1, 3))
        h = random_poly(rng, QQ, rng.randint(1, 3))
        assert resultant(f, g * h) == resultant(f, g) * resultant(f, h)


def test_resultant_zero_iff_common_root(rng):
    for _ in range(25):
        shared = qpoly(rng.randint(-4, 4), 1)
        f = random_poly(rng, QQ, rng.randint(1, 3)) * shared
        g = random_poly(rng, QQ, rng.randint(1, 3)) * shared
        assert resultant(f, g) == 0
    # distinct planted linear factors, no sharing
    f = qpoly(-1, 1) * qpoly(-2, 1)
    g = qpoly(-3, 1) * qpoly(-4, 1)
    assert resultant(f, g) != 0


def test_resultant_product_over_roots(rng):
    for _ in range(25):
        roots = rng.sample(range(-6, 7), rng.randint(1, 3))
        lead = QQ(rng.choice([1, 2, 3, -2]))
        f = Poly.constant(QQ, lead)
        for r in roots:
            f = f * qpoly(-r, 1)
        g = random_poly(rng, QQ, rng.randint(1, 3))
        expected = lead ** g.degree
        for r in roots:
            expected *= g(QQ(r))
        assert resultant(f, g) == expected


def test_resultant_scalar_rule(rng):
    for _ in range(25):
        f = random_poly(rng, QQ, rng.randint(1, 4))
        g = random_poly(rng, QQ, rng.randint(1, 4))
        c = QQ(rng.choice([2, 3, -1, Fraction(1, 2)]))
        assert resultant(f, g.scale(c)) == c ** f.degree * resultant(f, g)


# ---------------------------------------------------------------------------
# discriminants

def test_discriminant_quadratic_oracle(rng):
    # classical b^2 - 4c for monic quadratics
    for _ in range(20):
        b, c = rng.randint(-5, 5), rng.randint(-5, 5)
        assert discriminant(qpoly(c, b, 1)) == Fraction(b * b - 4 * c)
    assert discriminant(qpoly(-4, 0, 1)) == Fraction(16)


def test_discriminant_repeated_root():
    assert discriminant(qpoly(1, -2, 1)) == Fraction(0)


def test_discriminant_depressed_cubic_oracle(rng):
    # -4p^3 - 27q^2 for x^3 + px + q
    for _ in range(20):
        p, q = rng.randint(-4, 4), rng.randint(-4, 4)
        assert discriminant(qpoly(q, p, 0, 1)) == Fraction(-4 * p ** 3 - 27 * q * q)
    assert discriminant(qpoly(0, -3, 0, 1)) == Fraction(108)


# ---------------------------------------------------------------------------
# discriminant in t

def test_disc_in_t_square():
    assert disc_in_t(qpoly(0, 0, 1)) == qpoly(0, 4)


def test_disc_in_t_quartic_plus_x():
    assert disc_in_t(qpoly(0, 1, 0, 0, 1)) == qpoly(-27, 0, 0, -256)


def test_disc_in_t_pure_quartic_multiplicity():
    report = critical_values(disc_in_t(qpoly(0, 0, 0, 0, 1)))
    assert [(f, m) for f, m in report.squarefree.parts] == [(qpoly(0, 1), 3)]


def test_disc_in_t_degenerate_mod_p():
    with pytest.raises(DegenerateDerivativeError):
        disc_in_t(fppoly(3, 0, 0, 0, 1))


def test_interpolation_route_matches_direct_determinant(rng):
    for field in (QQ, PrimeField(5)):
        for _ in range(15):
            f = random_poly(rng, field, rng.randint(2, 4))
            if f.derivative().is_zero:
                continue
            xt = XTPoly.linear_in_t(f, Poly.one(field))
            direct = _tpoly_sylvester(xt, f.derivative())
            assert res_x_linear_t(f, Poly.one(field), f.derivative()) == direct


def test_rational_interpolation_route_matches_direct(rng):
    count = 0
    while count < 10:
        f = random_ratfun(rng, QQ, rng.randint(1, 3), rng.randint(1, 3))
        if f.is_zero or f.is_constant:
            continue
        deriv = f.derivative()
        if deriv.numerator.is_zero:
            continue
        count += 1
        xt = XTPoly.linear_in_t(f.numerator, f.denominator)
        assert rat_resultant_in_t(f) == _tpoly_sylvester(xt, deriv.numerator)


def test_small_field_falls_back_to_direct_determinant():
    # degree-6 polynomial over F_5 needs 6 nodes but only 5 exist
    field = PrimeField(5)
    f = fppoly(5, 1, 2, 0, 1, 0, 0, 1)
    d = disc_in_t(f)
    xt = XTPoly.linear_in_t(f, Poly.one(field))
    raw = _tpoly_sylvester(xt, f.derivative())
    assert d == raw.scale(field(-1) / f.lc)  # n = 6: sign (-1)^15


# ---------------------------------------------------------------------------
# the rational-function discriminant analog

def test_rat_resultant_worked_example():
    f = RatFun(qpoly(1, 4, 6, 4, 1), qpoly(0, 0, 0, 1))
    # equals exactly t^3 (256 - 27 t): the reported constant c is 1
    assert rat_resultant_in_t(f) == qpoly(0, 0, 0, 256, -27)


def test_rat_resultant_polynomial_consistency(rng):
    # for a polynomial, Res_x(f - t, f') is (+-1/lc) times D[f - t]
    for _ in range(15):
        f = random_poly(rng, QQ, rng.randint(2, 5))
        n = f.degree
        sign = QQ(-1 if (n * (n - 1) // 2) % 2 else 1)
        lhs = rat_resultant_in_t(RatFun(f.monic()))
        assert lhs.scale(sign) == disc_in_t(f.monic())


def test_rat_resultant_x_plus_inverse():
    f = RatFun(qpoly(1, 0, 1), Poly.x(QQ))
    assert rat_resultant_in_t(f) == qpoly(4, 0, -1)


# ---------------------------------------------------------------------------
# critical-value report

def test_critical_values_worked_example():
    report = critical_values(qpoly(0, 0, 0, 256, -27))
    assert (report.simple_count, report.nonzero_simple_count,
            report.zero_multiplicity) == (1, 1, 3)
    assert dict((tuple(fc for fc in f.coeffs), m)
                for f, m in report.squarefree.parts) \
        == {(Fraction(-256, 27), Fraction(1)): 1, (Fraction(0), Fraction(1)): 3}


def test_critical_values_squarefree_cubic():
    report = critical_values(qpoly(-27, 0, 0, -256))
    assert (report.simple_count, report.nonzero_simple_count,
            report.zero_multiplicity) == (3, 3, 0)


def test_critical_values_simple_zero_root():
    report = critical_values(qpoly(0, 4))
    assert (report.simple_count, report.nonzero_simple_count,
            report.zero_multiplicity) == (1, 0, 1)


def test_critical_values_rejects_zero():
    with pytest.raises(PreconditionError):
        critical_values(Poly.zero(QQ))


# ---------------------------------------------------------------------------
# discriminant of a composition

def test_split_discriminant_square_square():
    split = split_discriminant(qpoly(0, 0, 1), qpoly(0, 0, 1))
    assert split.constant == Fraction(1)
    assert split.left_disc == qpoly(0, 4)
    assert split.right_res == qpoly(0, -16)
    assert split.right_degree == 2
    f = poly_compose(qpoly(0, 0, 1), qpoly(0, 0, 1))
    assert disc_in_t(f) == (split.left_disc ** 2 * split.right_res).scale(split.constant)


def test_split_discriminant_examples():
    for g, h in ((qpoly(0, 1, 1), qpoly(0, 0, 1)),
                 (qpoly(0, 0, 0, 1), qpoly(0, 0, 1))):
        split = split_discriminant(g, h)
        f = poly_compose(g, h)
        rebuilt = (split.left_disc ** split.right_degree * split.right_res)
        assert disc_in_t(f) == rebuilt.scale(split.constant)


def test_split_discriminant_random_and_right_degree(rng):
    for _ in range(15):
        g = random_poly(rng, QQ, rng.randint(2, 4))
        h = random_poly(rng, QQ, rng.randint(2, 4))
        split = split_discriminant(g, h)  # identity is self-checked inside
        assert split.right_res.degree == h.degree - 1


# ---------------------------------------------------------------------------
# structural check for compositions of rational functions

def test_composite_resultant_check_worked_example():
    g = RatFun(qpoly(1, 1), qpoly(0, 0, 0, 0, 1))
    h = RatFun(qpoly(1, 0, 1), qpoly(1, 0, 0, 0, 1))
    ell, consistent = composite_resultant_check(g, h)
    assert consistent
    f = rat_compose(g, h)
    assert ell == critical_values(rat_resultant_in_t(f)).zero_multiplicity


def test_composite_resultant_check_squared_shape():
    # x^2 o (x^2+1)/x gives Res = 16 t^2 (t-4)^2, so ell = 2
    g = RatFun(qpoly(0, 0, 1))
    h = RatFun(qpoly(1, 0, 1), Poly.x(QQ))
    f = rat_compose(g, h)
    assert rat_resultant_in_t(f) == qpoly(0, 0, 256, -128, 16)
    ell, consistent = composite_resultant_check(g, h)
    assert (ell, consistent) == (2, True)


def test_composite_resultant_check_side_condition_fires():
    # deg f = 16, ord f = 9: gcd(16, 9) = 1 and 9 > d = 8, so ell must be > 0
    g = RatFun(qpoly(1, 1), qpoly(0, 0, 0, 0, 1))
    h = RatFun(qpoly(0, 0, 0, 0, 1), qpoly(1, 1))
    f = rat_compose(g, h)
    assert (f.degree, f.ord_infinity) == (16, 9)
    ell, consistent = composite_resultant_check(g, h)
    assert consistent and ell > 0


def test_composite_resultant_check_polynomial_consistency():
    # for polynomial pairs, ell agrees with the t-multiplicity of D[f-t]
    g, h = qpoly(0, 0, 1), qpoly(0, 1, 1)
    ell, consistent = composite_resultant_check(RatFun(g), RatFun(h))
    assert consistent
    f = poly_compose(g, h)
    assert ell == critical_values(disc_in_t(f)).zero_multiplicity


def test_critical_values_are_roots_of_rat_resultant():
    # rational critical points of (x+1)^4/x^3 are -1 (valency 4) and 3
    # (valency 2); their values 0 and 256/27 are exactly the roots
    from ratprime import valency

    f = RatFun(qpoly(1, 4, 6, 4, 1), qpoly(0, 0, 0, 1))
    res = rat_resultant_in_t(f)
    for a in (QQ(-1), QQ(3)):
        assert valency(f, a) >= 2
        assert res(f(a)) == 0
    # a non-critical point's value is not a root
    assert valency(f, QQ(1)) == 1
    assert res(f(QQ(1))) != 0


def test_critical_values_iff_for_x_plus_inverse():
    f = RatFun(qpoly(1, 0, 1), Poly.x(QQ))
    res = rat_resultant_in_t(f)  # 4 - t^2, roots exactly +-2 = f(+-1)
    from ratprime import valency

    assert valency(f, QQ(1)) == 2 and valency(f, QQ(-1)) == 2
    assert res(QQ(2)) == 0 and res(QQ(-2)) == 0
    for a in (QQ(2), QQ(3), QQ(-4)):
        assert valency(f, a) == 1
        assert res(f(a)) != 0


# ---------------------------------------------------------------------------
# interpolation helper

def test_interpolate_recovers_polynomial(rng):
    for field in (QQ, PrimeField(7)):
        for _ in range(10):
            f = random_poly(rng, field, rng.randint(0, 4))
            xs = [field(i) for i in range(f.degree + 1 if f.degree >= 0 else 1)]
            ys = [f(x) for x in xs]
            assert interpolate(field, xs, ys) == f

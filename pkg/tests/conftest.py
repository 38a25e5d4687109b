import random

import pytest

from ratprime import Poly, PrimeField, QQ, RatFun


def qpoly(*coeffs):
    return Poly(QQ, coeffs)


def fppoly(p, *coeffs):
    return Poly(PrimeField(p), coeffs)


def random_poly(rng, field, degree, lc_choices=(1, 2, 3, -1, -2)):
    """Random polynomial of exact degree with small integer coefficients."""
    coeffs = [rng.randint(-3, 3) for _ in range(degree)]
    coeffs.append(rng.choice(lc_choices))
    return Poly(field, coeffs)


def random_ratfun(rng, field, num_degree, den_degree):
    """Random reduced rational function with the requested component degrees
    (resampled until reduction preserves them)."""
    while True:
        num = random_poly(rng, field, num_degree)
        den = random_poly(rng, field, den_degree)
        f = RatFun(num, den)
        if (not f.is_zero and f.numerator.degree == num_degree
                and f.denominator.degree == den_degree):
            return f


@pytest.fixture
def rng():
    return random.Random(0x5EED)

"""Squarefree decomposition over Q and over prime fields.

Yun's algorithm covers characteristic zero.  In characteristic p the
gcd-with-derivative loop misses multiplicities divisible by p, so the
leftover factor (a perfect p-th power, since prime fields are perfect) is
handled by exponent division and recursion.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError
from .poly import Poly, poly_exact_div, poly_gcd


@dataclass(frozen=True)
class SquarefreeFactorization:
    """constant * prod(factor_i ^ multiplicity_i) reproduces the input exactly.

    Factors are monic, squarefree and pairwise coprime; parts are sorted by
    (multiplicity, degree, coefficients) for a deterministic layout.
    """

    constant: object
    parts: tuple[tuple[Poly, int], ...]

    def reconstruct(self, field) -> Poly:
        acc = Poly.constant(field, self.constant)
        for factor, mult in self.parts:
            acc = acc * factor ** mult
        return acc

    def multiplicity_one_part(self) -> list[Poly]:
        return [f for f, m in self.parts if m == 1]


def _yun(f: Poly) -> list[tuple[Poly, int]]:
    d = poly_gcd(f, f.derivative())
    c = poly_exact_div(f, d)
    w = poly_exact_div(f.derivative(), d) - c.derivative()
    parts = []
    i = 1
    while c.degree > 0:
        g = poly_gcd(c, w)
        if g.degree > 0:
            parts.append((g, i))
        c = poly_exact_div(c, g)
        w = poly_exact_div(w, g) - c.derivative()
        i += 1
    return parts


def _pth_root(f: Poly, p: int) -> Poly:
    """Inverse Frobenius on a polynomial of the form u(x^p) over F_p.

    Over the prime field a^p = a, so only the exponents contract.
    """
    coeffs = []
    for i, c in enumerate(f.coeffs):
        if i % p == 0:
            coeffs.append(c)
        elif c:
            raise PreconditionError("polynomial is not a p-th power")
    return Poly(f.field, coeffs)


def _char_p(f: Poly, p: int) -> list[tuple[Poly, int]]:
    fp = f.derivative()
    if fp.is_zero:
        return [(g, m * p) for g, m in _char_p(_pth_root(f, p), p)]
    parts = []
    c = poly_gcd(f, fp)
    w = poly_exact_div(f, c)
    i = 1
    while w.degree > 0:
        y = poly_gcd(w, c)
        z = poly_exact_div(w, y)
        if z.degree > 0:
            parts.append((z, i))
        i += 1
        w = y
        c = poly_exact_div(c, y)
    if c.degree > 0:
        parts.extend((g, m * p) for g, m in _char_p(_pth_root(c, p), p))
    return parts


def squarefree_decompose(f: Poly) -> SquarefreeFactorization:
    if f.is_zero:
        raise PreconditionError("squarefree decomposition of the zero polynomial")
    constant = f.lc
    if f.degree == 0:
        return SquarefreeFactorization(constant, ())
    monic = f.monic()
    parts = _yun(monic) if f.field.char == 0 else _char_p(monic, f.field.char)
    parts.sort(key=lambda fm: (fm[1], fm[0].degree, [repr(c) for c in fm[0].coeffs]))
    result = SquarefreeFactorization(constant, tuple(parts))
    if result.reconstruct(f.field) != f:
        raise AssertionError("squarefree reconstruction failed (internal bug)")
    return result

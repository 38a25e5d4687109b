"""Primitive-PRS routines on integer coefficient lists (ascending powers).

Rational-coefficient gcds and resultants route through here after clearing
denominators: pseudo-division keeps everything in Z and stripping contents
at each step controls coefficient growth, which naive fraction Euclid does
not.  The resultant variant tracks the exact scale factor introduced by
pseudo-division, so its output is the true resultant, not a gcd surrogate.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def content(a: list[int]) -> int:
    g = 0
    for c in a:
        g = gcd(g, abs(c))
    return g if g else 1


def primitive(a: list[int]) -> list[int]:
    c = content(a)
    return [q // c for q in a]


def pseudo_rem(f: list[int], g: list[int]) -> list[int]:
    """Strict pseudo-remainder: lc(g)^(deg f - deg g + 1) * f = q*g + r.

    Requires deg f >= deg g >= 0 with g nonzero.  Scales at every step so
    the total scale factor is exactly lc(g)^(deg f - deg g + 1).
    """
    df, dg = len(f) - 1, len(g) - 1
    lead = g[-1]
    r = list(f)
    for k in range(df - dg, -1, -1):
        c = r[k + dg]
        for i in range(len(r)):
            r[i] *= lead
        for i in range(dg + 1):
            r[k + i] -= c * g[i]
    return trim(r)


def prs_gcd(f: list[int], g: list[int]) -> list[int]:
    """Primitive gcd of two integer polynomials (content discarded)."""
    f = primitive(trim(list(f)))
    g = primitive(trim(list(g)))
    if not f:
        return g
    while g:
        if len(f) < len(g):
            f, g = g, f
            continue
        r = pseudo_rem(f, g)
        f, g = g, primitive(r) if r else []
    if f and f[-1] < 0:
        f = [-c for c in f]
    return f


def prs_resultant(f: list[int], g: list[int]) -> Fraction:
    """Resultant of integer polynomials via a scale-tracked primitive PRS.

    Uses only Res(f,g) = (-1)^(deg f * deg g) Res(g,f), the Euclid step
    Res(g,f) = lc(g)^(deg f - deg r) Res(g, f mod g), and the scalar rule
    Res(g, c*r) = c^(deg g) Res(g, r).  The accumulated scale can pass
    through non-integer values, hence the Fraction accumulator; the final
    value is integral for integer inputs.
    """
    f = trim(list(f))
    g = trim(list(g))
    if not f or not g:
        return Fraction(0)
    sign = 1
    acc = Fraction(1)
    while True:
        df, dg = len(f) - 1, len(g) - 1
        if df < dg:
            if (df * dg) % 2:
                sign = -sign
            f, g = g, f
            continue
        if dg == 0:
            return sign * acc * Fraction(g[0]) ** df
        r = pseudo_rem(f, g)
        if not r:
            return Fraction(0)
        dr = len(r) - 1
        c = content(r)
        rp = [q // c for q in r]
        lead = Fraction(g[-1])
        steps = df - dg + 1
        acc *= lead ** (df - dr) * Fraction(c) ** dg / lead ** (steps * dg)
        if (df * dg) % 2:
            sign = -sign
        f, g = g, rp

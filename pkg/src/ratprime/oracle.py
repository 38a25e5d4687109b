"""Brute-force decomposition search used as ground truth.

Polynomials: base-h digit expansion decides "is h a right factor" exactly;
over F_p the right-factor space shrinks to monic candidates with zero
constant term (degree-1 units absorb the rest), over Q the unique
normalized candidate per degree comes from a triangular coefficient solve.

Rational functions over F_p: right factors are enumerated up to degree-1
units as 2-dimensional coefficient subspaces in reduced echelon form, and
the left factor, once h is fixed, is the kernel of an exact linear system.
Over Q the same search runs on a good-reduction image mod p and candidate
witnesses are lifted symmetrically and re-verified exactly; absence of a
witness over Q is therefore never claimed to be exhaustive.

"Budget exhausted" and "exhaustively absent" are distinct outcomes; the
exhaustive flag is what lets the primality soundness tests treat an absent
witness as a proof.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import PreconditionError
from .fields import PrimeField, QQ
from .numutil import is_prime, proper_composite_divisors
from .poly import Poly, poly_compose, poly_divmod
from .ratfun import RatFun, rat_compose


@dataclass(frozen=True)
class OracleBudget:
    max_field_size: int = 13
    max_right_degree: int = 8
    candidate_cap: int = 100_000

    def __post_init__(self):
        if self.max_field_size < 2 or self.max_right_degree < 2 or self.candidate_cap < 1:
            raise PreconditionError("budget components must be positive")


@dataclass(frozen=True)
class SearchResult:
    """witness is a verified (g, h) pair or None; exhaustive means the verdict
    is conclusive (a witness, or a fully enumerated space with none)."""

    witness: tuple | None
    exhaustive: bool
    candidates: int


# ---------------------------------------------------------------------------
# Polynomial decomposition


def h_adic_expansion(f: Poly, h: Poly) -> list[Poly]:
    """Digits c_0..c_m with f = sum(c_i * h^i) and deg c_i < deg h."""
    if h.degree < 1:
        raise PreconditionError("base must be nonconstant")
    digits = []
    rest = f
    while not rest.is_zero:
        rest, digit = poly_divmod(rest, h)
        digits.append(digit)
    return digits


def right_factor_quotient(f: Poly, h: Poly) -> Poly | None:
    """g with f = g o h, or None.  Exists iff every h-adic digit is constant;
    the result is re-verified by composition before returning."""
    if h.degree < 2:
        raise PreconditionError("right factor must have degree >= 2")
    if f.degree % h.degree:
        raise PreconditionError("right-factor degree must divide deg f")
    coeffs = []
    for digit in h_adic_expansion(f, h):
        if digit.degree > 0:
            return None
        coeffs.append(digit.coeff(0))
    g = Poly(f.field, coeffs)
    return g if poly_compose(g, h) == f else None


def _tame_right_factor(f: Poly, k: int) -> Poly:
    """The unique monic, zero-constant-term candidate of degree k whose m-th
    power matches the top coefficients of f/lc(f); characteristic 0 only."""
    field = f.field
    n = f.degree
    m = n // k
    target = f.monic()
    h = Poly.x(field) ** k
    for j in range(1, k):
        gap = target - h ** m
        c = gap.coeff(n - j)
        if c:
            h = h + Poly(field, (field.zero,) * (k - j) + (c / field(m),))
    return h


def _right_degrees(n: int) -> list[int]:
    """Candidate right-factor degrees, largest first (the canonical order)."""
    return list(reversed(proper_composite_divisors(n)))


def poly_decompose(f: Poly, budget: OracleBudget) -> SearchResult:
    """First verified (g, h) with f = g o h, trying right-factor degrees in
    the canonical (descending) order."""
    n = f.degree
    if n < 4 or is_prime(n):
        raise PreconditionError("decomposition search needs composite degree >= 4")
    field = f.field
    tried = 0
    exhaustive = True
    for k in _right_degrees(n):
        if k > budget.max_right_degree:
            exhaustive = False
            continue
        if field.char == 0:
            tried += 1
            h = _tame_right_factor(f, k)
            g = right_factor_quotient(f, h)
            if g is not None:
                return SearchResult((g, h), True, tried)
        else:
            p = field.char
            if p > budget.max_field_size or tried + p ** (k - 1) > budget.candidate_cap:
                exhaustive = False
                continue
            for tail in product(range(p), repeat=k - 1):
                tried += 1
                h = Poly(field, (0,) + tail + (1,))
                g = right_factor_quotient(f, h)
                if g is not None:
                    return SearchResult((g, h), True, tried)
    return SearchResult(None, exhaustive, tried)


# ---------------------------------------------------------------------------
# mod-p machinery on raw int lists (ascending coefficients)


def _mp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _mp_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _mp_gcd_degree(a: list[int], b: list[int], p: int) -> int:
    a = _mp_trim(list(a))
    b = _mp_trim(list(b))
    while b:
        inv = pow(b[-1], -1, p)
        while len(a) >= len(b):
            c = (a[-1] * inv) % p
            off = len(a) - len(b)
            for i in range(len(b)):
                a[off + i] = (a[off + i] - c * b[i]) % p
            _mp_trim(a)
            if not a:
                break
        a, b = b, a
    return len(a) - 1


def _mp_eval(a: list[int], x: int, p: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def _projective_table(num: list[int], den: list[int], p: int) -> list[int]:
    """Value of num/den at 0..p-1 and infinity; p encodes the point at
    infinity as a value.  Assumes gcd(num, den) = 1."""
    table = []
    for a in range(p):
        bottom = _mp_eval(den, a, p)
        if bottom:
            table.append((_mp_eval(num, a, p) * pow(bottom, -1, p)) % p)
        else:
            table.append(p)
    dn, dd = len(num) - 1, len(den) - 1
    if dn > dd:
        table.append(p)
    elif dn < dd:
        table.append(0)
    else:
        table.append((num[-1] * pow(den[-1], -1, p)) % p)
    return table


def _fibers_respected(u: list[int], v: list[int], f_table: list[int], p: int) -> bool:
    """Necessary condition for f = g o (u/v): points identified by u/v must
    already be identified by f (as maps on the projective line)."""
    groups: dict[int, int] = {}
    for a in range(p):
        bottom = _mp_eval(v, a, p)
        if bottom:
            hv = (_mp_eval(u, a, p) * pow(bottom, -1, p)) % p
        else:
            hv = p
        fv = f_table[a]
        if hv in groups:
            if groups[hv] != fv:
                return False
        else:
            groups[hv] = fv
    # u is monic of full degree and deg v < deg u, so infinity maps to infinity
    return groups.get(p, f_table[p]) == f_table[p]


def _mp_kernel(rows: list[list[int]], ncols: int, p: int) -> list[list[int]]:
    """Kernel basis of a matrix over F_p (rows of length ncols)."""
    mat = [r[:] for r in rows if any(r)]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(mat)):
            if mat[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = pow(mat[r][c], -1, p)
        mat[r] = [(x * inv) % p for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                factor = mat[i][c]
                row_r = mat[r]
                mat[i] = [(x - factor * y) % p for x, y in zip(mat[i], row_r)]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [0] * ncols
        vec[fc] = 1
        for i, pc in enumerate(pivots):
            vec[pc] = (-mat[i][fc]) % p
        basis.append(vec)
    return basis


def _subspace_count(p: int, k: int) -> int:
    """Size of the canonical degree-k right-factor space over F_p."""
    return p ** (k - 1) * (p ** k - 1) // (p - 1)


def _canonical_right_factors(p: int, k: int):
    """Degree-k right factors up to composition with degree-1 units.

    Each class corresponds to the 2-dimensional coefficient subspace
    spanned by numerator and denominator; reduced echelon bases (u monic of
    degree k with zero coefficient at deg v, v monic of lower degree)
    enumerate every such subspace exactly once, in a fixed order.
    """
    for dv in range(k):
        for v_tail in product(range(p), repeat=dv):
            v = list(v_tail) + [1]
            for u_free in product(range(p), repeat=k - 1):
                u = list(u_free[:dv]) + [0] + list(u_free[dv:]) + [1]
                yield u, v


def _solve_left_factor_modp(f1: list[int], f2: list[int], u: list[int],
                            v: list[int], m: int, p: int):
    """Solve f1 * Qh - f2 * Ph = 0 for the coefficients of g = P/Q, where
    Ph, Qh homogenize P, Q with (u, v).  Returns (P, Q) int lists or None."""
    upow = [[1]]
    vpow = [[1]]
    for _ in range(m):
        upow.append(_mp_mul(upow[-1], u, p))
        vpow.append(_mp_mul(vpow[-1], v, p))
    cols = []
    for j in range(m + 1):
        cols.append(_mp_mul(f1, _mp_mul(upow[j], vpow[m - j], p), p))
    for i in range(m + 1):
        cols.append([-c % p for c in _mp_mul(f2, _mp_mul(upow[i], vpow[m - i], p), p)])
    height = max(len(c) for c in cols)
    rows = [[col[r] if r < len(col) else 0 for col in cols] for r in range(height)]
    for vec in _mp_kernel(rows, 2 * (m + 1), p):
        q = vec[:m + 1]
        pp = vec[m + 1:]
        if any(q):
            return pp, q
    return None


def _search_right_factors(f: RatFun, k: int, budget: OracleBudget,
                          want: int) -> tuple[list, int, bool]:
    """Enumerate canonical right factors of degree k over F_p, returning up
    to `want` fully verified witness pairs, the number of candidates tried,
    and whether the enumeration covered the whole space."""
    field = f.field
    p = field.char
    deg = f.degree
    m = deg // k
    f1 = [c.value for c in f.numerator.coeffs]
    f2 = [c.value for c in f.denominator.coeffs]
    f_table = _projective_table(f1, f2, p)
    found = []
    tried = 0
    for u, v in _canonical_right_factors(p, k):
        if tried >= budget.candidate_cap:
            return found, tried, False
        tried += 1
        if _mp_gcd_degree(u, v, p) > 0:
            continue
        if not _fibers_respected(u, v, f_table, p):
            continue
        sol = _solve_left_factor_modp(f1, f2, u, v, m, p)
        if sol is None:
            continue
        pp, q = sol
        g = RatFun(Poly(field, pp), Poly(field, q))
        h = RatFun(Poly(field, u), Poly(field, v))
        if h.degree != k or g.is_constant or g.degree < 2:
            continue
        if rat_compose(g, h) == f:
            found.append((g, h))
            if len(found) >= want:
                return found, tried, False
    return found, tried, True


def rat_decompose(f: RatFun, k: int, budget: OracleBudget) -> SearchResult:
    """Witness search for f = g o h over F_p with deg h = k.

    An absent witness with exhaustive=True proves no decomposition with a
    degree-k right factor exists over the base field.
    """
    if not isinstance(f.field, PrimeField):
        raise PreconditionError("direct rational search runs over prime fields")
    if f.is_zero or f.is_constant:
        raise PreconditionError("nonconstant function required")
    deg = f.degree
    if deg % k or k < 2 or k > deg // 2:
        raise PreconditionError("k must divide deg f with 2 <= k <= deg f / 2")
    if (f.field.char > budget.max_field_size or k > budget.max_right_degree
            or _subspace_count(f.field.char, k) > budget.candidate_cap):
        return SearchResult(None, False, 0)
    found, tried, completed = _search_right_factors(f, k, budget, want=1)
    if found:
        return SearchResult(found[0], True, tried)
    return SearchResult(None, completed, tried)


def rat_decompose_all_k(f: RatFun, budget: OracleBudget) -> SearchResult:
    """rat_decompose over every admissible right-factor degree, descending."""
    tried = 0
    exhaustive = True
    for k in _right_degrees(f.degree):
        result = rat_decompose(f, k, budget)
        tried += result.candidates
        if result.witness:
            return SearchResult(result.witness, True, tried)
        exhaustive = exhaustive and result.exhaustive
    return SearchResult(None, exhaustive, tried)


# ---------------------------------------------------------------------------
# Rational decomposition over Q by reduction and lifting

_LIFT_PRIMES = (5, 7, 11, 13)


def _reduce_mod(f: RatFun, p: int) -> RatFun | None:
    """Good-reduction image of f mod p, or None (coefficient denominator
    divisible by p, degree drop, or lost coprimality)."""
    field = PrimeField(p)
    try:
        num = Poly(field, [field(c) for c in f.numerator.coeffs])
        den = Poly(field, [field(c) for c in f.denominator.coeffs])
    except ZeroDivisionError:
        return None
    if num.degree != f.numerator.degree or den.degree != f.denominator.degree:
        return None
    image = RatFun(num, den)
    if (image.numerator.degree != f.numerator.degree
            or image.denominator.degree != f.denominator.degree):
        return None
    return image


def _symmetric_lift(a: list[int], p: int) -> list[Fraction]:
    return [Fraction(c if c <= p // 2 else c - p) for c in a]


def _field_kernel(rows, ncols, zero, one):
    """Kernel basis over an arbitrary exact field (used for the Q lift)."""
    mat = [list(r) for r in rows if any(r)]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(mat)):
            if mat[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = one / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                factor = mat[i][c]
                row_r = mat[r]
                mat[i] = [x - factor * y for x, y in zip(mat[i], row_r)]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [zero] * ncols
        vec[fc] = one
        for i, pc in enumerate(pivots):
            vec[pc] = -mat[i][fc]
        basis.append(vec)
    return basis


def solve_left_factor(f: RatFun, h: RatFun) -> RatFun | None:
    """Given a candidate right factor h, solve the exact linear system for g
    with f = g o h; the left factor is unique when it exists."""
    deg = f.degree
    k = h.degree
    if deg % k:
        return None
    m = deg // k
    field = f.field
    u, v = h.numerator, h.denominator
    upow = [Poly.one(field)]
    vpow = [Poly.one(field)]
    for _ in range(m):
        upow.append(upow[-1] * u)
        vpow.append(vpow[-1] * v)
    cols = []
    for j in range(m + 1):
        cols.append((f.numerator * upow[j] * vpow[m - j]).coeffs)
    for i in range(m + 1):
        cols.append((-(f.denominator * upow[i] * vpow[m - i])).coeffs)
    height = max(len(c) for c in cols)
    zero = field.zero
    rows = [[col[r] if r < len(col) else zero for col in cols]
            for r in range(height)]
    for vec in _field_kernel(rows, 2 * (m + 1), zero, field.one):
        q = vec[:m + 1]
        pp = vec[m + 1:]
        if any(q):
            g = RatFun(Poly(field, pp), Poly(field, q))
            if not g.is_zero and not g.is_constant and rat_compose(g, h) == f:
                return g
    return None


def rat_decompose_via_reduction(f: RatFun, budget: OracleBudget) -> SearchResult:
    """Witness search for proper rational functions over Q: search a
    good-reduction image over a small prime field, lift candidate right
    factors symmetrically, and re-verify exactly over Q.

    A returned witness is exact and conclusive; an absent one proves
    nothing (the result is never exhaustive over Q).
    """
    if f.field != QQ:
        raise PreconditionError("reduction-and-lift search runs over Q")
    tried = 0
    for k in _right_degrees(f.degree):
        if k > budget.max_right_degree:
            continue
        for p in _LIFT_PRIMES:
            if p > budget.max_field_size:
                break
            if _subspace_count(p, k) > budget.candidate_cap:
                continue
            image = _reduce_mod(f, p)
            if image is None:
                continue
            remaining = budget.candidate_cap - tried
            if remaining <= 0:
                return SearchResult(None, False, tried)
            slice_budget = OracleBudget(budget.max_field_size,
                                        budget.max_right_degree, remaining)
            found, used, _ = _search_right_factors(image, k, slice_budget, want=1)
            tried += used
            for _, h_bar in found:
                u = Poly(QQ, _symmetric_lift([c.value for c in h_bar.numerator.coeffs], p))
                v = Poly(QQ, _symmetric_lift([c.value for c in h_bar.denominator.coeffs], p))
                if v.is_zero:
                    continue
                h = RatFun(u, v)
                if h.is_zero or h.is_constant or h.degree != k:
                    continue
                g = solve_left_factor(f, h)
                if g is not None and g.degree >= 2:
                    return SearchResult((g, h), True, tried)
            if found:
                # the mod-p witnesses exist but none lifted; another prime
                # may reduce the true witness non-spuriously
                continue
    return SearchResult(None, False, tried)

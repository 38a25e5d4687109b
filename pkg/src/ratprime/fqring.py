"""The ring of all functions on a prime field: F_q[x]/(x^q - x).

Every function on F_q is polynomial, so elements carry both a value table
of length q and the unique reduced representative of degree < q; the two
agree pointwise by construction.  Units under composition are exactly the
permutation polynomials, and every other nonzero element is a zero divisor
with a constructive annihilator.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import product
from math import factorial

from .errors import FieldMismatchError, PreconditionError
from .fields import PrimeField
from .poly import Poly, poly_compose, poly_divmod


class FqClass(Enum):
    ZERO = "zero"
    UNIT = "unit"
    ZERO_DIVISOR = "zero-divisor"


@dataclass(frozen=True)
class FqFunction:
    p: int
    table: tuple[int, ...]
    reduced: Poly

    def __call__(self, a: int) -> int:
        return self.table[a % self.p]

    def __add__(self, other: "FqFunction") -> "FqFunction":
        _same_p(self, other)
        return reduce_ring(self.reduced + other.reduced)

    def __sub__(self, other: "FqFunction") -> "FqFunction":
        _same_p(self, other)
        return reduce_ring(self.reduced - other.reduced)

    @property
    def is_zero(self) -> bool:
        return not any(self.table)

    def image(self) -> list[int]:
        return sorted(set(self.table))


def _same_p(a: FqFunction, b: FqFunction) -> None:
    if a.p != b.p:
        raise FieldMismatchError(f"F_{a.p} vs F_{b.p}")


def _modulus(field: PrimeField) -> Poly:
    p = field.p
    return Poly(field, [0, -1] + [0] * (p - 2) + [1])  # x^p - x


def reduce_ring(f: Poly) -> FqFunction:
    """Image of a polynomial in F_q[x]/(x^q - x): value table plus the
    reduced representative of degree < q."""
    if not isinstance(f.field, PrimeField):
        raise PreconditionError("the function ring is defined over a prime field")
    field = f.field
    p = field.p
    table = tuple(f(field(a)).value for a in range(p))
    reduced = poly_divmod(f, _modulus(field))[1] if f.degree >= p else f
    return FqFunction(p=p, table=table, reduced=reduced)


def from_table(p: int, values) -> FqFunction:
    """Lagrange interpolation of a value table into the reduced representative."""
    field = PrimeField(p)
    values = [v % p for v in values]
    if len(values) != p:
        raise PreconditionError(f"table must have length {p}")
    acc = Poly.zero(field)
    for a, value in enumerate(values):
        if not value:
            continue
        basis = Poly.one(field)
        scale = field.one
        for b in range(p):
            if b != a:
                basis = basis * Poly(field, (-b, 1))
                scale = scale * field(a - b)
        acc = acc + basis.scale(field(value) / scale)
    return FqFunction(p=p, table=tuple(values), reduced=acc)


def identity_function(p: int) -> FqFunction:
    return reduce_ring(Poly.x(PrimeField(p)))


def ring_compose(alpha: FqFunction, beta: FqFunction) -> FqFunction:
    """alpha o beta as functions; the representative is re-reduced."""
    _same_p(alpha, beta)
    field = PrimeField(alpha.p)
    table = tuple(alpha.table[b] for b in beta.table)
    composed = poly_compose(alpha.reduced, beta.reduced)
    reduced = poly_divmod(composed, _modulus(field))[1]
    result = FqFunction(p=alpha.p, table=table, reduced=reduced)
    return result


def is_permutation(phi: FqFunction) -> bool:
    return len(set(phi.table)) == phi.p


def classify(phi: FqFunction) -> FqClass:
    """Total trichotomy: zero, unit (permutation), or zero divisor."""
    if phi.is_zero:
        return FqClass.ZERO
    if is_permutation(phi):
        return FqClass.UNIT
    return FqClass.ZERO_DIVISOR


def zero_divisor_witness(phi: FqFunction) -> FqFunction:
    """A nonzero psi with psi o phi = 0: the monic vanishing polynomial of
    phi's image.  Its degree |image| < q keeps it nonzero as a function,
    and (psi + identity) o phi = phi is then a non-trivial self-decomposition.
    """
    if classify(phi) is not FqClass.ZERO_DIVISOR:
        raise PreconditionError("witness exists only for zero divisors")
    field = PrimeField(phi.p)
    psi = Poly.one(field)
    for c in phi.image():
        psi = psi * Poly(field, (-c, 1))
    witness = reduce_ring(psi)
    if witness.is_zero or any(witness.table[b] for b in phi.table):
        raise AssertionError("vanishing-polynomial witness failed (internal bug)")
    return witness


def all_functions(p: int):
    """Every function on F_p, as tables in lexicographic order (p^p of them)."""
    for values in product(range(p), repeat=p):
        yield from_table(p, values)


def count_permutations(p: int, limit: int = 5) -> int:
    """Exhaustively count the units among all p^p functions; equals p!."""
    if p > limit:
        raise PreconditionError(f"exhaustive enumeration capped at p <= {limit}")
    count = sum(1 for values in product(range(p), repeat=p)
                if len(set(values)) == p)
    assert count == factorial(p)
    return count

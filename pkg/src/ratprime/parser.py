"""Recursive-descent parser and printer for rational-function expressions.

Grammar (no implicit multiplication, '^' takes a natural-number literal):

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := base ('^' natural)?
    base   := 'x' | integer | '(' expr ')'

Integer literals map into the coefficient field (mod p over prime fields);
'/' builds genuine rational functions.  The printer emits strings inside
the same grammar, so print-then-parse is the identity.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import RatPrimeError
from .fields import Field, Fp
from .poly import Poly
from .ratfun import RatFun


class ParseError(RatPrimeError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_SYMBOLS = set("+-*/^()")


def _tokenize(source: str) -> list[tuple[str, str, int]]:
    tokens = []
    i = 0
    while i < len(source):
        c = source[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < len(source) and source[j].isdigit():
                j += 1
            tokens.append(("int", source[i:j], i))
            i = j
            continue
        if c == "x":
            tokens.append(("x", c, i))
            i += 1
            continue
        if c in _SYMBOLS:
            tokens.append((c, c, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {c!r}", i)
    tokens.append(("end", "", len(source)))
    return tokens


class _Parser:
    def __init__(self, tokens, field: Field):
        self.tokens = tokens
        self.pos = 0
        self.field = field

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind: str):
        tok = self.tokens[self.pos]
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1] or 'end of input'!r}",
                             tok[2])
        self.pos += 1
        return tok

    def expr(self) -> RatFun:
        value = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take(self.peek()[0])
            rhs = self.term()
            value = value + rhs if op[0] == "+" else value - rhs
        return value

    def term(self) -> RatFun:
        value = self.factor()
        while self.peek()[0] in ("*", "/"):
            op = self.take(self.peek()[0])
            rhs = self.factor()
            if op[0] == "*":
                value = value * rhs
            else:
                if rhs.is_zero:
                    raise ParseError("division by the zero polynomial", op[2])
                value = value / rhs
        return value

    def factor(self) -> RatFun:
        value = self.base()
        if self.peek()[0] == "^":
            self.take("^")
            exp = self.take("int")
            value = value ** int(exp[1])
        return value

    def base(self) -> RatFun:
        tok = self.peek()
        if tok[0] == "x":
            self.take("x")
            return RatFun(Poly.x(self.field))
        if tok[0] == "int":
            self.take("int")
            return RatFun.constant(self.field, int(tok[1]))
        if tok[0] == "(":
            self.take("(")
            value = self.expr()
            self.take(")")
            return value
        raise ParseError(f"expected 'x', an integer or '(', found "
                         f"{tok[1] or 'end of input'!r}", tok[2])


def parse_expression(source: str, field: Field) -> RatFun:
    parser = _Parser(_tokenize(source), field)
    value = parser.expr()
    parser.take("end")
    return value


# ---------------------------------------------------------------------------
# Printing (inverse of the parser, within the same grammar)


def _format_coeff(c) -> tuple[str, bool]:
    """Literal text for a coefficient's magnitude plus its sign flag."""
    if isinstance(c, Fp):
        return str(c.value), False
    negative = c < 0
    mag = -c if negative else c
    text = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
    return text, negative


def format_poly(f: Poly, var: str = "x") -> str:
    """Grammar-safe polynomial text.  A leading negative term is rendered as
    a subtraction from zero, since the grammar has no unary minus."""
    if f.is_zero:
        return "0"
    pieces: list[str] = []
    for i in range(f.degree, -1, -1):
        c = f.coeff(i)
        if not c:
            continue
        text, negative = _format_coeff(c)
        if i == 0:
            body = text
        else:
            power = var if i == 1 else f"{var}^{i}"
            body = power if text == "1" else f"{text}*{power}"
        if not pieces:
            pieces.append(f"0-{body}" if negative else body)
        else:
            pieces.append(f"-{body}" if negative else f"+{body}")
    return "".join(pieces)


def _needs_parens(text: str) -> bool:
    return any(op in text for op in "+-")


def format_ratfun(f: RatFun, var: str = "x") -> str:
    num = format_poly(f.numerator, var)
    if f.denominator.degree == 0:
        return num
    den = format_poly(f.denominator, var)
    num_part = f"({num})" if _needs_parens(num) else num
    den_part = f"({den})" if (_needs_parens(den) or "*" in den) else den
    return f"{num_part}/{den_part}"

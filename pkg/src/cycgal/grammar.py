"""Text forms for field elements, polynomials, matrices and factor types.

The polynomial grammar (whitespace insignificant, `s` denotes sqrt(D) with D
supplied out of band):

    poly  := term (('+'|'-') term)*
    term  := coeff ('*'? 'X' ('^' uint)?)? | 'X' ('^' uint)?
    coeff := rat | '(' rat (('+'|'-') rat? '*'? 's')? ')' ('/' uint)?
    rat   := '-'? uint ('/' uint)?

Matrices are written `a,b;c,d` with the same entry grammar; factor types as
`(5,1,1,1,1,1)`.  Formatting is the `str()` of the corresponding value; every
printed form parses back to an equal value.
"""

from __future__ import annotations

from fractions import Fraction

from .arith import QuadRat
from .poly import Poly

__all__ = [
    "ParseError",
    "parse_rational",
    "parse_quadrat",
    "parse_poly",
    "parse_matrix",
    "parse_factor_type",
    "parse_poly_lines",
]


class ParseError(ValueError):
    def __init__(self, message: str, pos: int, line: int | None = None):
        where = f"line {line}, col {pos + 1}" if line is not None else f"col {pos + 1}"
        super().__init__(f"{where}: {message}")
        self.pos = pos
        self.line = line


class _Tokens:
    """Integer and single-character symbol tokens with positions."""

    def __init__(self, text: str):
        self.text = text
        self.items: list[tuple[str, object, int]] = []
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            if ch.isdigit():
                j = i
                while j < len(text) and text[j].isdigit():
                    j += 1
                self.items.append(("int", int(text[i:j]), i))
                i = j
                continue
            if ch in "+-*/^(),;sX":
                self.items.append((ch, ch, i))
                i += 1
                continue
            raise ParseError(f"unexpected character {ch!r}", i)
        self.k = 0

    def peek(self) -> str | None:
        return self.items[self.k][0] if self.k < len(self.items) else None

    def pos(self) -> int:
        if self.k < len(self.items):
            return self.items[self.k][2]
        return len(self.text)

    def take(self, kind: str | None = None):
        if self.k >= len(self.items):
            raise ParseError(f"unexpected end of input (wanted {kind})", len(self.text))
        tok = self.items[self.k]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[0]!r}", tok[2])
        self.k += 1
        return tok

    def accept(self, kind: str) -> bool:
        if self.peek() == kind:
            self.k += 1
            return True
        return False

    def expect_end(self):
        if self.k < len(self.items):
            tok = self.items[self.k]
            raise ParseError(f"trailing input {tok[0]!r}", tok[2])


def _rat(tz: _Tokens) -> Fraction:
    neg = tz.accept("-")
    if not neg:
        tz.accept("+")
    num = tz.take("int")[1]
    den = tz.take("int")[1] if tz.accept("/") else 1
    if den == 0:
        raise ParseError("zero denominator", tz.pos())
    q = Fraction(num, den)
    return -q if neg else q


def _qsum(tz: _Tokens, D: int) -> QuadRat:
    """Signed sum of rational and `rat*s` atoms."""
    u = Fraction(0)
    v = Fraction(0)
    first = True
    while True:
        if first:
            sign = -1 if tz.accept("-") else 1
            first = False
        elif tz.accept("+"):
            sign = 1
        elif tz.accept("-"):
            sign = -1
        else:
            break
        if tz.peek() == "s":
            tz.take("s")
            v += sign
            continue
        mag = _rat(tz)
        if tz.accept("*"):
            tz.take("s")
            v += sign * mag
        elif tz.peek() == "s":
            tz.take("s")
            v += sign * mag
        else:
            u += sign * mag
    if D == 1 and v != 0:
        raise ParseError("sqrt symbol 's' is not allowed when D=1", tz.pos())
    return QuadRat(u, v, D)


def _quadrat_value(tz: _Tokens, D: int) -> QuadRat:
    if tz.peek() == "(":
        tz.take("(")
        val = _qsum(tz, D)
        tz.take(")")
        if tz.accept("/"):
            den = tz.take("int")[1]
            if den == 0:
                raise ParseError("zero denominator", tz.pos())
            val = val * Fraction(1, den)
        return val
    return _qsum(tz, D)


def parse_rational(text: str) -> Fraction:
    tz = _Tokens(text)
    q = _rat(tz)
    tz.expect_end()
    return q


def parse_quadrat(text: str, D: int = 1) -> QuadRat:
    tz = _Tokens(text)
    val = _quadrat_value(tz, D)
    tz.expect_end()
    return val


def parse_poly(text: str, D: int = 1) -> Poly:
    tz = _Tokens(text)
    if tz.peek() is None:
        raise ParseError("empty polynomial", 0)
    coeffs: dict[int, QuadRat] = {}
    zero = QuadRat.rational(0, D)
    first = True
    while True:
        if first:
            sign = -1 if tz.accept("-") else 1
            first = False
        elif tz.accept("+"):
            sign = 1
        elif tz.accept("-"):
            sign = -1
        else:
            break
        kind = tz.peek()
        if kind is None:
            raise ParseError("dangling operator", tz.pos())
        if kind == "X":
            c = QuadRat.rational(1, D)
        elif kind == "(":
            tz.take("(")
            c = _qsum(tz, D)
            tz.take(")")
            if tz.accept("/"):
                den = tz.take("int")[1]
                if den == 0:
                    raise ParseError("zero denominator", tz.pos())
                c = c * Fraction(1, den)
            tz.accept("*")
        elif kind == "int":
            c = QuadRat.rational(_rat(tz), D)
            tz.accept("*")
        else:
            raise ParseError(f"unexpected {kind!r} in term", tz.pos())
        k = 0
        if tz.accept("X"):
            k = tz.take("int")[1] if tz.accept("^") else 1
        coeffs[k] = coeffs.get(k, zero) + sign * c
    tz.expect_end()
    size = max(coeffs) + 1 if coeffs else 0
    out = [zero] * size
    for k, c in coeffs.items():
        out[k] = c
    return Poly(out, D)


def parse_matrix(text: str, D: int = 1):
    from .moebius import Mat2

    rows = text.split(";")
    if len(rows) != 2:
        raise ParseError("matrix needs exactly two ';'-separated rows", 0)
    entries = []
    for row in rows:
        cells = row.split(",")
        if len(cells) != 2:
            raise ParseError("each matrix row needs exactly two ','-separated entries", 0)
        for cell in cells:
            entries.append(parse_quadrat(cell, D))
    return Mat2(*entries)


def parse_factor_type(text: str):
    from .modp import FactorType

    tz = _Tokens(text)
    tz.take("(")
    degrees = [tz.take("int")[1]]
    while tz.accept(","):
        degrees.append(tz.take("int")[1])
    tz.take(")")
    tz.expect_end()
    return FactorType(degrees)


def parse_poly_lines(text: str, D: int = 1) -> list[Poly]:
    """One polynomial per line; '#' starts a comment, blank lines skipped."""
    polys = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            polys.append(parse_poly(line, D))
        except ParseError as exc:
            raise ParseError(str(exc).split(": ", 1)[-1], exc.pos, line=lineno) from None
    return polys

"""Ring-description DSL and element literal syntax.

Ring grammar (whitespace-insensitive)::

    spec := term { "x" term }
    term := "Z" | "Zn(" nat ")" | "Mat(" nat "," spec ")"
          | "Tri(" nat "," spec ")" | "Zi7" | "Qi7"
          | "SkewS(" nat "," nat ")"

Element literals: plain integers for Z and Zn; "a+b*w" with w = sqrt(-7)
for the quadratic rings; nested bracket arrays for matrix rings;
parenthesized tuples for products; coefficient lists (lowest degree
first) for the skew subring S.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError, SemanticError, UnsupportedDescriptor
from .matrices import MatrixOverRing
from .quadratic import QuadraticValue
from .rings import (
    IntegerRing,
    MatrixRing,
    ModularRing,
    ProductRing,
    QuadraticFieldRing,
    QuadraticIntegerRing,
    RingDescriptor,
    SkewSubringS,
    UpperTriangularRing,
)


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def error(self, expected: str):
        raise ParseError(self.pos, expected, self.text)

    def expect(self, ch: str):
        if self.peek() != ch:
            self.error(repr(ch))
        self.pos += 1

    def name(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalnum():
            self.pos += 1
        if start == self.pos:
            self.error("name")
        return self.text[start:self.pos]

    def nat(self) -> int:
        self.skip_ws()
        start = self.pos
        # ascii digits only: str.isdigit admits characters int() rejects
        while self.pos < len(self.text) and self.text[self.pos] in "0123456789":
            self.pos += 1
        if start == self.pos:
            self.error("number")
        return int(self.text[start:self.pos])

    def integer(self) -> int:
        self.skip_ws()
        sign = 1
        ch = self.peek()
        if ch and ch in "+-":
            sign = -1 if ch == "-" else 1
            self.pos += 1
        return sign * self.nat()

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)


# --------------------------------------------------------------------------
# Ring specs


def parse_ring_spec(text: str) -> RingDescriptor:
    sc = _Scanner(text)
    ring = _spec(sc)
    if not sc.at_end():
        sc.error("end of input or 'x'")
    return ring


def _spec(sc: _Scanner) -> RingDescriptor:
    factors = [_term(sc)]
    while True:
        save = sc.pos
        sc.skip_ws()
        if sc.pos < len(sc.text) and sc.text[sc.pos] == "x":
            sc.pos += 1
            factors.append(_term(sc))
        else:
            sc.pos = save
            break
    if len(factors) == 1:
        return factors[0]
    return ProductRing(tuple(factors))


def _term(sc: _Scanner) -> RingDescriptor:
    offset = sc.pos
    name = sc.name()
    try:
        if name == "Z":
            return IntegerRing()
        if name == "Zn":
            sc.expect("(")
            n = sc.nat()
            sc.expect(")")
            return ModularRing(n)
        if name in ("Mat", "Tri"):
            sc.expect("(")
            k = sc.nat()
            sc.expect(",")
            base = _spec(sc)
            sc.expect(")")
            cls = MatrixRing if name == "Mat" else UpperTriangularRing
            return cls(k, base)
        if name == "Zi7":
            return QuadraticIntegerRing()
        if name == "Qi7":
            return QuadraticFieldRing()
        if name == "SkewS":
            sc.expect("(")
            deg = sc.nat()
            sc.expect(",")
            height = sc.nat()
            sc.expect(")")
            return SkewSubringS(deg, height)
    except UnsupportedDescriptor as exc:
        raise SemanticError(str(exc)) from exc
    raise ParseError(offset, "Z | Zn( | Mat( | Tri( | Zi7 | Qi7 | SkewS(",
                     sc.text)


# --------------------------------------------------------------------------
# Element literals


def _rational(sc: _Scanner) -> Fraction:
    num = sc.integer()
    if sc.peek() == "/":
        sc.pos += 1
        den = sc.nat()
        return Fraction(num, den)
    return Fraction(num)


def _quadratic(sc: _Scanner) -> QuadraticValue:
    """Sum of terms: rational, rational*w, w, -w, ..."""
    a = Fraction(0)
    b = Fraction(0)
    first = True
    while True:
        sc.skip_ws()
        ch = sc.peek()
        if first:
            sign = 1
            if ch and ch in "+-":
                sign = -1 if ch == "-" else 1
                sc.pos += 1
        else:
            if not ch or ch not in "+-":
                break
            sign = -1 if ch == "-" else 1
            sc.pos += 1
        first = False
        if sc.peek() == "w":
            sc.pos += 1
            b += sign
            continue
        coeff = sign * _rational(sc)
        if sc.peek() == "*":
            sc.pos += 1
            if sc.peek() != "w":
                sc.error("'w'")
            sc.pos += 1
            b += coeff
        else:
            a += coeff
    return QuadraticValue(a, b)


def _element(sc: _Scanner, ring: RingDescriptor):
    if isinstance(ring, IntegerRing):
        return sc.integer()
    if isinstance(ring, ModularRing):
        return sc.integer() % ring.modulus
    if isinstance(ring, QuadraticIntegerRing):
        q = _quadratic(sc)
        if not q.is_integral():
            raise SemanticError(f"{q} is not in Z[sqrt(-7)]")
        return (int(q.a), int(q.b))
    if isinstance(ring, QuadraticFieldRing):
        return _quadratic(sc)
    if isinstance(ring, SkewSubringS):
        sc.expect("[")
        coeffs = []
        if sc.peek() != "]":
            coeffs.append(_quadratic(sc))
            while sc.peek() == ",":
                sc.pos += 1
                coeffs.append(_quadratic(sc))
        sc.expect("]")
        from .skew import in_s, normalize

        poly = normalize(coeffs)
        if not in_s(poly):
            raise SemanticError("constant coefficient not in Z[sqrt(-7)]")
        return poly
    if isinstance(ring, (MatrixRing, UpperTriangularRing)):
        rows = _bracket_rows(sc, ring.base)
        k = ring.size
        if len(rows) != k or any(len(r) != k for r in rows):
            raise SemanticError(f"expected {k}x{k} entries")
        if isinstance(ring, UpperTriangularRing):
            z = ring.base.zero()
            if any(rows[i][j] != z for i in range(k) for j in range(i)):
                raise SemanticError("nonzero entry below the diagonal")
        return tuple(tuple(r) for r in rows)
    if isinstance(ring, ProductRing):
        sc.expect("(")
        parts = [_element(sc, ring.factors[0])]
        for f in ring.factors[1:]:
            sc.expect(",")
            parts.append(_element(sc, f))
        sc.expect(")")
        return tuple(parts)
    raise UnsupportedDescriptor(str(ring))


def _bracket_rows(sc: _Scanner, base: RingDescriptor):
    sc.expect("[")
    rows = []
    while True:
        sc.expect("[")
        row = [_element(sc, base)]
        while sc.peek() == ",":
            sc.pos += 1
            row.append(_element(sc, base))
        sc.expect("]")
        rows.append(row)
        if sc.peek() == ",":
            sc.pos += 1
            continue
        break
    sc.expect("]")
    return rows


def parse_element(ring: RingDescriptor, text: str):
    sc = _Scanner(text)
    value = _element(sc, ring)
    if not sc.at_end():
        sc.error("end of input")
    return value


def format_element(ring: RingDescriptor, a) -> str:
    if isinstance(ring, (IntegerRing, ModularRing)):
        return str(a)
    if isinstance(ring, QuadraticIntegerRing):
        return str(QuadraticValue(a[0], a[1]))
    if isinstance(ring, QuadraticFieldRing):
        return str(a)
    if isinstance(ring, SkewSubringS):
        return "[" + ", ".join(str(c) for c in a) + "]"
    if isinstance(ring, (MatrixRing, UpperTriangularRing)):
        return (
            "["
            + ",".join(
                "[" + ",".join(format_element(ring.base, x) for x in row) + "]"
                for row in a
            )
            + "]"
        )
    if isinstance(ring, ProductRing):
        return (
            "("
            + ", ".join(
                format_element(f, x) for f, x in zip(ring.factors, a)
            )
            + ")"
        )
    raise UnsupportedDescriptor(str(ring))


# --------------------------------------------------------------------------
# Matrix literals (matrices whose entries live in `ring`)


def parse_matrix_literal(ring: RingDescriptor, text: str) -> MatrixOverRing:
    sc = _Scanner(text)
    rows = _bracket_rows(sc, ring)
    if not sc.at_end():
        sc.error("end of input")
    if any(len(r) != len(rows[0]) for r in rows):
        raise SemanticError("ragged matrix literal")
    return MatrixOverRing(ring, tuple(tuple(r) for r in rows))


def format_matrix(M: MatrixOverRing) -> str:
    return (
        "["
        + ",".join(
            "[" + ",".join(format_element(M.ring, x) for x in row) + "]"
            for row in M.rows
        )
        + "]"
    )

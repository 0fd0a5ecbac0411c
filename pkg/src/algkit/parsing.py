"""Reader and writer for the algebra definition format.

One statement per line (``;`` also separates statements), ``#`` starts a
comment::

    dim 4
    param alpha = 2 exclude 1
    e1*e2 = e4
    e2*e1 = ((1+alpha)/(1-alpha)) e4
    e2*e2 = -2e3 + e4

Unlisted products are zero.  Coefficients are rational literals, declared
parameter names, or parenthesised expressions over both using ``+ - * /``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .algebra import ParameterBinding, StructureConstants
from .errors import ParameterError, ParseError
from .linalg import ZERO

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")
_BASIS = re.compile(r"e(\d+)$")


@dataclass
class _Tok:
    kind: str  # "num", "id", "op", "end"
    text: str
    col: int


def _tokenize(stmt: str, line: int, col0: int) -> list[_Tok]:
    toks = []
    pos = 0
    while stmt[pos:].strip():
        m = _TOKEN.match(stmt, pos)
        if m is None or m.end() == pos:
            break
        num, ident, op = m.groups()
        col = col0 + m.start(m.lastindex)
        if num is not None:
            toks.append(_Tok("num", num, col))
        elif ident is not None:
            toks.append(_Tok("id", ident, col))
        elif op is not None:
            if op not in "+-*/()=,":
                raise ParseError(f"unexpected character {op!r}", line, col)
            toks.append(_Tok("op", op, col))
        pos = m.end()
    toks.append(_Tok("end", "", col0 + len(stmt)))
    return toks


class _Statement:
    def __init__(self, toks: list[_Tok], line: int):
        self.toks = toks
        self.i = 0
        self.line = line

    def peek(self, offset: int = 0) -> _Tok:
        return self.toks[min(self.i + offset, len(self.toks) - 1)]

    def next(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg: str, tok: _Tok | None = None) -> ParseError:
        tok = tok or self.peek()
        return ParseError(msg, self.line, tok.col + 1)

    def expect(self, kind: str, text: str | None = None) -> _Tok:
        t = self.peek()
        if t.kind != kind or (text is not None and t.text != text):
            want = repr(text) if text else kind
            got = repr(t.text) if t.kind != "end" else "end of line"
            raise self.error(f"expected {want}, got {got}")
        return self.next()

    def at_op(self, text: str) -> bool:
        t = self.peek()
        return t.kind == "op" and t.text == text


class _Parser:
    def __init__(self, overrides: Mapping[str, object] | None):
        self.dim: int | None = None
        self.params: dict[str, ParameterBinding] = {}
        self.overrides = {k: Fraction(v) if not isinstance(v, Fraction) else v
                          for k, v in (overrides or {}).items()}
        self.products: dict[tuple[int, int], list[Fraction]] = {}

    # -- statements ---------------------------------------------------------
    def statement(self, st: _Statement) -> None:
        head = st.peek()
        if head.kind == "id" and head.text == "dim":
            self.dim_stmt(st)
        elif head.kind == "id" and head.text == "param":
            self.param_stmt(st)
        elif head.kind == "id":
            self.product_stmt(st)
        else:
            raise st.error(f"unexpected {head.text!r} at start of statement")
        if st.peek().kind != "end":
            raise st.error(f"unexpected {st.peek().text!r}")

    def dim_stmt(self, st: _Statement) -> None:
        kw = st.next()
        if self.dim is not None:
            raise st.error("dim declared twice", kw)
        n = st.expect("num")
        self.dim = int(n.text)
        if self.dim < 1:
            raise st.error("dim must be positive", n)

    def param_stmt(self, st: _Statement) -> None:
        st.next()
        name = st.expect("id")
        if _BASIS.match(name.text) or name.text in ("dim", "param", "exclude"):
            raise st.error(f"{name.text!r} cannot be used as a parameter name", name)
        if name.text in self.params:
            raise st.error(f"parameter {name.text!r} declared twice", name)
        st.expect("op", "=")
        value = self.rational_literal(st)
        excluded = []
        if st.peek().kind == "id" and st.peek().text == "exclude":
            st.next()
            excluded.append(self.rational_literal(st))
            while st.at_op(","):
                st.next()
                excluded.append(self.rational_literal(st))
        value = self.overrides.get(name.text, value)
        if value in excluded:
            raise ParameterError(f"excluded parameter value {name.text}={value}")
        self.params[name.text] = ParameterBinding(name.text, value, tuple(excluded))

    def product_stmt(self, st: _Statement) -> None:
        if self.dim is None:
            raise st.error("products must follow the dim statement")
        left = self.basis_symbol(st)
        st.expect("op", "*")
        right = self.basis_symbol(st)
        eq = st.expect("op", "=")
        key = (left, right)
        if key in self.products:
            raise st.error(f"duplicate definition of e{left}*e{right}", eq)
        self.products[key] = self.rhs(st)

    # -- pieces -------------------------------------------------------------
    def basis_symbol(self, st: _Statement) -> int:
        t = st.peek()
        if t.kind != "id":
            raise st.error("expected a basis symbol like e1")
        m = _BASIS.match(t.text)
        if not m:
            raise st.error(f"unknown basis symbol {t.text!r}")
        k = int(m.group(1))
        if not 1 <= k <= self.dim:
            raise st.error(f"basis index out of range: {t.text} in dimension {self.dim}")
        st.next()
        return k

    def rational_literal(self, st: _Statement) -> Fraction:
        sign = 1
        while st.peek().kind == "op" and st.peek().text in "+-":
            if st.next().text == "-":
                sign = -sign
        num = Fraction(int(st.expect("num").text))
        if st.at_op("/"):
            st.next()
            den = st.expect("num")
            if int(den.text) == 0:
                raise st.error("zero denominator", den)
            num /= int(den.text)
        return sign * num

    def rhs(self, st: _Statement) -> list[Fraction]:
        coords = [ZERO] * self.dim
        if st.peek().kind == "num" and st.peek().text == "0" and st.peek(1).kind == "end":
            st.next()
            return coords
        first = True
        while True:
            sign = Fraction(1)
            t = st.peek()
            if t.kind == "op" and t.text in "+-":
                st.next()
                if t.text == "-":
                    sign = -sign
            elif not first:
                break
            coeff = self.coefficient(st)
            k = self.basis_symbol(st)
            coords[k - 1] += sign * coeff
            first = False
            if st.peek().kind == "end":
                break
        return coords

    def coefficient(self, st: _Statement) -> Fraction:
        t = st.peek()
        if t.kind == "id" and _BASIS.match(t.text):
            return Fraction(1)
        if t.kind == "num":
            c = self.rational_literal(st)
        elif t.kind == "op" and t.text == "(":
            c = self.expr(st)
        elif t.kind == "id":
            nxt = st.peek(1)
            if nxt.kind == "end" or (nxt.kind == "op" and nxt.text in "+-"):
                raise st.error(f"unknown basis symbol {t.text!r}")
            c = self.param_value(st)
        else:
            raise st.error(f"expected a term, got {t.text!r}" if t.kind != "end" else "expected a term")
        if st.at_op("*"):
            st.next()
        return c

    def param_value(self, st: _Statement) -> Fraction:
        t = st.next()
        if t.text not in self.params:
            raise ParameterError(f"line {st.line}, column {t.col + 1}: unbound parameter {t.text!r}")
        return self.params[t.text].value

    def expr(self, st: _Statement) -> Fraction:
        val = self.term(st)
        while st.peek().kind == "op" and st.peek().text in "+-":
            op = st.next().text
            rhs = self.term(st)
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self, st: _Statement) -> Fraction:
        val = self.factor(st)
        while st.peek().kind == "op" and st.peek().text in "*/":
            op = st.next()
            rhs = self.factor(st)
            if op.text == "*":
                val *= rhs
            elif rhs == 0:
                bound = ", ".join(f"{p.name}={p.value}" for p in self.params.values())
                raise ParameterError(f"line {st.line}, column {op.col + 1}: division by zero"
                                     + (f" at {bound}" if bound else ""))
            else:
                val /= rhs
        return val

    def factor(self, st: _Statement) -> Fraction:
        t = st.peek()
        if t.kind == "op" and t.text in "+-":
            st.next()
            v = self.factor(st)
            return -v if t.text == "-" else v
        if t.kind == "num":
            return Fraction(int(st.next().text))
        if t.kind == "id":
            if _BASIS.match(t.text):
                raise st.error("basis symbols are not allowed inside a coefficient")
            return self.param_value(st)
        if t.kind == "op" and t.text == "(":
            st.next()
            v = self.expr(st)
            st.expect("op", ")")
            return v
        raise st.error(f"unexpected {t.text!r} in expression" if t.kind != "end" else "unexpected end of line")


def _statements(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        col = 0
        for piece in line.split(";"):
            if piece.strip():
                yield lineno, col, piece
            col += len(piece) + 1


def parse_algebra(text: str, name: str = "", overrides: Mapping[str, object] | None = None) -> StructureConstants:
    """Parse a definition document into structure constants.

    ``overrides`` rebinds declared parameters (values as Fractions, ints or
    ``"p/q"`` strings).
    """
    p = _Parser(overrides)
    for lineno, col, stmt in _statements(text):
        st = _Statement(_tokenize(stmt, lineno, col), lineno)
        p.statement(st)
    if p.dim is None:
        raise ParseError("missing dim statement", 1, 1)
    unknown = sorted(set(p.overrides) - set(p.params))
    if unknown:
        raise ParameterError(f"unknown parameter(s): {', '.join(unknown)}")
    return StructureConstants.from_products(p.dim, p.products, name=name,
                                            parameters=tuple(p.params.values()))


def _format_term(c: Fraction, k: int, first: bool) -> str:
    sign = "-" if c < 0 else "+"
    mag = abs(c)
    body = f"e{k}" if mag == 1 else f"{mag} e{k}"
    if first:
        return body if sign == "+" else f"-{body}"
    return f" {sign} {body}"


def serialize_algebra(sc: StructureConstants) -> str:
    """Definition text that parses back to the same tensor and bindings."""
    lines = []
    if sc.name:
        lines.append(f"# {sc.name}")
    lines.append(f"dim {sc.dim}")
    for b in sc.parameters:
        s = f"param {b.name} = {b.value}"
        if b.excluded:
            s += " exclude " + ", ".join(str(x) for x in b.excluded)
        lines.append(s)
    n = sc.dim
    for i in range(n):
        for j in range(n):
            coords = sc.product(i, j)
            if not any(coords):
                continue
            terms = []
            for k, c in enumerate(coords):
                if c:
                    terms.append(_format_term(c, k + 1, not terms))
            lines.append(f"e{i + 1}*e{j + 1} = " + "".join(terms))
    return "\n".join(lines) + "\n"

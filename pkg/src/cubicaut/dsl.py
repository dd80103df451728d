"""Text input formats: polynomial expressions, points, permutations.

Polynomial grammar (whitespace insignificant, '*' always explicit):

    expr   := term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := scalar | var | factor '^' nat | '(' expr ')'
    var    := 'x' digit+
    scalar := int | int '/' posint | 'w' | 'i' | 'z5'

'w' is a primitive cube root of unity, 'i' a primitive fourth root, 'z5' a
primitive fifth root.  A leading sign on the first term is accepted.
Points are colon-separated scalar tuples, optionally parenthesised.
Permutations use 1-indexed cycle notation like "(1,2,3)(4,5,6)".
"""

from __future__ import annotations

import re
from fractions import Fraction

from .field import Cyclotomic, zeta
from .poly import MultiPoly, PolyRing

__all__ = ["DslError", "parse_poly", "parse_scalar", "parse_point", "parse_cycles"]


class DslError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_TOKEN = re.compile(r"\s*(?:(\d+)|(x\d+)|(w|z5|i)|([()+\-*/^:]))")

_ROOT_CONDUCTOR = {"w": 3, "i": 4, "z5": 5}


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.items = []  # (kind, value, position)
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None:
                break
            if m.group(1) is not None:
                self.items.append(("int", m.group(1), m.start(1)))
            elif m.group(2) is not None:
                self.items.append(("var", m.group(2), m.start(2)))
            elif m.group(3) is not None:
                self.items.append(("root", m.group(3), m.start(3)))
            else:
                self.items.append(("op", m.group(4), m.start(4)))
            pos = m.end()
        rest = text[pos:].strip()
        if rest:
            raise DslError(f"unexpected character {rest[0]!r}", pos + text[pos:].index(rest[0]))
        self.k = 0

    def peek(self):
        if self.k < len(self.items):
            return self.items[self.k]
        return ("end", "", len(self.text))

    def next(self):
        tok = self.peek()
        self.k += 1
        return tok

    def expect_op(self, op):
        kind, val, pos = self.next()
        if kind != "op" or val != op:
            raise DslError(f"expected {op!r}", pos)


class _Parser:
    def __init__(self, text: str, ring: PolyRing, conductor: int):
        self.toks = _Tokens(text)
        self.ring = ring
        self.conductor = conductor

    def parse(self) -> MultiPoly:
        p = self.expr()
        kind, val, pos = self.toks.peek()
        if kind != "end":
            raise DslError(f"unexpected {val!r}", pos)
        return p

    def expr(self) -> MultiPoly:
        kind, val, _ = self.toks.peek()
        negate = False
        if kind == "op" and val in "+-":
            self.toks.next()
            negate = val == "-"
        acc = self.term()
        if negate:
            acc = -acc
        while True:
            kind, val, _ = self.toks.peek()
            if kind == "op" and val in "+-":
                self.toks.next()
                t = self.term()
                acc = acc - t if val == "-" else acc + t
            else:
                return acc

    def term(self) -> MultiPoly:
        acc = self.factor()
        while True:
            kind, val, _ = self.toks.peek()
            if kind == "op" and val == "*":
                self.toks.next()
                acc = acc * self.factor()
            else:
                return acc

    def factor(self) -> MultiPoly:
        kind, val, pos = self.toks.peek()
        if kind == "op" and val == "(":
            self.toks.next()
            inner = self.expr()
            self.toks.expect_op(")")
            acc = inner
        elif kind == "var":
            self.toks.next()
            if val not in self.ring.names:
                raise DslError(f"unknown variable {val!r}", pos)
            acc = self.ring.var(val)
        elif kind in ("int", "root"):
            acc = self.ring.constant(self.scalar())
        else:
            raise DslError(f"expected a factor, found {val!r}" if val else "expected a factor", pos)
        while True:
            kind, val, pos = self.toks.peek()
            if kind == "op" and val == "^":
                self.toks.next()
                kind, ev, epos = self.toks.next()
                if kind != "int":
                    raise DslError("expected a natural number exponent", epos)
                acc = acc ** int(ev)
            else:
                return acc

    def scalar(self) -> Cyclotomic:
        kind, val, pos = self.toks.next()
        if kind == "int":
            num = int(val)
            kind2, val2, _ = self.toks.peek()
            if kind2 == "op" and val2 == "/":
                self.toks.next()
                kind3, den, dpos = self.toks.next()
                if kind3 != "int" or int(den) == 0:
                    raise DslError("expected a positive integer denominator", dpos)
                return Cyclotomic.from_rational(Fraction(num, int(den)))
            return Cyclotomic.from_rational(num)
        if kind == "root":
            need = _ROOT_CONDUCTOR[val]
            if self.conductor % need != 0:
                raise DslError(f"literal {val!r} does not lie in the context field", pos)
            return zeta(need)
        raise DslError("expected a scalar", pos)


def parse_poly(text: str, ring: PolyRing, conductor: int = 60) -> MultiPoly:
    """Parse a polynomial over `ring`.

    `conductor` bounds the field context: a root-of-unity literal is only
    legal when its conductor divides it (use 1 for a plain rational context).
    """
    return _Parser(text, ring, conductor).parse()


def parse_scalar(text: str, conductor: int = 60) -> Cyclotomic:
    ring = PolyRing(())
    p = _Parser(text, ring, conductor)
    q = p.parse()
    return q.constant_coefficient()


def parse_point(text: str, conductor: int = 60):
    """Colon-separated coordinates, e.g. "(1:0:-1:0:0)" or "1:w:0"."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    coords = []
    for chunk in body.split(":"):
        if not chunk.strip():
            raise DslError("empty coordinate", text.find("::"))
        coords.append(parse_scalar(chunk, conductor))
    from .geometry import ProjPoint

    return ProjPoint(coords)


def parse_cycles(text: str, degree: int):
    """1-indexed cycle notation -> Perm, e.g. "(1,2,3)(4,5,6)"."""
    from .groups import Perm

    body = text.strip().replace(" ", "")
    if body in ("", "()", "e", "id"):
        return Perm.identity(degree)
    if not re.fullmatch(r"(\(\d+(,\d+)*\))+", body):
        raise DslError("malformed cycle notation", 0)
    total = Perm.identity(degree)
    # rightmost cycle acts first; for disjoint cycles the order is irrelevant
    for cyc in reversed(re.findall(r"\(([\d,]+)\)", body)):
        entries = [int(s) - 1 for s in cyc.split(",")]
        if any(e < 0 or e >= degree for e in entries):
            raise DslError("cycle entry out of range", 0)
        if len(set(entries)) != len(entries):
            raise DslError("repeated entry in a cycle", 0)
        images = list(range(degree))
        for a, b in zip(entries, entries[1:] + entries[:1]):
            images[a] = b
        total = Perm(tuple(images)) * total
    return total

"""Expression and session-file parsing.

Grammar, loosest first::

    expr   := circ (('+' | '-') circ)*
    circ   := prod (('o' | '∘') prod)*
    prod   := unary ('*' unary)*
    unary  := '-' unary | power
    power  := atom ('^' INT)?
    atom   := INT ('/' INT)? | IDENT ('[' '-'? INT ']')?
            | 'D' ('^' INT)? '(' expr ')' | '(' expr ')'

A bare identifier ``a`` means ``a[-1]``.  ``o`` and ``D`` are reserved.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .algebra import Alphabet, Polynomial, circle, derive
from .errors import NotHomogeneousError, ParseError, SemanticError, WeightError

RESERVED = {"o", "D"}

_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<num>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[-+*/^()\[\]=∘])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # num, ident, op, end
    text: str
    line: int
    col: int


def tokenize(text: str, line: int = 1) -> list[Token]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos + 1)
        kind = m.lastgroup
        if kind != "ws":
            tok = m.group()
            if kind == "op" and tok == "∘":
                kind, tok = "ident", "o"
            out.append(Token(kind, tok, line, pos + 1))
        pos = m.end()
    out.append(Token("end", "", line, len(text) + 1))
    return out


# -- ast --------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    name: str
    bracket: int | None  # None: plain generator, read as bracket -1
    line: int = field(default=1, compare=False)
    col: int = field(default=1, compare=False)


@dataclass(frozen=True)
class BinOp:
    op: str  # + - * o
    left: "Ast"
    right: "Ast"


@dataclass(frozen=True)
class Neg:
    arg: "Ast"


@dataclass(frozen=True)
class Pow:
    base: "Ast"
    exp: int


@dataclass(frozen=True)
class Deriv:
    order: int
    arg: "Ast"


Ast = Union[Num, Var, BinOp, Neg, Pow, Deriv]


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.toks = tokens
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, msg: str, tok: Token | None = None) -> ParseError:
        t = tok or self.tok
        return ParseError(msg, t.line, t.col)

    def eat(self, kind: str, text: str | None = None) -> Token:
        t = self.tok
        if t.kind != kind or (text is not None and t.text != text):
            want = text or kind
            got = t.text or "end of input"
            raise self.error(f"expected {want!r}, got {got!r}")
        self.i += 1
        return t

    def at(self, kind: str, text: str | None = None) -> bool:
        t = self.tok
        return t.kind == kind and (text is None or t.text == text)

    def integer(self) -> int:
        return int(self.eat("num").text)

    def parse(self) -> Ast:
        node = self.expr()
        if not self.at("end"):
            raise self.error(f"unexpected {self.tok.text!r}")
        return node

    def expr(self) -> Ast:
        node = self.circ()
        while self.at("op", "+") or self.at("op", "-"):
            op = self.eat("op").text
            node = BinOp(op, node, self.circ())
        return node

    def circ(self) -> Ast:
        node = self.prod()
        while self.at("ident", "o"):
            self.eat("ident")
            node = BinOp("o", node, self.prod())
        return node

    def prod(self) -> Ast:
        node = self.unary()
        while self.at("op", "*"):
            self.eat("op")
            node = BinOp("*", node, self.unary())
        return node

    def unary(self) -> Ast:
        if self.at("op", "-"):
            self.eat("op")
            return Neg(self.unary())
        return self.power()

    def power(self) -> Ast:
        node = self.atom()
        if self.at("op", "^"):
            self.eat("op")
            node = Pow(node, self.integer())
        return node

    def atom(self) -> Ast:
        t = self.tok
        if t.kind == "num":
            p = self.integer()
            if self.at("op", "/"):
                self.eat("op")
                if not self.at("num"):
                    raise self.error("malformed rational: expected a denominator")
                q = self.integer()
                if q == 0:
                    raise self.error("malformed rational: zero denominator", t)
                return Num(Fraction(p, q))
            return Num(Fraction(p))
        if t.kind == "ident" and t.text == "D":
            self.eat("ident")
            order = 1
            if self.at("op", "^"):
                self.eat("op")
                order = self.integer()
            self.eat("op", "(")
            arg = self.expr()
            self.eat("op", ")")
            return Deriv(order, arg)
        if t.kind == "ident" and t.text != "o":
            self.eat("ident")
            if not self.at("op", "["):
                return Var(t.text, None, t.line, t.col)
            self.eat("op")
            sign = 1
            if self.at("op", "-"):
                self.eat("op")
                sign = -1
            b = sign * self.integer()
            self.eat("op", "]")
            if b < -1:
                raise self.error(f"bracket must be >= -1, got {b}", t)
            return Var(t.text, b, t.line, t.col)
        if self.at("op", "("):
            self.eat("op")
            node = self.expr()
            self.eat("op", ")")
            return node
        raise self.error(f"unexpected {t.text or 'end of input'!r}")


def parse_expr(text: str, line: int = 1) -> Ast:
    return _Parser(tokenize(text, line)).parse()


def evaluate(ast: Ast, alphabet: Alphabet) -> Polynomial:
    if isinstance(ast, Num):
        return Polynomial.constant(ast.value)
    if isinstance(ast, Var):
        if ast.name not in alphabet.names:
            raise ParseError(f"unknown identifier {ast.name!r}", ast.line, ast.col)
        return alphabet.var(ast.name, -1 if ast.bracket is None else ast.bracket)
    if isinstance(ast, Neg):
        return -evaluate(ast.arg, alphabet)
    if isinstance(ast, Pow):
        return evaluate(ast.base, alphabet) ** ast.exp
    if isinstance(ast, Deriv):
        return derive(evaluate(ast.arg, alphabet), ast.order)
    a, b = evaluate(ast.left, alphabet), evaluate(ast.right, alphabet)
    if ast.op == "+":
        return a + b
    if ast.op == "-":
        return a - b
    if ast.op == "*":
        return a * b
    return circle(a, b)


def parse_poly(text: str, alphabet: Alphabet, line: int = 1) -> Polynomial:
    return evaluate(parse_expr(text, line), alphabet)


def to_gdn_expr(text: str, alphabet: Alphabet):
    """Parse a pure circle expression into a :class:`~gdnbasis.novikov.GdnExpr`."""
    from .novikov import Circ, Gen

    def conv(node: Ast):
        if isinstance(node, Var) and node.bracket is None:
            if node.name not in alphabet.names:
                raise ParseError(f"unknown identifier {node.name!r}", node.line, node.col)
            return Gen(alphabet.index(node.name))
        if isinstance(node, BinOp) and node.op == "o":
            return Circ(conv(node.left), conv(node.right))
        raise ParseError("only generators and 'o' are allowed in a circle expression")

    return conv(parse_expr(text))


# -- session files ----------------------------------------------------------

EXPECTATIONS = {"dx-homogeneous", "weight-homogeneous", "homogeneous", "gdn"}


@dataclass
class SessionFile:
    alphabet: Alphabet
    relations: list[Polynomial]
    name: str | None = None
    expect: tuple[str, ...] = ()
    sources: list[str] = field(default_factory=list)

    def relation_set(self):
        from .groebner import RelationSet

        return RelationSet(self.alphabet, self.relations)


_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def _parse_gens(rest: str, line: int) -> Alphabet:
    names = [n.strip() for n in re.split(r"[<,]", rest)]
    for n in names:
        if not _IDENT.match(n):
            raise ParseError(f"bad generator name {n!r}", line)
        if n in RESERVED:
            raise ParseError(f"generator name {n!r} is reserved", line)
    if len(set(names)) != len(names):
        raise ParseError("duplicate generator names", line)
    return Alphabet(names)


def _check_expectations(sess: SessionFile) -> None:
    for e in sess.expect:
        for text, r in zip(sess.sources, sess.relations):
            if e in ("dx-homogeneous", "homogeneous") and not r.is_dx_homogeneous():
                raise NotHomogeneousError(f"relation {text!r} is not D∪X-homogeneous")
            if e in ("weight-homogeneous", "homogeneous") and not r.is_weight_homogeneous():
                raise NotHomogeneousError(f"relation {text!r} is not weight-homogeneous")
            if e == "gdn" and r.weights() != {-1}:
                raise WeightError(f"relation {text!r} is not of weight -1")


def parse_session(text: str) -> SessionFile:
    alphabet = None
    name = None
    expect: tuple[str, ...] = ()
    rels: list[Polynomial] = []
    sources: list[str] = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].rstrip()
        if not body.strip():
            continue
        head, sep, rest = body.partition(":")
        key = head.strip().lower()
        if sep and key in ("gens", "name", "expect"):
            if key == "gens":
                if alphabet is not None:
                    raise ParseError("generators declared twice", ln)
                alphabet = _parse_gens(rest, ln)
            elif key == "name":
                name = rest.strip()
            else:
                expect = tuple(x.strip() for x in rest.split(",") if x.strip())
                for x in expect:
                    if x not in EXPECTATIONS:
                        raise ParseError(f"unknown expectation {x!r}", ln)
            continue
        if alphabet is None:
            raise ParseError("relation before 'gens:' declaration", ln)
        lhs, eq, rhs = body.partition("=")
        f = parse_poly(lhs, alphabet, ln)
        if eq:
            offset = len(lhs) + 1
            try:
                f = f - parse_poly(rhs, alphabet, ln)
            except ParseError as err:
                raise ParseError(err.message, ln, err.col + offset) from None
        if f.is_zero():
            raise SemanticError(f"line {ln}: relation {body.strip()!r} is zero")
        rels.append(f)
        sources.append(body.strip())
    if alphabet is None:
        raise ParseError("missing 'gens:' declaration")
    sess = SessionFile(alphabet, rels, name, expect, sources)
    _check_expectations(sess)
    return sess


def load_session(path: str) -> SessionFile:
    with open(path, encoding="utf-8") as fh:
        return parse_session(fh.read())


def format_session(alphabet: Alphabet, relations, name: str | None = None) -> str:
    lines = []
    if name:
        lines.append(f"name: {name}")
    lines.append("gens: " + " < ".join(alphabet.names))
    lines.extend(alphabet.format(r) for r in relations)
    return "\n".join(lines) + "\n"


__all__ = [
    "Token",
    "tokenize",
    "Num",
    "Var",
    "BinOp",
    "Neg",
    "Pow",
    "Deriv",
    "Ast",
    "parse_expr",
    "evaluate",
    "parse_poly",
    "to_gdn_expr",
    "SessionFile",
    "parse_session",
    "load_session",
    "format_session",
]

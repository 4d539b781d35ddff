"""Lexer, parser, static checks and pretty-printer for ``.uhg`` scripts.

    program   := directive? stmt*
    directive := "#field" ("rational" | "fp" INT)
    stmt      := IDENT "=" expr ";" | "assert" pred "(" args ")" ";"
    expr      := POINT_LIT | LINE_LIT | RATIONAL | IDENT | IDENT "." INT | fn "(" args ")"

Any other ``#`` starts a comment running to the end of the line.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from ..errors import InvalidModulus, ParseError
from ..field import QQ, GF, Field

# name -> (arity, multi-valued)
FUNCTIONS = {
    "join": (2, False),
    "meet": (2, False),
    "dual": (1, False),
    "altitude_line": (2, False),
    "altitude_point": (2, False),
    "parallel_line": (2, False),
    "base_point": (2, False),
    "conjugates": (2, True),
    "reflect": (2, False),
    "midpoints": (2, True),
    "quadrance": (2, False),
    "spread": (2, False),
    "quadrea": (3, False),
    "cross_ratio": (4, False),
    "null_points_on": (1, True),
    "null_point": (1, False),
}

PREDICATES = {
    "collinear": 3,
    "concurrent": 3,
    "incident": 2,
    "perp": 2,
    "on_null": 1,
    "eq": 2,
}


@dataclass(frozen=True)
class Diagnostic:
    severity: str
    line: int
    column: int
    message: str

    def __str__(self):
        return f"{self.line}:{self.column}: {self.severity}: {self.message}"


class ScriptError(ParseError):
    """Raised by :func:`parse` with every diagnostic found."""

    def __init__(self, diagnostics: List[Diagnostic]):
        self.diagnostics = list(diagnostics)
        super().__init__("\n".join(str(d) for d in self.diagnostics))


# -- AST ------------------------------------------------------------------------------------------
# Positions are carried for diagnostics but ignored by equality, so a program
# and its pretty-printed reparse compare equal.


@dataclass(frozen=True)
class Number:
    value: Fraction
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class TripleLit:
    kind: str  # "point" | "line"
    coords: Tuple[Fraction, Fraction, Fraction]
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Name:
    name: str
    index: Optional[int] = None
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Call:
    fn: str
    args: Tuple["Expr", ...]
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


Expr = Union[Number, TripleLit, Name, Call]


@dataclass(frozen=True)
class Binding:
    name: str
    expr: Expr
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Assertion:
    pred: str
    args: Tuple[Expr, ...]
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


Statement = Union[Binding, Assertion]


@dataclass(frozen=True)
class Program:
    field_spec: Optional[str]  # None, "rational" or "fp P"
    statements: Tuple[Statement, ...]

    @property
    def ctx(self) -> Field:
        if self.field_spec is None or self.field_spec == "rational":
            return QQ
        return GF(int(self.field_spec.split()[1]))


# -- lexer ----------------------------------------------------------------------------------------------


@dataclass(frozen=True)
class Token:
    kind: str  # IDENT INT SYM DIRECTIVE EOF
    text: str
    line: int
    column: int


_TOKEN_RE = re.compile(
    r"(?P<ws>[ \t\r\f\v]+)|(?P<nl>\n)|(?P<directive>\#field\b)|(?P<comment>\#[^\n]*)"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>\d+)|(?P<sym>[=;()\[\]:,./-])"
)


def tokenize(src: str) -> Tuple[List[Token], List[Diagnostic]]:
    toks: List[Token] = []
    diags: List[Diagnostic] = []
    line, line_start, pos = 1, 0, 0
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        col = pos - line_start + 1
        if not m:
            diags.append(Diagnostic("error", line, col, f"unexpected character {src[pos]!r}"))
            pos += 1
            continue
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind == "directive":
            toks.append(Token("DIRECTIVE", m.group(), line, col))
        elif kind in ("ident", "int", "sym"):
            toks.append(Token(kind.upper(), m.group(), line, col))
        pos = m.end()
    toks.append(Token("EOF", "", line, pos - line_start + 1))
    return toks, diags


# -- parser -----------------------------------------------------------------------------------------------


class _Sync(Exception):
    pass


class _Parser:
    def __init__(self, toks: List[Token]):
        self.toks = toks
        self.i = 0
        self.diags: List[Diagnostic] = []

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def advance(self) -> Token:
        t = self.tok
        if t.kind != "EOF":
            self.i += 1
        return t

    def error(self, tok: Token, msg: str):
        self.diags.append(Diagnostic("error", tok.line, tok.column, msg))
        raise _Sync

    def describe(self, tok: Token) -> str:
        return "end of input" if tok.kind == "EOF" else repr(tok.text)

    def expect(self, text: str) -> Token:
        if self.tok.text != text or self.tok.kind not in ("SYM", "IDENT"):
            self.error(self.tok, f"expected {text!r}, found {self.describe(self.tok)}")
        return self.advance()

    def sync(self):
        while self.tok.kind != "EOF" and self.tok.text != ";":
            self.advance()
        self.advance()

    # program

    def program(self) -> Program:
        spec = None
        if self.tok.kind == "DIRECTIVE":
            try:
                spec = self.directive()
            except _Sync:
                spec = None
        stmts = []
        while self.tok.kind != "EOF":
            try:
                stmts.append(self.statement())
            except _Sync:
                self.sync()
        return Program(spec, tuple(stmts))

    def directive(self) -> str:
        d = self.advance()
        t = self.tok
        if t.kind == "IDENT" and t.text == "rational":
            self.advance()
            return "rational"
        if t.kind == "IDENT" and t.text == "fp":
            self.advance()
            n = self.tok
            if n.kind != "INT":
                self.error(n, f"expected a prime after 'fp', found {self.describe(n)}")
            self.advance()
            p = int(n.text)
            try:
                GF(p)
            except InvalidModulus as exc:
                msg = "characteristic two is rejected" if p == 2 else str(exc)
                self.error(n, msg)
            return f"fp {p}"
        self.error(t if t.kind != "EOF" else d, "expected 'rational' or 'fp P' after #field")
        raise AssertionError  # unreachable

    def statement(self) -> Statement:
        t = self.tok
        if t.kind == "DIRECTIVE":
            self.error(t, "#field must come before any statement")
        if t.kind != "IDENT":
            self.error(t, f"expected a statement, found {self.describe(t)}")
        if t.text == "assert":
            self.advance()
            p = self.tok
            if p.kind != "IDENT":
                self.error(p, f"expected a predicate, found {self.describe(p)}")
            if p.text not in PREDICATES:
                self.error(p, f"unknown predicate {p.text!r}")
            self.advance()
            args = self.arglist()
            if len(args) != PREDICATES[p.text]:
                self.error(p, f"{p.text} takes {PREDICATES[p.text]} argument(s), got {len(args)}")
            self.expect(";")
            return Assertion(p.text, args, t.line, t.column)
        self.advance()
        if t.text in FUNCTIONS or t.text in PREDICATES:
            self.error(t, f"{t.text!r} is reserved and cannot be bound")
        self.expect("=")
        e = self.expr()
        self.expect(";")
        return Binding(t.text, e, t.line, t.column)

    def arglist(self) -> Tuple[Expr, ...]:
        self.expect("(")
        args = []
        if self.tok.text != ")":
            args.append(self.expr())
            while self.tok.text == ",":
                self.advance()
                args.append(self.expr())
        self.expect(")")
        return tuple(args)

    def number(self) -> Fraction:
        sign = 1
        if self.tok.text == "-":
            self.advance()
            sign = -1
        n = self.tok
        if n.kind != "INT":
            self.error(n, f"expected a number, found {self.describe(n)}")
        self.advance()
        value = Fraction(int(n.text))
        if self.tok.text == "/":
            self.advance()
            d = self.tok
            if d.kind != "INT":
                self.error(d, f"expected a denominator, found {self.describe(d)}")
            if int(d.text) == 0:
                self.error(d, "zero denominator")
            self.advance()
            value /= int(d.text)
        return sign * value

    def triple(self, kind: str, close: str) -> TripleLit:
        start = self.advance()
        coords = [self.number()]
        for _ in range(2):
            self.expect(":")
            coords.append(self.number())
        if self.tok.text != close:
            self.error(self.tok, f"malformed {kind} literal: expected {close!r}, found {self.describe(self.tok)}")
        self.advance()
        if all(c == 0 for c in coords):
            self.error(start, f"malformed {kind} literal: the zero triple")
        return TripleLit(kind, tuple(coords), start.line, start.column)

    def expr(self) -> Expr:
        t = self.tok
        if t.text == "[":
            return self.triple("point", "]")
        if t.text == "(":
            return self.triple("line", ")")
        if t.kind == "INT" or t.text == "-":
            return Number(self.number(), t.line, t.column)
        if t.kind == "IDENT":
            self.advance()
            if self.tok.text == "(":
                if t.text not in FUNCTIONS:
                    self.error(t, f"unknown function {t.text!r}")
                args = self.arglist()
                arity = FUNCTIONS[t.text][0]
                if len(args) != arity:
                    self.error(t, f"{t.text} takes {arity} argument(s), got {len(args)}")
                return Call(t.text, args, t.line, t.column)
            if self.tok.text == ".":
                self.advance()
                k = self.tok
                if k.kind != "INT":
                    self.error(k, f"expected an index after '.', found {self.describe(k)}")
                self.advance()
                return Name(t.text, int(k.text), t.line, t.column)
            return Name(t.text, None, t.line, t.column)
        self.error(t, f"expected an expression, found {self.describe(t)}")
        raise AssertionError  # unreachable


def _names_in(e: Expr):
    if isinstance(e, Name):
        yield e
    elif isinstance(e, Call):
        for a in e.args:
            yield from _names_in(a)


def _static_checks(prog: Program) -> List[Diagnostic]:
    """Single assignment, definition before use, and sane tuple indexing."""
    diags = []
    bound: dict = {}
    for st in prog.statements:
        exprs = (st.expr,) if isinstance(st, Binding) else st.args
        for e in exprs:
            for n in _names_in(e):
                if n.name not in bound:
                    diags.append(Diagnostic("error", n.line, n.column, f"undefined name {n.name!r}"))
                    continue
                multi = bound[n.name]
                if n.index is not None and not multi:
                    diags.append(Diagnostic("error", n.line, n.column, f"{n.name!r} is not a tuple"))
                elif n.index is not None and not 1 <= n.index <= 2:
                    diags.append(Diagnostic("error", n.line, n.column, f"index {n.index} out of range 1..2"))
                elif n.index is None and multi:
                    diags.append(Diagnostic("error", n.line, n.column, f"{n.name!r} is a tuple; use {n.name}.1 or {n.name}.2"))
        if isinstance(st, Binding):
            if st.name in bound:
                diags.append(Diagnostic("error", st.line, st.column, f"{st.name!r} is already bound (single assignment)"))
            else:
                e = st.expr
                bound[st.name] = isinstance(e, Call) and FUNCTIONS[e.fn][1]
    return diags


def parse(src: str) -> Program:
    """Parse a script; raise :class:`ScriptError` carrying located diagnostics."""
    toks, diags = tokenize(src)
    p = _Parser(toks)
    prog = p.program()
    diags = diags + p.diags
    if not diags:
        diags = _static_checks(prog)
    if diags:
        raise ScriptError(sorted(diags, key=lambda d: (d.line, d.column)))
    return prog


def diagnostics(src: str) -> List[Diagnostic]:
    try:
        parse(src)
    except ScriptError as exc:
        return exc.diagnostics
    return []


# -- pretty-printer ------------------------------------------------------------------------------------------


def format_number(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_expr(e: Expr) -> str:
    if isinstance(e, Number):
        return format_number(e.value)
    if isinstance(e, TripleLit):
        body = ":".join(format_number(c) for c in e.coords)
        return f"[{body}]" if e.kind == "point" else f"({body})"
    if isinstance(e, Name):
        return e.name if e.index is None else f"{e.name}.{e.index}"
    return f"{e.fn}({', '.join(format_expr(a) for a in e.args)})"


def format_statement(st: Statement) -> str:
    if isinstance(st, Binding):
        return f"{st.name} = {format_expr(st.expr)};"
    return f"assert {st.pred}({', '.join(format_expr(a) for a in st.args)});"


def pretty(prog: Program) -> str:
    out = []
    if prog.field_spec is not None:
        out.append(f"#field {prog.field_spec}")
    out.extend(format_statement(s) for s in prog.statements)
    return "\n".join(out) + "\n"

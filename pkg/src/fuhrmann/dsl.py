"""Lexer, parser and AST for ``.geo`` construction scripts.

A script looks like::

    @expect pass
    triangle A B C
    let H = orthocenter(A, B, C)
    assert coincides(H, H) : "trivial"

Statements are one per line, expressions are prefix calls only, and ``#``
starts a comment. Parsing checks names, arity and binding order; the kinds
of values are checked later, when a script is evaluated.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Union

# name -> (argument kinds, result kind); P point, V vector, L line, C circle, S scalar
BUILTINS: dict[str, tuple[tuple[str, ...], str]] = {
    "orthocenter": (("P", "P", "P"), "P"),
    "incenter": (("P", "P", "P"), "P"),
    "circumcenter": (("P", "P", "P"), "P"),
    "circumradius": (("P", "P", "P"), "S"),
    "circumcircle": (("P", "P", "P"), "C"),
    "arc_midpoint": (("P", "P", "P"), "P"),
    "reflect": (("P", "L"), "P"),
    "line": (("P", "P"), "L"),
    "intersect": (("L", "L"), "P"),
    "foot": (("P", "L"), "P"),
    "midpoint": (("P", "P"), "P"),
    "vec": (("P", "P"), "V"),
    "dot": (("V", "V"), "S"),
    "length": (("V",), "S"),
    "dist": (("P", "P"), "S"),
    "angle": (("P", "P", "P"), "S"),
    "sin": (("S",), "S"),
    "cos": (("S",), "S"),
    "add": (("S", "S"), "S"),
    "sub": (("S", "S"), "S"),
    "mul": (("S", "S"), "S"),
    "div": (("S", "S"), "S"),
}

ASSERTIONS: dict[str, tuple[str, str]] = {
    "perpendicular": ("V", "V"),
    "coincides": ("P", "P"),
    "equal": ("S", "S"),
    "on_circle": ("P", "C"),
}

KEYWORDS = {"triangle", "let", "assert"}


class ScriptError(Exception):
    kind = "error"

    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.message = message


class ScriptSyntaxError(ScriptError):
    kind = "syntax error"


class ScriptSemanticError(ScriptError):
    kind = "semantic error"


def format_diagnostic(err: ScriptError, filename: str = "<script>") -> str:
    return f"{filename}:{err.line}:{err.column}: {err.message}"


# ---------------------------------------------------------------- AST


@dataclass(frozen=True)
class Ident:
    name: str
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Number:
    value: float
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple[Expr, ...]
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


Expr = Union[Ident, Number, Call]


@dataclass(frozen=True)
class Binding:
    name: str
    expr: Expr
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Assertion:
    kind: str
    args: tuple[Expr, Expr]
    label: str | None = None
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Script:
    expectation: str
    triangle: tuple[str, str, str]
    statements: tuple[Binding | Assertion, ...]

    @property
    def bindings(self) -> list[Binding]:
        return [s for s in self.statements if isinstance(s, Binding)]

    @property
    def assertions(self) -> list[Assertion]:
        return [s for s in self.statements if isinstance(s, Assertion)]


# ---------------------------------------------------------------- lexer


@dataclass(frozen=True)
class Token:
    type: str
    text: str
    line: int
    column: int


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<comment>\#[^\n]*)
  | (?P<newline>\n)
  | (?P<pragma>@[A-Za-z_][A-Za-z0-9_]*)
  | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<string>"[^"\n]*")
  | (?P<punct>[(),=:])
    """,
    re.VERBOSE,
)


def tokenize(source: str) -> list[Token]:
    tokens = []
    line, line_start, pos = 1, 0, 0
    while pos < len(source):
        m = _TOKEN_RE.match(source, pos)
        col = pos - line_start + 1
        if m is None:
            ch = source[pos]
            if ch == '"':
                raise ScriptSyntaxError(line, col, "unterminated string")
            raise ScriptSyntaxError(line, col, f"unexpected character {ch!r}")
        kind, text = m.lastgroup, m.group()
        if kind == "newline":
            tokens.append(Token("NEWLINE", text, line, col))
            line, line_start = line + 1, m.end()
        elif kind == "ident":
            tokens.append(Token(text if text in KEYWORDS else "IDENT", text, line, col))
        elif kind == "punct":
            tokens.append(Token(text, text, line, col))
        elif kind in ("number", "string", "pragma"):
            tokens.append(Token(kind.upper(), text, line, col))
        pos = m.end()
    tokens.append(Token("EOF", "", line, pos - line_start + 1))
    return tokens


# ---------------------------------------------------------------- parser


def _describe(tok: Token) -> str:
    if tok.type == "EOF":
        return "end of input"
    if tok.type == "NEWLINE":
        return "end of line"
    return repr(tok.text)


class _Parser:
    def __init__(self, source: str):
        self.tokens = tokenize(source)
        self.i = 0
        self.bound: set[str] = set()

    def peek(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, type_: str, what: str | None = None) -> Token:
        tok = self.peek()
        if tok.type != type_:
            raise ScriptSyntaxError(tok.line, tok.column, f"expected {what or repr(type_)}, found {_describe(tok)}")
        return self.advance()

    def end_of_statement(self):
        tok = self.peek()
        if tok.type not in ("NEWLINE", "EOF"):
            raise ScriptSyntaxError(tok.line, tok.column, f"expected end of line, found {_describe(tok)}")
        if tok.type == "NEWLINE":
            self.advance()

    def skip_blank(self):
        while self.peek().type == "NEWLINE":
            self.advance()

    def parse(self) -> Script:
        expectation = None
        triangle = None
        statements = []
        self.skip_blank()
        while self.peek().type != "EOF":
            tok = self.peek()
            if tok.type == "PRAGMA":
                if triangle is not None or expectation is not None:
                    where = "after the triangle declaration" if triangle is not None else "twice"
                    raise ScriptSemanticError(tok.line, tok.column, f"@expect pragma given {where}")
                expectation = self.pragma()
            elif tok.type == "triangle":
                if triangle is not None:
                    raise ScriptSemanticError(tok.line, tok.column, "duplicate triangle declaration")
                triangle = self.triangle_decl()
            elif tok.type in ("let", "assert"):
                if triangle is None:
                    raise ScriptSemanticError(
                        tok.line, tok.column, f"'{tok.text}' before the triangle declaration"
                    )
                statements.append(self.binding() if tok.type == "let" else self.assertion())
            else:
                raise ScriptSyntaxError(
                    tok.line, tok.column, f"expected a statement, found {_describe(tok)}"
                )
            self.end_of_statement()
            self.skip_blank()
        if triangle is None:
            tok = self.peek()
            raise ScriptSemanticError(tok.line, tok.column, "missing triangle declaration")
        return Script(expectation or "pass", triangle, tuple(statements))

    def pragma(self) -> str:
        tok = self.advance()
        if tok.text != "@expect":
            raise ScriptSyntaxError(tok.line, tok.column, f"unknown pragma {tok.text!r}")
        arg = self.peek()
        if arg.type != "IDENT" or arg.text not in ("pass", "fail"):
            raise ScriptSyntaxError(arg.line, arg.column, f"expected 'pass' or 'fail', found {_describe(arg)}")
        self.advance()
        return arg.text

    def declare(self, tok: Token):
        if tok.text in self.bound:
            raise ScriptSemanticError(tok.line, tok.column, f"identifier '{tok.text}' is already bound")
        self.bound.add(tok.text)

    def triangle_decl(self) -> tuple[str, str, str]:
        self.advance()
        names = []
        for _ in range(3):
            tok = self.expect("IDENT", "a vertex name")
            self.declare(tok)
            names.append(tok.text)
        return tuple(names)

    def binding(self) -> Binding:
        kw = self.advance()
        name = self.expect("IDENT", "an identifier")
        self.expect("=", "'='")
        expr = self.expr()
        # bound only after the right-hand side, so 'let X = f(X)' is unbound use
        self.declare(name)
        return Binding(name.text, expr, kw.line, kw.column)

    def assertion(self) -> Assertion:
        kw = self.advance()
        head = self.expect("IDENT", "an assertion name")
        if head.text not in ASSERTIONS:
            raise ScriptSemanticError(head.line, head.column, f"unknown assertion '{head.text}'")
        args = self.arguments(head, 2)
        label = None
        if self.peek().type == ":":
            self.advance()
            label = self.expect("STRING", "a quoted label").text[1:-1]
        return Assertion(head.text, tuple(args), label, kw.line, kw.column)

    def arguments(self, head: Token, arity: int) -> list[Expr]:
        self.expect("(", "'('")
        args = []
        if self.peek().type != ")":
            args.append(self.expr())
            while self.peek().type == ",":
                self.advance()
                args.append(self.expr())
        self.expect(")", "')'")
        if len(args) != arity:
            plural = "argument" if arity == 1 else "arguments"
            raise ScriptSemanticError(
                head.line, head.column, f"{head.text} expects {arity} {plural}, got {len(args)}"
            )
        return args

    def expr(self) -> Expr:
        tok = self.peek()
        if tok.type == "NUMBER":
            self.advance()
            value = float(tok.text)
            if not math.isfinite(value):
                raise ScriptSemanticError(tok.line, tok.column, f"numeric literal {tok.text} out of range")
            return Number(value, tok.line, tok.column)
        if tok.type == "IDENT":
            self.advance()
            if self.peek().type == "(":
                if tok.text not in BUILTINS:
                    raise ScriptSemanticError(tok.line, tok.column, f"unknown function '{tok.text}'")
                args = self.arguments(tok, len(BUILTINS[tok.text][0]))
                return Call(tok.text, tuple(args), tok.line, tok.column)
            if tok.text not in self.bound:
                raise ScriptSemanticError(tok.line, tok.column, f"unbound identifier '{tok.text}'")
            return Ident(tok.text, tok.line, tok.column)
        raise ScriptSyntaxError(tok.line, tok.column, f"expected an expression, found {_describe(tok)}")


def parse(source: str) -> Script:
    """Parse script text, raising :class:`ScriptError` on the first problem."""
    return _Parser(source).parse()


def format_expr(expr: Expr) -> str:
    if isinstance(expr, Ident):
        return expr.name
    if isinstance(expr, Number):
        return repr(expr.value)
    return f"{expr.name}({', '.join(format_expr(a) for a in expr.args)})"


def format_script(script: Script) -> str:
    """Render a script back to source text that parses to an equal Script."""
    lines = [f"@expect {script.expectation}", "triangle " + " ".join(script.triangle)]
    for stmt in script.statements:
        if isinstance(stmt, Binding):
            lines.append(f"let {stmt.name} = {format_expr(stmt.expr)}")
        else:
            text = f"assert {stmt.kind}({', '.join(format_expr(a) for a in stmt.args)})"
            if stmt.label is not None:
                text += f' : "{stmt.label}"'
            lines.append(text)
    return "\n".join(lines) + "\n"

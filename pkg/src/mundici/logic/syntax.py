"""Parser and printer for the text DSL.

Grammar::

    term     := 0 | u | VAR | OP(term, ...) | times(INT|VAR, term)
    atom     := term = term | term <= term
    formula  := tt | formula & formula | formula \\/ formula
              | exists VAR. formula | bigvee VAR<=INT. formula
              | bigvee VAR. formula | ( formula ) | atom
    sequent  := formula |- [VAR, ...] formula

``&`` binds tighter than ``\\/``; ``exists`` and ``bigvee`` scope as far right
as possible.  ``bigvee n. f`` without a bound is the unbounded disjunction.
"""
from __future__ import annotations

import re

from ..errors import ParseError
from .ast import (
    OPS,
    And,
    App,
    Atom,
    BigVee,
    Const,
    Exists,
    Or,
    Sequent,
    Times,
    Top,
    Var,
)

_TOKEN = re.compile(r"\s*(?:(\|-)|(<=)|(\\/)|([&=()\[\],.])|(\d+)|([A-Za-z_][A-Za-z0-9_]*))")
KEYWORDS = {"tt", "exists", "bigvee", "times", "u"} | set(OPS)


def tokenize(text: str) -> list[str]:
    out, pos = [], 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        out.append(m.group(m.lastindex))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text):
        self.toks = tokenize(text)
        self.i = 0

    def peek(self, k=0):
        j = self.i + k
        return self.toks[j] if j < len(self.toks) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ParseError(f"expected {expected or 'token'} at token {self.i}, got {tok!r}")
        self.i += 1
        return tok

    def done(self):
        if self.peek() is not None:
            raise ParseError(f"trailing input at token {self.i}: {self.peek()!r}")

    def ident(self):
        tok = self.take()
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", tok) or tok in KEYWORDS:
            raise ParseError(f"expected a variable name, got {tok!r}")
        return tok

    def term(self):
        tok = self.take()
        if tok == "0":
            return Const("0")
        if tok == "u":
            return Const("u")
        if tok == "times":
            self.take("(")
            n = self.take()
            n = int(n) if n.isdigit() else n
            self.take(",")
            t = self.term()
            self.take(")")
            return Times(n, t)
        if tok in OPS:
            self.take("(")
            args = [self.term()]
            while self.peek() == ",":
                self.take(",")
                args.append(self.term())
            self.take(")")
            if len(args) != OPS[tok]:
                raise ParseError(f"{tok} takes {OPS[tok]} argument(s), got {len(args)}")
            return App(tok, tuple(args))
        if re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", tok) and tok not in KEYWORDS:
            return Var(tok)
        raise ParseError(f"expected a term, got {tok!r}")

    def formula(self):
        parts = [self.conj()]
        while self.peek() == "\\/":
            self.take()
            parts.append(self.conj())
        return parts[0] if len(parts) == 1 else Or(tuple(parts))

    def conj(self):
        parts = [self.unary()]
        while self.peek() == "&":
            self.take()
            parts.append(self.unary())
        return parts[0] if len(parts) == 1 else And(tuple(parts))

    def unary(self):
        tok = self.peek()
        if tok == "tt":
            self.take()
            return Top()
        if tok == "exists":
            self.take()
            v = self.ident()
            self.take(".")
            return Exists(v, self.formula())
        if tok == "bigvee":
            self.take()
            v = self.ident()
            bound = None
            if self.peek() == "<=":
                self.take()
                b = self.take()
                if not b.isdigit():
                    raise ParseError(f"bigvee bound must be a natural number, got {b!r}")
                bound = int(b)
            self.take(".")
            return BigVee(v, bound, self.formula())
        if tok == "(":
            self.take()
            f = self.formula()
            self.take(")")
            return f
        lhs = self.term()
        rel = self.take()
        if rel not in ("=", "<="):
            raise ParseError(f"expected = or <=, got {rel!r}")
        return Atom(rel, lhs, self.term())

    def context(self):
        self.take("[")
        names = []
        if self.peek() != "]":
            names.append(self.ident())
            while self.peek() == ",":
                self.take(",")
                names.append(self.ident())
        self.take("]")
        return tuple(names)


def parse_term(text: str):
    p = _Parser(text)
    t = p.term()
    p.done()
    return t


def parse_formula(text: str):
    p = _Parser(text)
    f = p.formula()
    p.done()
    return f


def parse_sequent(text: str) -> Sequent:
    p = _Parser(text)
    premise = p.formula()
    p.take("|-")
    ctx = p.context()
    conclusion = p.formula()
    p.done()
    return Sequent(premise, ctx, conclusion)


def show_term(t) -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Const):
        return t.name
    if isinstance(t, Times):
        return f"times({t.n}, {show_term(t.term)})"
    if isinstance(t, App):
        return f"{t.op}(" + ", ".join(show_term(a) for a in t.args) + ")"
    raise TypeError(f"not a term: {t!r}")


def _wrap(f, loose):
    s = show_formula(f)
    return f"({s})" if isinstance(f, loose) else s


def show_formula(f) -> str:
    if isinstance(f, Top):
        return "tt"
    if isinstance(f, Atom):
        return f"{show_term(f.lhs)} {f.rel} {show_term(f.rhs)}"
    if isinstance(f, And):
        return " & ".join(_wrap(p, (Or, And, Exists, BigVee)) for p in f.parts)
    if isinstance(f, Or):
        return " \\/ ".join(_wrap(p, (Or, Exists, BigVee)) for p in f.parts)
    if isinstance(f, Exists):
        return f"exists {f.var}. {show_formula(f.body)}"
    if isinstance(f, BigVee):
        bound = "" if f.bound is None else f"<={f.bound}"
        return f"bigvee {f.index}{bound}. {show_formula(f.body)}"
    raise TypeError(f"not a formula: {f!r}")


def show_sequent(s: Sequent) -> str:
    return f"{show_formula(s.premise)} |- [{','.join(s.context)}] {show_formula(s.conclusion)}"

"""Terms, geometric formulas and sequents over the MV and l-group signatures."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

MV_OPS = {"neg": 1, "oplus": 2, "odot": 2}
LU_OPS = {"add": 2, "minus": 1, "inf": 2, "sup": 2}
OPS = {**MV_OPS, **LU_OPS}
CONSTANTS = ("0", "u")


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    name: str  # "0" or "u"


@dataclass(frozen=True)
class App:
    op: str
    args: tuple


@dataclass(frozen=True)
class Times:
    """n*t, with n an integer literal or the index of an enclosing bigvee."""

    n: Union[int, str]
    term: "Term"


Term = Union[Var, Const, App, Times]


@dataclass(frozen=True)
class Top:
    pass


@dataclass(frozen=True)
class Atom:
    rel: str  # "=" or "<="
    lhs: Term
    rhs: Term


@dataclass(frozen=True)
class And:
    parts: tuple


@dataclass(frozen=True)
class Or:
    parts: tuple


@dataclass(frozen=True)
class Exists:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class BigVee:
    """Disjunction of ``body`` over index = 0..bound.

    ``bound=None`` stands for the unbounded disjunction over all naturals;
    evaluation then picks a bound from the model (see ``semantics``).
    """

    index: str
    bound: int | None
    body: "Formula"


Formula = Union[Top, Atom, And, Or, Exists, BigVee]


@dataclass(frozen=True)
class Sequent:
    premise: Formula
    context: tuple
    conclusion: Formula


def conj(*parts) -> Formula:
    flat = []
    for p in parts:
        if isinstance(p, And):
            flat.extend(p.parts)
        elif not isinstance(p, Top):
            flat.append(p)
    if not flat:
        return Top()
    return flat[0] if len(flat) == 1 else And(tuple(flat))


def op(name, *args) -> App:
    return App(name, tuple(args))


def eq(a, b) -> Atom:
    return Atom("=", a, b)


def le(a, b) -> Atom:
    return Atom("<=", a, b)


ZERO = Const("0")
UNIT = Const("u")


def term_vars(t) -> set[str]:
    if isinstance(t, Var):
        return {t.name}
    if isinstance(t, App):
        return set().union(*(term_vars(a) for a in t.args))
    if isinstance(t, Times):
        return term_vars(t.term)
    return set()


def free_vars(f) -> set[str]:
    """Free element variables (bigvee indices are not element variables)."""
    if isinstance(f, Top):
        return set()
    if isinstance(f, Atom):
        return term_vars(f.lhs) | term_vars(f.rhs)
    if isinstance(f, (And, Or)):
        return set().union(*(free_vars(p) for p in f.parts))
    if isinstance(f, Exists):
        return free_vars(f.body) - {f.var}
    if isinstance(f, BigVee):
        return free_vars(f.body)
    if isinstance(f, Sequent):
        return free_vars(f.premise) | free_vars(f.conclusion)
    raise TypeError(f"not a formula: {f!r}")


def term_ops(t) -> set[str]:
    if isinstance(t, App):
        return {t.op}.union(*(term_ops(a) for a in t.args))
    if isinstance(t, Times):
        return term_ops(t.term)
    if isinstance(t, Const) and t.name == "u":
        return {"u"}
    return set()


def formula_ops(f) -> set[str]:
    if isinstance(f, Atom):
        return term_ops(f.lhs) | term_ops(f.rhs)
    if isinstance(f, (And, Or)):
        return set().union(*(formula_ops(p) for p in f.parts))
    if isinstance(f, (Exists, BigVee)):
        return formula_ops(f.body)
    if isinstance(f, Sequent):
        return formula_ops(f.premise) | formula_ops(f.conclusion)
    return set()


def signature_of(x) -> str:
    """'mv', 'lu', 'both' (constants only) or 'mixed'."""
    ops = formula_ops(x) if not isinstance(x, (Var, Const, App, Times)) else term_ops(x)
    mv = bool(ops & set(MV_OPS))
    lu = bool(ops & (set(LU_OPS) | {"u"}))
    if mv and lu:
        return "mixed"
    return "mv" if mv else "lu" if lu else "both"

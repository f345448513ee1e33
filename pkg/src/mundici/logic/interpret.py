"""Interpretation of the MV signature into the l-group signature.

oplus(s, t) becomes inf(u, add(s, t)), neg(t) becomes add(u, minus(t)), 0
stays 0; connectives and quantifiers are mapped homomorphically, with
existentially bound variables relativized to [0, u].
"""
from __future__ import annotations

import random

from ..functors import gamma
from ..lgroup import LGroupU
from ..report import DEFAULT_BUDGET, DEFAULT_SEED, FAIL, Report
from .ast import (
    UNIT,
    ZERO,
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
    conj,
    le,
    op,
)
from .semantics import check_sequent, holds, sequent_envs
from .syntax import show_sequent


def interval_guard(var: str):
    return conj(le(ZERO, Var(var)), le(Var(var), UNIT))


def interpret_term(t):
    if isinstance(t, (Var, Const)):
        return t
    if isinstance(t, Times):
        return Times(t.n, interpret_term(t.term))
    if isinstance(t, App):
        args = [interpret_term(a) for a in t.args]
        if t.op == "oplus":
            return op("inf", UNIT, op("add", *args))
        if t.op == "neg":
            return op("add", UNIT, op("minus", args[0]))
        if t.op == "odot":
            # x.y = ~(~x + ~y)
            s, r = t.args
            return interpret_term(op("neg", op("oplus", op("neg", s), op("neg", r))))
        raise ValueError(f"{t.op} is not an MV operation")
    raise TypeError(f"not a term: {t!r}")


def interpret_formula(f):
    if isinstance(f, Top):
        return f
    if isinstance(f, Atom):
        return Atom(f.rel, interpret_term(f.lhs), interpret_term(f.rhs))
    if isinstance(f, And):
        return And(tuple(interpret_formula(p) for p in f.parts))
    if isinstance(f, Or):
        return Or(tuple(interpret_formula(p) for p in f.parts))
    if isinstance(f, Exists):
        return Exists(f.var, conj(interval_guard(f.var), interpret_formula(f.body)))
    if isinstance(f, BigVee):
        return BigVee(f.index, f.bound, interpret_formula(f.body))
    raise TypeError(f"not a formula: {f!r}")


def interpret(x):
    """Translate an MV term, formula or sequent; the context is unchanged."""
    if isinstance(x, Sequent):
        return Sequent(interpret_formula(x.premise), x.context, interpret_formula(x.conclusion))
    if isinstance(x, (Var, Const, App, Times)):
        return interpret_term(x)
    return interpret_formula(x)


def guard(s: Sequent) -> Sequent:
    """Add 0 <= x <= u to the premise for every context variable."""
    guards = [interval_guard(v) for v in s.context]
    return Sequent(conj(*guards, s.premise), s.context, s.conclusion)


def check_interpretation_soundness(
    G: LGroupU, s: Sequent, budget: int = DEFAULT_BUDGET, seed: int = DEFAULT_SEED
) -> Report:
    """Validity of s in gamma(G) must agree with validity of guard(I(s)) in G.

    Both sequents are checked on the same assignments: every assignment
    drawn from [0, u] (all of them when the interval is finite) plus random
    assignments from G, where the guarded sequent must hold vacuously.
    """
    A = gamma(G)
    t = guard(interpret(s))
    report = Report("soundness", f"{show_sequent(s)} over {G}", seed=seed)
    inside, exhaustive = sequent_envs(A, s.context, budget, seed)
    rng = random.Random(seed)
    outside = [{v: G.sample(rng) for v in s.context} for _ in range(budget // 4)] if s.context else []
    for env in inside:
        report.checked += 1
        lhs = holds(A, env, s.premise), holds(A, env, s.conclusion)
        rhs = holds(G, env, t.premise), holds(G, env, t.conclusion)
        if _valid_at(*lhs) != _valid_at(*rhs):
            return report.fail("agree", {k: G.fmt(v) for k, v in env.items()}, f"gamma: {lhs}, group: {rhs}")
    for env in outside:
        if all(A.contains(v) for v in env.values()):
            continue
        report.checked += 1
        if holds(G, env, t.premise) is not False:
            return report.fail("guard", {k: G.fmt(v) for k, v in env.items()}, "guard admits an element outside [0, u]")
    on_a = check_sequent(A, s, budget, seed, envs=inside)
    on_a.exhaustive = exhaustive
    on_g = check_sequent(G, t, budget, seed, envs=inside + outside)
    report.details = [on_a, on_g]
    if on_a.status != on_g.status:
        return report.fail("status", None, f"gamma: {on_a.status}, group: {on_g.status}")
    report.note = f"both {on_a.status}"
    if on_a.status == FAIL:
        report.witness = {"gamma": on_a.witness, "group": on_g.witness}
    return report


def _valid_at(pre, post):
    if pre is False:
        return True
    if pre is True and post is True:
        return True
    if pre is True and post is False:
        return False
    return None

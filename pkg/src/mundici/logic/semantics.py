"""Evaluation of terms and formulas in concrete models.

A model is an :class:`~mundici.mv.MvAlgebra` or an
:class:`~mundici.lgroup.LGroupU`.  ``holds`` is three-valued: ``True``,
``False``, or ``None`` when an existential or unbounded disjunction found no
witness within its search bound.  ``None`` never turns into ``False``.
"""
from __future__ import annotations

import itertools
import random

from ..errors import SignatureMismatch, UnboundVariable
from ..lgroup import LGroupU
from ..mv import MvAlgebra
from ..report import DEFAULT_BUDGET, DEFAULT_SEED, FAIL, PASS, UNKNOWN, Report
from .ast import LU_OPS, MV_OPS, And, App, Atom, BigVee, Const, Exists, Or, Sequent, Times, Top, Var
from .syntax import show_sequent

DEFAULT_SEARCH = 3


def _mv_apply(A: MvAlgebra, name, args):
    if name == "neg":
        return A.neg(args[0])
    if name == "oplus":
        return A.oplus(*args)
    return A.odot(*args)


def _lu_apply(G: LGroupU, name, args):
    if name == "add":
        return G.add(*args)
    if name == "minus":
        return G.neg(args[0])
    if name == "inf":
        return G.inf(*args)
    return G.sup(*args)


def eval_term(M, env: dict, t):
    if isinstance(t, Var):
        if t.name not in env:
            raise UnboundVariable(t.name)
        return env[t.name]
    if isinstance(t, Const):
        if t.name == "0":
            return M.zero
        if isinstance(M, LGroupU):
            return M.unit
        raise SignatureMismatch(f"constant u is not in the MV signature ({M})")
    if isinstance(t, Times):
        n = t.n
        if isinstance(n, str):
            if "#" + n not in env:
                raise UnboundVariable(n)
            n = env["#" + n]
        v = eval_term(M, env, t.term)
        if isinstance(M, LGroupU):
            return M.times(n, v)
        acc = M.zero
        for _ in range(n):
            acc = M.oplus(acc, v)
        return acc
    if isinstance(t, App):
        args = [eval_term(M, env, a) for a in t.args]
        if isinstance(M, MvAlgebra) and t.op in MV_OPS:
            return _mv_apply(M, t.op, args)
        if isinstance(M, LGroupU) and t.op in LU_OPS:
            return _lu_apply(M, t.op, args)
        raise SignatureMismatch(f"{t.op} is not interpreted in {M}")
    raise TypeError(f"not a term: {t!r}")


def search_space(M, bound: int | None) -> tuple[list, bool]:
    """Witness candidates for an existential; the flag says the list is complete."""
    if isinstance(M, MvAlgebra):
        elems = M.elements()
        if elems is not None:
            return elems, True
        rng = random.Random(bound or 0)
        return list(M.probes()) + [M.sample(rng) for _ in range(8 * (bound or DEFAULT_SEARCH))], False
    return M.bounded_elements(bound or DEFAULT_SEARCH), False


def auto_bound(M, env: dict) -> int | None:
    """Bound for an unbounded disjunction: the largest unit bound of the
    environment's elements.  ``None`` if some element has no bound."""
    if not isinstance(M, LGroupU):
        return None
    n = 0
    for k, v in env.items():
        if k.startswith("#"):
            continue  # a bigvee index
        if M.contains(v):
            b = M.unit_bound(v)
            if b is None:
                return None
            n = max(n, b)
    return n


def _and3(values):
    out = True
    for v in values:
        if v is False:
            return False
        if v is None:
            out = None
    return out


def _or3(values):
    out = False
    for v in values:
        if v is True:
            return True
        if v is None:
            out = None
    return out


def holds(M, env: dict, f, search_bound: int | None = None):
    if isinstance(f, Top):
        return True
    if isinstance(f, Atom):
        a, b = eval_term(M, env, f.lhs), eval_term(M, env, f.rhs)
        return bool(a == b) if f.rel == "=" else M.leq(a, b)
    if isinstance(f, And):
        return _and3(holds(M, env, p, search_bound) for p in f.parts)
    if isinstance(f, Or):
        return _or3(holds(M, env, p, search_bound) for p in f.parts)
    if isinstance(f, Exists):
        cands, complete = search_space(M, search_bound)
        result = _or3(holds(M, {**env, f.var: c}, f.body, search_bound) for c in cands)
        return None if result is False and not complete else result
    if isinstance(f, BigVee):
        if f.bound is not None:
            return _or3(holds(M, {**env, "#" + f.index: n}, f.body, search_bound) for n in range(f.bound + 1))
        n_max = auto_bound(M, env)
        if n_max is None:
            n_max = search_bound or DEFAULT_SEARCH
        result = _or3(holds(M, {**env, "#" + f.index: n}, f.body, search_bound) for n in range(n_max + 1))
        return None if result is False else result
    raise TypeError(f"not a formula: {f!r}")


def _env_values(M, rng: random.Random):
    if isinstance(M, LGroupU):
        r = rng.random()
        if r < 0.2:
            return rng.choice(M.probes())
        x = M.sample(rng)
        return M.clamp(x) if r < 0.6 else x
    return M.sample(rng)


def sequent_envs(M, context, budget: int, seed: int) -> tuple[list[dict], bool]:
    """Assignments to quantify a sequent over: exhaustive when M is finite."""
    if isinstance(M, MvAlgebra) and M.is_finite:
        elems = M.elements()
        return [dict(zip(context, vals)) for vals in itertools.product(elems, repeat=len(context))], True
    if not context:
        return [{}], True
    rng = random.Random(seed)
    probes = M.probes()
    envs = [dict(zip(context, vals)) for vals in itertools.product(probes[:4], repeat=len(context))]
    envs += [{v: _env_values(M, rng) for v in context} for _ in range(budget)]
    return envs, False


def _fmt_env(M, env):
    return {k: (M.fmt(v) if M.contains(v) else str(v)) for k, v in env.items() if not k.startswith("#")}


def check_sequent(
    M,
    s: Sequent,
    budget: int = DEFAULT_BUDGET,
    seed: int = DEFAULT_SEED,
    envs: list[dict] | None = None,
    search_bound: int | None = None,
) -> Report:
    """Validity of ``s`` in M over enumerated or sampled assignments.

    This is a model check, not a derivation.  The first assignment that
    satisfies the premise but refutes the conclusion is the witness; an
    undecided premise or conclusion makes the result ``unknown`` unless a
    refutation turns up elsewhere.
    """
    exhaustive = False
    if envs is None:
        envs, exhaustive = sequent_envs(M, s.context, budget, seed)
    report = Report("sequent", f"{show_sequent(s)} in {M}", seed=seed, exhaustive=exhaustive,
                    note="model check, not a proof")
    undecided = None
    for env in envs:
        report.checked += 1
        pre = holds(M, env, s.premise, search_bound)
        if pre is False:
            continue
        post = holds(M, env, s.conclusion, search_bound)
        if pre is True and post is False:
            report.status = FAIL
            report.witness = _fmt_env(M, env)
            report.note = "premise holds, conclusion fails"
            return report
        if pre is None or post is None:
            undecided = undecided or env
    if undecided is not None:
        report.status = UNKNOWN
        report.witness = _fmt_env(M, undecided)
        report.note = "no witness within the search bound"
    else:
        report.status = PASS
    return report

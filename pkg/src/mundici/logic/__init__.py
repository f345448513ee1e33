"""Geometric formulas over the MV and l-group signatures."""
from .ast import And, App, Atom, BigVee, Const, Exists, Or, Sequent, Times, Top, Var, free_vars
from .interpret import check_interpretation_soundness, guard, interpret
from .semantics import check_sequent, eval_term, holds
from .syntax import parse_formula, parse_sequent, parse_term, show_formula, show_sequent, show_term
from .theories import interval_sequents, lu_axioms, mv_axioms

__all__ = [
    "And", "App", "Atom", "BigVee", "Const", "Exists", "Or", "Sequent", "Times", "Top", "Var",
    "check_interpretation_soundness", "check_sequent", "eval_term", "free_vars", "guard", "holds",
    "interpret", "interval_sequents", "lu_axioms", "mv_axioms", "parse_formula", "parse_sequent",
    "parse_term", "show_formula", "show_sequent", "show_term",
]

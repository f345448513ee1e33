"""Axioms of the two theories and the interpreted MV axioms, as DSL text."""
from __future__ import annotations

from .syntax import parse_sequent

MV_AXIOM_TEXT = {
    1: "tt |- [x,y,z] oplus(x, oplus(y, z)) = oplus(oplus(x, y), z)",
    2: "tt |- [x,y] oplus(x, y) = oplus(y, x)",
    3: "tt |- [x] oplus(x, 0) = x",
    4: "tt |- [x] neg(neg(x)) = x",
    5: "tt |- [x] oplus(x, neg(0)) = neg(0)",
    6: "tt |- [x,y] oplus(neg(oplus(neg(x), y)), y) = oplus(neg(oplus(neg(y), x)), x)",
}

LU_AXIOM_TEXT = {
    1: "tt |- [x,y,z] add(x, add(y, z)) = add(add(x, y), z)",
    2: "tt |- [x] add(x, 0) = x",
    3: "tt |- [x] add(x, minus(x)) = 0",
    4: "tt |- [x,y] add(x, y) = add(y, x)",
    5: "tt |- [x] x <= x",
    6: "x <= y & y <= x |- [x,y] x = y",
    7: "x <= y & y <= z |- [x,y,z] x <= z",
    8: "tt |- [x,y] inf(x, y) <= x & inf(x, y) <= y",
    9: "z <= x & z <= y |- [x,y,z] z <= inf(x, y)",
    10: "tt |- [x,y] x <= sup(x, y) & y <= sup(x, y)",
    11: "x <= z & y <= z |- [x,y,z] sup(x, y) <= z",
    12: "x <= y |- [x,y,t] add(t, x) <= add(t, y)",
    13: "tt |- [] 0 <= u",
    14: "0 <= x |- [x] bigvee n. x <= times(n, u)",
}

# The six MV axioms written directly in the l-group signature over [0, u],
# with oplus(a, b) spelled inf(u, add(a, b)) and neg(a) spelled add(u, minus(a)).
# Written out by hand so they can be compared with the mechanical translation.
_G = {
    "x": "0 <= x & x <= u",
    "xy": "0 <= x & x <= u & 0 <= y & y <= u",
    "xyz": "0 <= x & x <= u & 0 <= y & y <= u & 0 <= z & z <= u",
}
INTERVAL_SEQUENT_TEXT = {
    "i": _G["xyz"] + " |- [x,y,z] inf(u, add(x, inf(u, add(y, z)))) = inf(u, add(inf(u, add(x, y)), z))",
    "ii": _G["xy"] + " |- [x,y] inf(u, add(x, y)) = inf(u, add(y, x))",
    "iii": _G["x"] + " |- [x] inf(u, add(x, 0)) = x",
    "iv": _G["x"] + " |- [x] add(u, minus(add(u, minus(x)))) = x",
    "v": _G["x"] + " |- [x] inf(u, add(x, add(u, minus(0)))) = add(u, minus(0))",
    "vi": _G["xy"]
    + " |- [x,y] inf(u, add(add(u, minus(inf(u, add(add(u, minus(x)), y)))), y))"
    " = inf(u, add(add(u, minus(inf(u, add(add(u, minus(y)), x)))), x))",
}


def mv_axioms():
    return {k: parse_sequent(v) for k, v in MV_AXIOM_TEXT.items()}


def lu_axioms():
    return {k: parse_sequent(v) for k, v in LU_AXIOM_TEXT.items()}


def interval_sequents():
    return {k: parse_sequent(v) for k, v in INTERVAL_SEQUENT_TEXT.items()}

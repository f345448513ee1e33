"""The built-in test structures."""
from __future__ import annotations

from fractions import Fraction

from .lgroup import FreePointwise, LexZ2, RationalVec, ScaledInt
from .mv import Chain, Chang, Product


def mv_zoo() -> dict:
    zoo = {f"L{n}": Chain(n) for n in range(1, 7)}
    zoo["L2xL3"] = Product((Chain(2), Chain(3)))
    zoo["Chang"] = Chang()
    return zoo


def finite_mv_zoo() -> dict:
    return {k: A for k, A in mv_zoo().items() if A.is_finite}


def group_zoo() -> dict:
    zoo = {f"Z,{n}": ScaledInt(n) for n in range(1, 5)}
    zoo["Z2(1,1)"] = FreePointwise((1, 1))
    zoo["LexZ2(1,0)"] = LexZ2((1, 0))
    zoo["Q,1"] = RationalVec((Fraction(1),))
    return zoo


def planted_non_strong():
    """Z^2 with the unit (1, 0), which bounds nothing in the second coordinate."""
    return FreePointwise((1, 0))


# sheaves on small spaces


def _embed_chain(stalks, X, label):
    from .specs import hom_from_spec
    from .sheaf import StructSheaf

    restr = {(x, y): hom_from_spec({"kind": "embed"}, stalks[x], stalks[y], f"r({x},{y})") for x, y in X.pairs()}
    return StructSheaf(X, stalks, restr, label)


def sheaf_zoo() -> dict:
    """Named sheaves: Sierpinski and 3-chain data with chain or integer stalks."""
    from .sheaf import chain_space, point_space, sierpinski

    S, C3, C2, P = sierpinski(), chain_space(3), chain_space(2), point_space()
    return {
        "sierpinski-mv": _embed_chain({"c": Chain(2), "o": Chain(4)}, S, "F"),
        "sierpinski-lu": _embed_chain({"c": ScaledInt(2), "o": ScaledInt(4)}, S, "G"),
        "chain3-mv": _embed_chain({0: Chain(1), 1: Chain(2), 2: Chain(4)}, C3, "F"),
        "chain3-lu": _embed_chain({0: ScaledInt(1), 1: ScaledInt(2), 2: ScaledInt(4)}, C3, "G"),
        "chain2-mv": _embed_chain({0: Chain(2), 1: Chain(4)}, C2, "F"),
        "chain2-lu": _embed_chain({0: ScaledInt(2), 1: ScaledInt(4)}, C2, "G"),
        "point-mv": _embed_chain({"*": Chain(3)}, P, "F"),
        "point-lu": _embed_chain({"*": ScaledInt(3)}, P, "G"),
    }


def sheaf_maps() -> list:
    """(name, f, X, Y-sheaf names): continuous maps used for naturality checks."""
    from .sheaf import chain_space, point_space, sierpinski

    C3 = chain_space(3)
    return [
        ("identity", {"c": "c", "o": "o"}, sierpinski(), ("sierpinski-mv", "sierpinski-lu")),
        ("constant", {0: 1, 1: 1, 2: 1}, C3, ("chain2-mv", "chain2-lu")),
        ("chain-collapse", {0: 0, 1: 0, 2: 1}, C3, ("chain2-mv", "chain2-lu")),
        ("point-to-open", {"*": "o"}, point_space(), ("sierpinski-mv", "sierpinski-lu")),
        ("sierpinski-collapse", {"c": "*", "o": "*"}, sierpinski(), ("point-mv", "point-lu")),
    ]

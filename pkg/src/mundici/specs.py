"""JSON descriptions of structures, homomorphisms and sheaves.

Structures::

    {"kind": "chain", "n": 4}                 L_4 (n = null: rationals in [0, 1])
    {"kind": "finite", "size": k, "oplus": [[...]], "neg": [...], "zero": 0}
    {"kind": "product", "factors": [...]}
    {"kind": "chang"}
    {"kind": "zu", "n": 3}                    (Z, 3)
    {"kind": "zk", "unit": [1, 1]}            Z^k, coordinatewise
    {"kind": "lex2", "unit": [1, 0]}          Z x_lex Z
    {"kind": "qk", "unit": ["1/1"]}           Q^k, coordinatewise
    {"kind": "gamma", "group": {...}}         unit interval of a group
    {"kind": "lgroup", "algebra": {...}}      group of good-sequence differences

Homomorphisms (between given source and target)::

    {"kind": "identity"}
    {"kind": "embed"}                         L_m -> L_n, or (Z, m) -> (Z, n), for m | n
    {"kind": "scale", "factor": k}            x -> k x between groups of integers
    {"kind": "project", "index": i}           product -> factor
    {"kind": "table", "map": [[x, h(x)], ...]}

Sheaves::

    {"points": [...], "leq": [[...]], "stalks": {"x": structure},
     "restrictions": {"(x,y)": hom}}
"""
from __future__ import annotations

import json

from .errors import SpecError
from .functors import gamma, l_group
from .lgroup import FreePointwise, LexZ2, LGroupU, LHom, RationalVec, ScaledInt
from .mv import Chain, Chang, FiniteTable, MvAlgebra, MvHom, Product, _frac
from .sheaf import FiniteSpace, StructSheaf


def structure_from_spec(d: dict):
    if not isinstance(d, dict) or "kind" not in d:
        raise SpecError(f"structure spec needs a 'kind': {d!r}")
    kind = d["kind"]
    try:
        if kind == "chain":
            return Chain(d.get("n"))
        if kind == "finite":
            return FiniteTable(
                d["size"],
                tuple(tuple(r) for r in d["oplus"]),
                tuple(d["neg"]),
                d.get("zero", 0),
            )
        if kind == "product":
            return Product(tuple(structure_from_spec(f) for f in d["factors"]))
        if kind == "chang":
            return Chang()
        if kind == "zu":
            return ScaledInt(d.get("n", 1))
        if kind == "zk":
            return FreePointwise(tuple(d["unit"]))
        if kind == "lex2":
            return LexZ2(tuple(d.get("unit", (1, 0))))
        if kind == "qk":
            return RationalVec(tuple(_frac(v) for v in d["unit"]))
        if kind == "gamma":
            G = structure_from_spec(d["group"])
            if not isinstance(G, LGroupU):
                raise SpecError("gamma needs an l-group")
            return gamma(G)
        if kind == "lgroup":
            A = structure_from_spec(d["algebra"])
            if not isinstance(A, MvAlgebra):
                raise SpecError("lgroup needs an MV-algebra")
            return l_group(A, d.get("max_len", 3))
    except (KeyError, TypeError, ValueError) as exc:
        raise SpecError(f"bad {kind} spec: {exc}") from exc
    raise SpecError(f"unknown structure kind {kind!r}")


def is_mv(S) -> bool:
    return isinstance(S, MvAlgebra)


def hom_from_spec(d: dict, source, target, label="h"):
    kind = d.get("kind") if isinstance(d, dict) else None
    cls = MvHom if is_mv(source) else LHom
    if is_mv(source) != is_mv(target):
        raise SpecError("source and target must have the same signature")
    if kind == "identity":
        if source != target:
            raise SpecError("identity needs equal source and target")
        return cls(source, target, lambda x: x, label, d)
    if kind == "embed":
        if isinstance(source, Chain) and isinstance(target, Chain):
            return cls(source, target, lambda x: x, label, d)
        if isinstance(source, ScaledInt) and isinstance(target, ScaledInt):
            if target.n % source.n:
                raise SpecError(f"{source} does not embed in {target}")
            k = target.n // source.n
            return cls(source, target, lambda x: k * x, label, d)
        raise SpecError(f"no canonical embedding {source} -> {target}")
    if kind == "scale":
        k = d.get("factor")
        if not isinstance(k, int):
            raise SpecError("scale needs an integer factor")
        return cls(source, target, lambda x: k * x, label, d)
    if kind == "project":
        i = d.get("index")
        if not isinstance(source, Product) or not isinstance(i, int) or not 0 <= i < len(source.factors):
            raise SpecError("project needs a product source and a valid index")
        return cls(source, target, lambda x: x[i], label, d)
    if kind == "table":
        try:
            pairs = [(source.decode(a), target.decode(b)) for a, b in d["map"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise SpecError(f"bad table: {exc}") from exc
        table = dict(pairs)
        return cls(source, target, table.__getitem__, label, d)
    raise SpecError(f"unknown homomorphism kind {kind!r}")


def _pair_key(x, y) -> str:
    return f"({x},{y})"


def sheaf_from_spec(d: dict, label="F") -> StructSheaf:
    try:
        raw_points = d["points"]
        leq = d["leq"]
        stalk_specs = d["stalks"]
    except (KeyError, TypeError) as exc:
        raise SpecError(f"sheaf spec needs points, leq and stalks: {exc}") from exc
    points = tuple(raw_points)
    X = FiniteSpace(points, tuple(tuple(bool(v) for v in row) for row in leq), d.get("name", "X"))
    stalks = {}
    for p in points:
        if str(p) not in stalk_specs:
            raise SpecError(f"no stalk for point {p}")
        stalks[p] = structure_from_spec(stalk_specs[str(p)])
    restr_specs = d.get("restrictions", {})
    restr = {}
    for x, y in X.pairs():
        key = _pair_key(x, y)
        if key not in restr_specs:
            raise SpecError(f"no restriction {key}")
        restr[(x, y)] = hom_from_spec(restr_specs[key], stalks[x], stalks[y], f"r{key}")
    return StructSheaf(X, stalks, restr, label)


def sheaf_to_spec(F: StructSheaf) -> dict:
    restr = {}
    for (x, y), h in F.restrictions.items():
        if h.spec is None:
            raise SpecError(f"restriction ({x},{y}) has no JSON description")
        restr[_pair_key(x, y)] = h.spec
    return {
        "name": F.space.name,
        "points": list(F.space.points),
        "leq": [[int(v) for v in row] for row in F.space.leq],
        "stalks": {str(p): S.to_spec() for p, S in F.stalks.items()},
        "restrictions": restr,
    }


def load(path: str):
    """A structure or a sheaf, depending on the JSON shape."""
    with open(path) as fh:
        d = json.load(fh)
    return sheaf_from_spec(d) if "points" in d else structure_from_spec(d)


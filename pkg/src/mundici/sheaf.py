"""Sheaves of MV-algebras and unital l-groups on finite Alexandrov spaces.

A finite space is a finite preorder.  Opens are the up-closed sets; the
smallest open around x is its principal up-set U_x, so the stalk at x is
F(U_x).  A sheaf is stored as its stalks together with restriction maps
r[x, y]: F_x -> F_y for x <= y.  Sections over an open U are the compatible
families (s_x) with r[x, y](s_x) = s_y, under pointwise operations.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .errors import ImageEscapesInterval, NotContinuous, NotOpen, RestrictionEscapesInterval, SpecError
from .functors import check_phi_naturality, check_psi_naturality, gamma, gamma_hom, l_group, l_hom, phi, psi
from .lgroup import LGroupU, LHom, check_l_hom, check_lu_axioms
from .mv import MvAlgebra, MvHom, check_mv_axioms, check_mv_hom
from .report import DEFAULT_BUDGET, DEFAULT_SEED, Report


@dataclass(frozen=True)
class FiniteSpace:
    points: tuple
    leq: tuple  # leq[i][j]: points[i] <= points[j]
    name: str = "X"

    def __post_init__(self):
        n = len(self.points)
        if len(set(self.points)) != n:
            raise SpecError("duplicate point names")
        if len(self.leq) != n or any(len(row) != n for row in self.leq):
            raise SpecError(f"order matrix must be {n}x{n}")
        for i in range(n):
            if not self.leq[i][i]:
                raise SpecError(f"order is not reflexive at {self.points[i]}")
        for i, j, k in itertools.product(range(n), repeat=3):
            if self.leq[i][j] and self.leq[j][k] and not self.leq[i][k]:
                raise SpecError(f"order is not transitive at {self.points[i]}, {self.points[j]}, {self.points[k]}")

    @classmethod
    def from_relation(cls, points, pairs, name="X"):
        """Reflexive-transitive closure of the given (x, y) pairs meaning x <= y."""
        idx = {p: i for i, p in enumerate(points)}
        n = len(points)
        m = [[i == j for j in range(n)] for i in range(n)]
        for x, y in pairs:
            m[idx[x]][idx[y]] = True
        for k, i, j in itertools.product(range(n), repeat=3):
            if m[i][k] and m[k][j]:
                m[i][j] = True
        return cls(tuple(points), tuple(tuple(r) for r in m), name)

    def le(self, x, y) -> bool:
        return self.leq[self.points.index(x)][self.points.index(y)]

    def up(self, x) -> frozenset:
        """U_x, the smallest open containing x."""
        return frozenset(y for y in self.points if self.le(x, y))

    def is_open(self, U) -> bool:
        U = set(U)
        return U <= set(self.points) and all(self.up(x) <= U for x in U)

    def opens(self) -> list[frozenset]:
        out = set()
        for r in range(len(self.points) + 1):
            for combo in itertools.combinations(self.points, r):
                if self.is_open(combo):
                    out.add(frozenset(combo))
        return sorted(out, key=lambda U: (len(U), sorted(map(str, U))))

    def pairs(self):
        """All (x, y) with x <= y and x != y."""
        return [(x, y) for x in self.points for y in self.points if x != y and self.le(x, y)]

    def __str__(self):
        return self.name


def point_space(name="pt") -> FiniteSpace:
    return FiniteSpace(("*",), ((True,),), name)


def sierpinski() -> FiniteSpace:
    """Points o (open) and c (closed); c <= o, so the opens are {}, {o}, X."""
    return FiniteSpace.from_relation(("c", "o"), [("c", "o")], "Sierpinski")


def chain_space(n: int) -> FiniteSpace:
    pts = tuple(range(n))
    return FiniteSpace.from_relation(pts, [(i, i + 1) for i in range(n - 1)], f"chain{n}")


def antichain(n: int) -> FiniteSpace:
    return FiniteSpace.from_relation(tuple(range(n)), [], f"antichain{n}")


def _identity(S):
    return MvHom.identity(S) if isinstance(S, MvAlgebra) else LHom.identity(S)


@dataclass(frozen=True, eq=False)
class StructSheaf:
    space: FiniteSpace
    stalks: dict  # point -> MvAlgebra | LGroupU
    restrictions: dict = field(default_factory=dict)  # (x, y) -> hom, for x < y
    label: str = "F"

    def __post_init__(self):
        if set(self.stalks) != set(self.space.points):
            raise SpecError("stalks must be given for exactly the points of the space")
        kinds = {isinstance(S, MvAlgebra) for S in self.stalks.values()}
        if len(kinds) != 1 or not all(isinstance(S, (MvAlgebra, LGroupU)) for S in self.stalks.values()):
            raise SpecError("all stalks must be MV-algebras or all l-groups")
        for x, y in self.space.pairs():
            if (x, y) not in self.restrictions:
                raise SpecError(f"missing restriction for ({x},{y})")
        for (x, y), h in self.restrictions.items():
            if not self.space.le(x, y) or x == y:
                raise SpecError(f"restriction ({x},{y}) does not match the order")
            if h.source != self.stalks[x] or h.target != self.stalks[y]:
                raise SpecError(f"restriction ({x},{y}) has the wrong source or target")

    @property
    def is_mv(self) -> bool:
        return isinstance(next(iter(self.stalks.values())), MvAlgebra)

    def restriction(self, x, y):
        if x == y:
            return _identity(self.stalks[x])
        return self.restrictions[(x, y)]

    def stalk(self, x):
        return self.stalks[x]

    def __str__(self):
        return self.label


def check_sheaf(F: StructSheaf, budget: int = DEFAULT_BUDGET, seed: int = DEFAULT_SEED) -> Report:
    """Stalk axioms, restriction homomorphisms and functoriality of restriction."""
    report = Report("sheaf", f"{F.label} on {F.space}", seed=seed)
    for x in F.space.points:
        S = F.stalks[x]
        sub = check_mv_axioms(S, budget, seed) if F.is_mv else check_lu_axioms(S, budget, seed)
        sub.subject = f"stalk {x}: {sub.subject}"
        report.absorb(sub)
    for h in F.restrictions.values():
        report.absorb(check_mv_hom(h, budget, seed) if F.is_mv else check_l_hom(h, budget, seed))
    rng = random.Random(seed)
    pts = F.space.points
    for x, y, z in itertools.product(pts, repeat=3):
        if not (F.space.le(x, y) and F.space.le(y, z)):
            continue
        S = F.stalks[x]
        r_xy, r_yz, r_xz = F.restriction(x, y), F.restriction(y, z), F.restriction(x, z)
        for s in _points(S, budget // 4, rng):
            report.checked += 1
            if not r_yz(r_xy(s)) == r_xz(s):
                return report.fail("functorial", {"x": x, "y": y, "z": z, "s": S.fmt(s)})
    return report


def _points(S, n, rng):
    if isinstance(S, MvAlgebra):
        elems = S.elements()
        if elems is not None:
            return elems
    return list(S.probes()) + [S.sample(rng) for _ in range(n)]


# sections


class _Sections:
    """Shared carrier logic: compatible families indexed by the points of U."""

    def _setup(self, F: StructSheaf, U):
        self.sheaf = F
        self.points = tuple(p for p in F.space.points if p in U)
        self.factors = tuple(F.stalks[p] for p in self.points)
        self.pairs = [(i, j) for i, x in enumerate(self.points) for j, y in enumerate(self.points)
                      if i != j and F.space.le(x, y)]
        mins = [i for i, x in enumerate(self.points)
                if not any(F.space.le(y, x) and not F.space.le(x, y) for y in self.points)]
        self.minimal = mins
        self.name = f"{F.label}({{{','.join(map(str, self.points))}}})"

    def compatible(self, s) -> bool:
        F = self.sheaf
        return all(F.restriction(self.points[i], self.points[j])(s[i]) == s[j] for i, j in self.pairs)

    def contains(self, s):
        return (
            isinstance(s, tuple)
            and len(s) == len(self.factors)
            and all(S.contains(a) for S, a in zip(self.factors, s))
            and self.compatible(s)
        )

    def extend(self, seeds: dict):
        """The family generated by values at minimal points, or None if they clash."""
        F = self.sheaf
        out = [None] * len(self.points)
        for i, v in seeds.items():
            out[i] = v
        for j, y in enumerate(self.points):
            for i in self.minimal:
                if F.space.le(self.points[i], y):
                    v = F.restriction(self.points[i], y)(seeds[i])
                    if out[j] is None:
                        out[j] = v
                    elif not out[j] == v:
                        return None
        s = tuple(out)
        return s if self.compatible(s) else None

    def sample(self, rng):
        for _ in range(20):
            s = self.extend({i: self.factors[i].sample(rng) for i in self.minimal})
            if s is not None:
                return s
        return self.zero

    def fmt(self, s):
        return "(" + ", ".join(S.fmt(a) for S, a in zip(self.factors, s)) + ")"

    def encode(self, s):
        return [S.encode(a) for S, a in zip(self.factors, s)]

    def decode(self, data):
        return tuple(S.decode(a) for S, a in zip(self.factors, data))

    def __str__(self):
        return self.name


class MvSections(_Sections, MvAlgebra):
    def __init__(self, F, U):
        self._setup(F, U)

    @property
    def zero(self):
        return tuple(S.zero for S in self.factors)

    def oplus(self, x, y):
        return tuple(S.oplus(a, b) for S, a, b in zip(self.factors, x, y))

    def neg(self, x):
        return tuple(S.neg(a) for S, a in zip(self.factors, x))

    def elements(self):
        parts = [S.elements() for S in self.factors]
        if any(p is None for p in parts):
            return None
        return [s for s in (tuple(t) for t in itertools.product(*parts)) if self.compatible(s)]

    def probes(self):
        out = [self.zero, self.one]
        out += [s for s in (self.extend({i: self.factors[i].probes()[k % len(self.factors[i].probes())]
                                           for i in self.minimal}) for k in range(4)) if s is not None]
        return out

    def to_spec(self):
        raise SpecError("sections are computed, not serialized")


class LSections(_Sections, LGroupU):
    def __init__(self, F, U):
        self._setup(F, U)

    @property
    def zero(self):
        return tuple(S.zero for S in self.factors)

    @property
    def unit(self):
        return tuple(S.unit for S in self.factors)

    def add(self, x, y):
        return tuple(S.add(a, b) for S, a, b in zip(self.factors, x, y))

    def neg(self, x):
        return tuple(S.neg(a) for S, a in zip(self.factors, x))

    def leq(self, x, y):
        return all(S.leq(a, b) for S, a, b in zip(self.factors, x, y))

    def inf(self, x, y):
        return tuple(S.inf(a, b) for S, a, b in zip(self.factors, x, y))

    def sup(self, x, y):
        return tuple(S.sup(a, b) for S, a, b in zip(self.factors, x, y))

    def unit_bound(self, x):
        bounds = [S.unit_bound(a) for S, a in zip(self.factors, x)]
        if any(b is None for b in bounds):
            return None
        return max(bounds, default=0)

    def probes(self):
        out = [self.zero, self.unit, self.neg(self.unit)]
        for k in range(4):
            s = self.extend({i: self.factors[i].probes()[k % len(self.factors[i].probes())] for i in self.minimal})
            if s is not None:
                out.append(s)
        return out

    def bounded_elements(self, radius):
        rng = random.Random(radius)
        return self.probes() + [self.sample(rng) for _ in range(8 * radius)]

    def interval_elements(self):
        parts = [S.interval_elements() for S in self.factors]
        if any(p is None for p in parts):
            return None
        return [s for s in (tuple(t) for t in itertools.product(*parts)) if self.compatible(s)]

    def to_spec(self):
        raise SpecError("sections are computed, not serialized")


def sections(F: StructSheaf, U):
    """F(U) as a structure; U must be open."""
    U = frozenset(U)
    if not F.space.is_open(U):
        raise NotOpen(f"{sorted(map(str, U))} is not open in {F.space}")
    return MvSections(F, U) if F.is_mv else LSections(F, U)


def restrict_sections(F: StructSheaf, U, V):
    """F(U) -> F(V) for open V inside U: forget the coordinates outside V."""
    src, tgt = sections(F, U), sections(F, V)
    if not set(V) <= set(U):
        raise NotOpen("restriction needs V inside U")
    keep = [src.points.index(p) for p in tgt.points]
    fn = lambda s: tuple(s[i] for i in keep)  # noqa: E731
    cls = MvHom if F.is_mv else LHom
    return cls(src, tgt, fn, f"{F.label}({','.join(map(str, src.points))}>{','.join(map(str, tgt.points))})")


# the two functors, stalkwise


def gamma_sheaf(F: StructSheaf, budget: int = DEFAULT_BUDGET, seed: int = DEFAULT_SEED) -> StructSheaf:
    if F.is_mv:
        raise SpecError("gamma_sheaf needs a sheaf of l-groups")
    stalks = {x: gamma(G) for x, G in F.stalks.items()}
    restr = {}
    for (x, y), h in F.restrictions.items():
        try:
            restr[(x, y)] = gamma_hom(h, budget, seed)
        except ImageEscapesInterval as exc:
            raise RestrictionEscapesInterval(f"restriction ({x},{y}): {exc}") from exc
    return StructSheaf(F.space, stalks, restr, f"Gamma({F.label})")


def l_sheaf(F: StructSheaf, max_len: int = 3) -> StructSheaf:
    if not F.is_mv:
        raise SpecError("l_sheaf needs a sheaf of MV-algebras")
    stalks = {x: l_group(A, max_len) for x, A in F.stalks.items()}
    restr = {k: l_hom(h, max_len) for k, h in F.restrictions.items()}
    return StructSheaf(F.space, stalks, restr, f"L({F.label})")


def inverse_image(f: dict, X: FiniteSpace, F: StructSheaf) -> StructSheaf:
    """f*F for a map f: X -> Y given as a dict of points."""
    Y = F.space
    if set(f) != set(X.points) or not set(f.values()) <= set(Y.points):
        raise NotContinuous("map must send every point of X to a point of Y")
    for x, x2 in X.pairs():
        if not Y.le(f[x], f[x2]):
            raise NotContinuous(f"{x} <= {x2} but {f[x]} is not <= {f[x2]}")
    stalks = {x: F.stalks[f[x]] for x in X.points}
    restr = {(x, x2): F.restriction(f[x], f[x2]) for x, x2 in X.pairs()}
    return StructSheaf(X, stalks, restr, f"f*{F.label}")


def constant_sheaf(X: FiniteSpace, S, label="const") -> StructSheaf:
    idh = _identity(S)
    return StructSheaf(X, {x: S for x in X.points}, {p: idh for p in X.pairs()}, label)


# checks


def check_sheaf_roundtrip(F: StructSheaf, max_len: int = 3, budget: int = DEFAULT_BUDGET,
                          seed: int = DEFAULT_SEED) -> Report:
    """F against gamma(L(F)) via phi, or against L(gamma(F)) via psi, stalk by stalk.

    The stalk isomorphisms are compatible with restriction exactly when the
    naturality square of each restriction map commutes.
    """
    report = Report("sheaf-roundtrip", f"{F.label} on {F.space}", seed=seed)
    for x, S in F.stalks.items():
        wit = phi(S, max_len, budget, seed) if F.is_mv else psi(S, max_len, budget, seed)
        wit.report.subject = f"stalk {x}: {wit.report.subject}"
        report.absorb(wit.report)
    for (x, y), h in F.restrictions.items():
        sub = check_phi_naturality(h, max_len, budget, seed) if F.is_mv else check_psi_naturality(h, max_len, budget, seed)
        sub.subject = f"restriction ({x},{y}): {sub.subject}"
        report.absorb(sub)
    return report


def _same_restrictions(F1: StructSheaf, F2: StructSheaf, budget, rng, report):
    for x in F1.space.points:
        if F1.stalks[x] != F2.stalks[x]:
            return report.fail("stalk", {"x": x}, f"{F1.stalks[x]} vs {F2.stalks[x]}")
    for x, y in F1.space.pairs():
        S = F1.stalks[x]
        r1, r2 = F1.restriction(x, y), F2.restriction(x, y)
        for s in _points(S, budget // 4, rng):
            report.checked += 1
            if not r1(s) == r2(s):
                return report.fail("restriction", {"x": x, "y": y, "s": S.fmt(s)})
    return report


def check_sheaf_naturality(f: dict, X: FiniteSpace, sheaves, max_len: int = 3,
                           budget: int = DEFAULT_BUDGET, seed: int = DEFAULT_SEED) -> Report:
    """tau(f*F) agrees with f*(tau F) stalkwise, for each sample sheaf F on Y.

    tau is l_sheaf on MV-sheaves and gamma_sheaf on l-group sheaves.  When X
    is a point the result is also compared with the classical functor.
    """
    rng = random.Random(seed)
    report = Report("sheaf-naturality", f"{X} -> {sheaves[0].space if sheaves else '?'}", seed=seed)
    for F in sheaves:
        tau = (lambda G: l_sheaf(G, max_len)) if F.is_mv else (lambda G: gamma_sheaf(G, budget, seed))
        left = tau(inverse_image(f, X, F))
        right = inverse_image(f, X, tau(F))
        _same_restrictions(left, right, budget, rng, report)
        if not report.ok:
            report.note = f"{F.label}: {report.note}"
            return report
        if len(X.points) == 1:
            report.absorb(check_point_classical(inverse_image(f, X, F), max_len, budget, seed))
    return report


def check_point_classical(F: StructSheaf, max_len: int = 3, budget: int = DEFAULT_BUDGET,
                          seed: int = DEFAULT_SEED) -> Report:
    """On a one-point space the sheaf functors are the classical ones.

    Global sections of tau(F) must be the singleton families over the
    classical image of the single stalk, with the same operations.
    """
    (x,) = F.space.points
    S = F.stalks[x]
    report = Report("point-classical", f"{F.label}", seed=seed)
    T = l_group(S, max_len) if F.is_mv else gamma(S)
    glob = sections(l_sheaf(F, max_len) if F.is_mv else gamma_sheaf(F, budget, seed), F.space.points)
    if glob.factors != (T,):
        return report.fail("stalk", None, f"{glob.factors} vs {T}")
    rng = random.Random(seed)
    pts = _points(T, budget // 4, rng)
    for a in pts:
        b = rng.choice(pts)
        report.checked += 1
        if isinstance(T, MvAlgebra):
            pairs = [(glob.oplus((a,), (b,)), T.oplus(a, b)), (glob.neg((a,)), T.neg(a))]
        else:
            pairs = [(glob.add((a,), (b,)), T.add(a, b)), (glob.neg((a,)), T.neg(a)),
                     (glob.inf((a,), (b,)), T.inf(a, b)), (glob.sup((a,), (b,)), T.sup(a, b))]
        for (got,), want in pairs:
            if not got == want:
                return report.fail("operation", {"a": T.fmt(a), "b": T.fmt(b)})
        if not glob.contains((a,)):
            return report.fail("carrier", {"a": T.fmt(a)})
    return report


def check_sections_strong(F: StructSheaf, budget: int = DEFAULT_BUDGET, seed: int = DEFAULT_SEED) -> Report:
    """Strong-unit check on every open's sections of an l-group sheaf.

    Recorded for comparison with the stalk-level requirement: on a finite
    space every sections group is a finite limit of unital maps, so a bound
    for each coordinate gives a bound for the family.
    """
    rng = random.Random(seed)
    report = Report("sections-strong", f"{F.label} on {F.space}", seed=seed)
    for U in F.space.opens():
        S = sections(F, U)
        for s in S.probes() + [S.sample(rng) for _ in range(budget // 4)]:
            report.checked += 1
            n = S.unit_bound(s)
            if n is None or not S.leq(S.abs(s), S.times(n, S.unit)):
                return report.fail(14, {"U": sorted(map(str, U)), "s": S.fmt(s)})
    return report



def check_gamma_sections(F: StructSheaf, budget: int = DEFAULT_BUDGET, seed: int = DEFAULT_SEED) -> Report:
    """Gamma of the sections equals the sections of gamma_sheaf, on every open."""
    report = Report("gamma-sections", f"{F.label} on {F.space}", seed=seed, exhaustive=True)
    GF = gamma_sheaf(F, budget, seed)
    rng = random.Random(seed)
    for U in F.space.opens():
        outer, inner = gamma(sections(F, U)), sections(GF, U)
        a, b = outer.elements(), inner.elements()
        if a is not None and b is not None:
            report.checked += len(a)
            if sorted(map(str, a)) != sorted(map(str, b)):
                return report.fail("carrier", {"U": sorted(map(str, U))}, f"{len(a)} vs {len(b)} elements")
            pts = a
        else:
            pts = [outer.sample(rng) for _ in range(budget // 4)]
            report.exhaustive = False
        for x in pts:
            y = rng.choice(pts)
            report.checked += 1
            if not inner.contains(x) or not outer.oplus(x, y) == inner.oplus(x, y) or not outer.neg(x) == inner.neg(x):
                return report.fail("operation", {"U": sorted(map(str, U)), "x": outer.fmt(x), "y": outer.fmt(y)})
    return report


def check_l_sections(F: StructSheaf, max_len: int = 3, budget: int = DEFAULT_BUDGET,
                     seed: int = DEFAULT_SEED) -> Report:
    """Compare l_group(F(U)) with the sections of l_sheaf(F) over U.

    A difference [P, Q] of good sequences of families is sent to the family
    of its coordinates [P_x, Q_x].  The map is checked to be a unital
    l-homomorphism into the sections that detects zero on sampled elements.
    """
    from .functors import GroupElement, LGroupOfAlgebra
    from .goodseq import normalize

    report = Report("l-sections", f"{F.label} on {F.space}", seed=seed)
    LF = l_sheaf(F, max_len)
    for U in F.space.opens():
        if not U:
            continue
        A = sections(F, U)
        L = LGroupOfAlgebra(A, max_len)
        T = sections(LF, U)

        def coord(s, i):
            return normalize(A.factors[i], [c[i] for c in s.components])

        def proj(x):
            return tuple(GroupElement(coord(x.p, i), coord(x.q, i)) for i in range(len(A.points)))

        h = LHom(L, T, proj, f"pi_{{{','.join(map(str, A.points))}}}")
        rng = random.Random(seed)
        for x in [L.sample(rng) for _ in range(budget // 4)]:
            report.checked += 1
            if not T.contains(h(x)):
                return report.fail("into-sections", {"U": sorted(map(str, U)), "x": str(x)})
            if all(v == w for v, w in zip(h(x), T.zero)) and not x == L.zero:
                return report.fail("injective", {"U": sorted(map(str, U)), "x": str(x)})
        report.absorb(check_l_hom(h, budget // 4, seed))
    return report

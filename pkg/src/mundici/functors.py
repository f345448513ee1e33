"""The two functors of the equivalence and their natural isomorphisms.

``gamma`` sends (G, u) to the MV-algebra on [0, u]; ``l_group`` sends an
MV-algebra A to the group of formal differences [p, q] of good sequences.
``phi`` and ``psi`` build the unit isomorphisms A -> gamma(l_group(A)) and
G -> l_group(gamma(G)) and verify them.
"""
from __future__ import annotations

import functools
import random
from dataclasses import dataclass, field
from typing import Any, Callable

from .errors import ImageEscapesInterval, InvariantViolation, NegativeElement
from .goodseq import (
    GoodSequence,
    apply_hom,
    enumerate_good,
    good_inf,
    good_leq,
    good_sum,
    good_sup,
    normalize,
    random_good,
    single,
    zero_seq,
)
from .lgroup import LGroupU, LHom, sample_points
from .mv import MvAlgebra, MvHom, carrier_points, check_mv_hom
from .report import DEFAULT_BUDGET, DEFAULT_SEED, Report


@dataclass(frozen=True)
class GammaAlgebra(MvAlgebra):
    """The unit interval [0, u] of an l-group, with x+y = inf(u, x+y), ~x = u-x."""

    group: LGroupU

    @property
    def name(self):
        return f"Gamma({self.group.name})"

    @property
    def zero(self):
        return self.group.zero

    def oplus(self, x, y):
        G = self.group
        return G.inf(G.unit, G.add(x, y))

    def neg(self, x):
        return self.group.sub(self.group.unit, x)

    def odot(self, x, y):
        # equal to ~(~x + ~y) = u - inf(u, 2u - x - y)
        G = self.group
        return G.sup(G.zero, G.sub(G.add(x, y), G.unit))

    def contains(self, x):
        return self.group.contains(x) and self.group.in_interval(x)

    def elements(self):
        return self.group.interval_elements()

    def sample(self, rng):
        return self.group.clamp(self.group.sample(rng))

    def probes(self):
        G = self.group
        out = []
        for x in [G.zero, G.unit] + [G.clamp(p) for p in G.probes()]:
            if not any(x == y for y in out):
                out.append(x)
        return out

    def fmt(self, x):
        return self.group.fmt(x)

    def encode(self, x):
        return self.group.encode(x)

    def decode(self, data):
        return self.group.decode(data)

    def to_spec(self):
        return {"kind": "gamma", "group": self.group.to_spec()}


def gamma(G: LGroupU) -> GammaAlgebra:
    return GammaAlgebra(G)


def gamma_hom(h: LHom, budget: int = DEFAULT_BUDGET, seed: int = DEFAULT_SEED) -> MvHom:
    """Restrict a unital l-homomorphism to the unit intervals.

    The restriction is checked on the (enumerated or sampled) source
    interval; an image outside the target interval raises
    :class:`ImageEscapesInterval`.
    """
    A, B = gamma(h.source), gamma(h.target)
    points, _ = carrier_points(A, budget, random.Random(seed))
    for x in points:
        if not B.contains(h(x)):
            raise ImageEscapesInterval(f"{h.label}({A.fmt(x)}) = {B.fmt(h(x))} is outside [0, u]")
    return MvHom(A, B, h.fn, f"Gamma({h.label})")


class GroupElement:
    """A formal difference [p, q] of good sequences.

    Equality is semantic: [a, b] == [c, d] iff a + d = b + c.  There is no
    canonical representative, so instances are unhashable.
    """

    __slots__ = ("p", "q")

    def __init__(self, p: GoodSequence, q: GoodSequence):
        self.p = p
        self.q = q

    @property
    def algebra(self) -> MvAlgebra:
        return self.p.algebra

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return good_sum(self.p, other.q) == good_sum(self.q, other.p)

    __hash__ = None

    def __repr__(self):
        return f"GroupElement({self.p}, {self.q})"

    def __str__(self):
        return f"[{self.p} | {self.q}]"


def group_eq(x: GroupElement, y: GroupElement) -> bool:
    return x == y


@dataclass(frozen=True)
class LGroupOfAlgebra(LGroupU):
    """The l-group of formal differences of good sequences over ``algebra``.

    ``max_len`` bounds the good sequences used for sampling and for the
    finite enumeration of the unit interval.
    """

    algebra: MvAlgebra
    max_len: int = 3

    @property
    def name(self):
        return f"L({self.algebra.name})"

    def pair(self, p, q=()) -> GroupElement:
        """Build [p, q] from raw component lists."""
        return GroupElement(normalize(self.algebra, p), normalize(self.algebra, q))

    @property
    def zero(self):
        z = zero_seq(self.algebra)
        return GroupElement(z, z)

    @property
    def unit(self):
        A = self.algebra
        return GroupElement(single(A, A.one), zero_seq(A))

    def add(self, x, y):
        return GroupElement(good_sum(x.p, y.p), good_sum(x.q, y.q))

    def neg(self, x):
        return GroupElement(x.q, x.p)

    def leq(self, x, y):
        return good_leq(good_sum(x.p, y.q), good_sum(y.p, x.q))

    def sup(self, x, y):
        return GroupElement(good_sup(good_sum(x.p, y.q), good_sum(y.p, x.q)), good_sum(x.q, y.q))

    def inf(self, x, y):
        return GroupElement(good_inf(good_sum(x.p, y.q), good_sum(y.p, x.q)), good_sum(x.q, y.q))

    def contains(self, x):
        return isinstance(x, GroupElement) and x.p.algebra == self.algebra and x.q.algebra == self.algebra

    def unit_bound(self, x):
        # [p,q] <= [p,(0)] <= len(p)*u and -[p,q] <= len(q)*u
        return max(len(x.p), len(x.q))

    def sample(self, rng):
        A = self.algebra
        return GroupElement(random_good(A, rng, self.max_len), random_good(A, rng, self.max_len))

    def probes(self):
        A = self.algebra
        z = zero_seq(A)
        extra = []
        if A.is_finite:
            extra = [GroupElement(single(A, a), z) for a in A.elements()]
        return super().probes() + extra

    def bounded_elements(self, radius):
        A = self.algebra
        if A.is_finite:
            pool = enumerate_good(A, min(radius, 2))
        else:
            rng = random.Random(radius)
            pool = [random_good(A, rng, 2) for _ in range(12)]
        return [GroupElement(p, q) for p in pool for q in pool]

    def interval_elements(self):
        if not self.algebra.is_finite:
            return None
        return list(_interval_by_enumeration(self.algebra, self.max_len))

    def fmt(self, x):
        return str(x)

    def encode(self, x):
        return {"p": x.p.encode(), "q": x.q.encode()}

    def decode(self, data):
        A = self.algebra
        return self.pair([A.decode(a) for a in data["p"]], [A.decode(a) for a in data["q"]])

    def to_spec(self):
        return {"kind": "lgroup", "algebra": self.algebra.to_spec()}


@functools.lru_cache(maxsize=64)
def _interval_by_enumeration(A: MvAlgebra, max_len: int) -> tuple:
    """Distinct elements of [0, u] among all pairs of sequences up to max_len.

    Deduplication goes through semantic equality only; nothing here uses the
    map a -> [(a), (0)], so it can serve as an independent surjectivity oracle.
    """
    L = LGroupOfAlgebra(A, max_len)
    seqs = enumerate_good(A, max_len)
    found: list[GroupElement] = []
    for p in seqs:
        for q in seqs:
            x = GroupElement(p, q)
            if L.in_interval(x) and not any(x == y for y in found):
                found.append(x)
    return tuple(found)


def l_group(A: MvAlgebra, max_len: int = 3) -> LGroupOfAlgebra:
    return LGroupOfAlgebra(A, max_len)


def l_hom(f: MvHom, max_len: int = 3) -> LHom:
    """Apply an MV-homomorphism componentwise to both sequences of [p, q]."""
    src, tgt = l_group(f.source, max_len), l_group(f.target, max_len)

    def mapping(x: GroupElement) -> GroupElement:
        return GroupElement(apply_hom(f, x.p, f.target), apply_hom(f, x.q, f.target))

    return LHom(src, tgt, mapping, f"L({f.label})")


@dataclass
class IsoWitness:
    source: Any
    target: Any
    forward: Callable
    backward: Callable
    report: Report = field(default_factory=lambda: Report("iso", "?"))

    def to_json(self):
        return {
            "iso": self.report.ok,
            "checked": self.report.checked,
            "witness": self.report.witness,
            "source": str(self.source),
            "target": str(self.target),
            "report": self.report.to_json(),
        }


# phi: A -> gamma(l_group(A))


def phi_backward(A: MvAlgebra, x: GroupElement):
    """Recover a with x = [(a), (0)] for x in [0, u].

    With 0 <= x the sequences satisfy q <= p componentwise, and then
    a = (p_1 . ~q_1) + (p_2 . ~q_2) + ... ; the result is re-checked.
    """
    n = max(len(x.p), len(x.q))
    a = A.zero
    for i in range(1, n + 1):
        a = A.oplus(a, A.odot(x.p[i], A.neg(x.q[i])))
    if not GroupElement(single(A, a), zero_seq(A)) == x:
        raise InvariantViolation(f"{x} is not in the unit interval of L({A.name})")
    return a


def phi(A: MvAlgebra, max_len: int = 3, budget: int = DEFAULT_BUDGET, seed: int = DEFAULT_SEED) -> IsoWitness:
    """The isomorphism a -> [(a), (0)] from A onto gamma(l_group(A)), verified."""
    rng = random.Random(seed)
    L = l_group(A, max_len)
    GA = gamma(L)
    z = zero_seq(A)

    def forward(a):
        return GroupElement(single(A, a), z)

    def backward(x):
        return phi_backward(A, x)

    report = Report("phi-iso", f"{A.name} -> {GA.name}", seed=seed, exhaustive=A.is_finite)
    wit = IsoWitness(A, GA, forward, backward, report)
    points, _ = carrier_points(A, budget, rng)
    images = [forward(a) for a in points]
    for a, fa in zip(points, images):
        report.checked += 1
        if not GA.contains(fa):
            return _done(wit, report.fail("into-interval", {"a": A.fmt(a)}))
        if backward(fa) != a:
            return _done(wit, report.fail("backward", {"a": A.fmt(a)}))
    for i, a in enumerate(points):
        for b, fb in zip(points[i + 1 :], images[i + 1 :]):
            report.checked += 1
            if a != b and images[i] == fb:
                return _done(wit, report.fail("injective", {"a": A.fmt(a), "b": A.fmt(b)}))
            if A.leq(a, b) != L.leq(images[i], fb) or A.leq(b, a) != L.leq(fb, images[i]):
                return _done(wit, report.fail("order", {"a": A.fmt(a), "b": A.fmt(b)}))
    report.absorb(check_mv_hom(MvHom(A, GA, forward, "phi"), budget, seed))
    if not report.ok:
        return _done(wit, report)
    if A.is_finite:
        # surjectivity against an independent enumeration of the interval
        for x in L.interval_elements():
            report.checked += 1
            if not any(x == fa for fa in images):
                return _done(wit, report.fail("surjective", {"x": str(x)}))
    else:
        for _ in range(budget):
            x = GA.sample(rng)
            report.checked += 1
            if not forward(backward(x)) == x:
                return _done(wit, report.fail("surjective", {"x": str(x)}))
    return wit


def _done(wit: IsoWitness, report: Report) -> IsoWitness:
    wit.report = report
    return wit


# psi: G -> l_group(gamma(G))


def good_decompose(G: LGroupU, b) -> GoodSequence:
    """The good sequence (b_1, ..., b_n) over gamma(G) with b_1+...+b_n = b.

    Greedy: b_i = inf(u, b - b_1 - ... - b_{i-1}).  Stops when the remainder
    is 0, which happens within unit_bound(b) steps.
    """
    if not G.leq(G.zero, b):
        raise NegativeElement(f"{G.fmt(b)} is not >= 0")
    A = gamma(G)
    bound = G.unit_bound(b)
    if bound is None:
        raise InvariantViolation(f"no unit bound for {G.fmt(b)}")
    comps = []
    rest = b
    while not rest == G.zero:
        if len(comps) > bound:
            raise InvariantViolation(f"greedy decomposition of {G.fmt(b)} exceeded {bound} steps")
        piece = G.inf(G.unit, rest)
        comps.append(piece)
        rest = G.sub(rest, piece)
    out = GoodSequence(A, tuple(comps))
    for i in range(len(comps) - 1):
        if not A.oplus(comps[i], comps[i + 1]) == comps[i]:
            raise InvariantViolation(f"greedy decomposition of {G.fmt(b)} is not good")
    return out


def seq_total(G: LGroupU, s: GoodSequence):
    acc = G.zero
    for a in s.components:
        acc = G.add(acc, a)
    return acc


def psi_forward(G: LGroupU, a) -> GroupElement:
    return GroupElement(good_decompose(G, G.pos_part(a)), good_decompose(G, G.neg_part(a)))


def psi_backward(G: LGroupU, x: GroupElement):
    """f_G: [p, q] -> (p_1 + ... + p_n) - (q_1 + ... + q_m)."""
    return G.sub(seq_total(G, x.p), seq_total(G, x.q))


def psi(G: LGroupU, max_len: int = 3, budget: int = DEFAULT_BUDGET, seed: int = DEFAULT_SEED) -> IsoWitness:
    """The isomorphism G -> l_group(gamma(G)), verified on samples."""
    rng = random.Random(seed)
    GA = gamma(G)
    L = l_group(GA, max_len)

    def forward(a):
        return psi_forward(G, a)

    def backward(x):
        return psi_backward(G, x)

    report = Report("psi-iso", f"{G.name} -> {L.name}", seed=seed)
    wit = IsoWitness(G, L, forward, backward, report)
    pts = sample_points(G, budget, rng)

    def w(**kw):
        return {k: (G.fmt(v) if G.contains(v) else str(v)) for k, v in kw.items()}

    unit_seq = single(GA, G.unit)
    if not backward(GroupElement(unit_seq, zero_seq(GA))) == G.unit:
        return _done(wit, report.fail("f((u))=u", None))
    if not forward(G.unit) == L.unit:
        return _done(wit, report.fail("unit", None))
    for a in pts:
        b = rng.choice(pts)
        fa, fb = forward(a), forward(b)
        report.checked += 1
        if not backward(fa) == a:
            return _done(wit, report.fail("f.psi=id", w(a=a)))
        for name, lhs, rhs in (
            ("add", lambda: forward(G.add(a, b)), lambda: L.add(fa, fb)),
            ("neg", lambda: forward(G.neg(a)), lambda: L.neg(fa)),
            ("inf", lambda: forward(G.inf(a, b)), lambda: L.inf(fa, fb)),
            ("sup", lambda: forward(G.sup(a, b)), lambda: L.sup(fa, fb)),
        ):
            if not lhs() == rhs():
                return _done(wit, report.fail(name, w(a=a, b=b)))
        if G.leq(a, b) != L.leq(fa, fb):
            return _done(wit, report.fail("order", w(a=a, b=b)))
    for _ in range(budget):
        p, q = random_good(GA, rng, max_len), random_good(GA, rng, max_len)
        y = GroupElement(p, q)
        report.checked += 1
        if not forward(backward(y)) == y:
            return _done(wit, report.fail("psi.f=id", {"y": str(y)}))
        # f restricted to the monoid of good sequences is a lattice-monoid map
        for name, lhs, rhs in (
            ("f(a+b)", seq_total(G, good_sum(p, q)), G.add(seq_total(G, p), seq_total(G, q))),
            ("f(inf)", seq_total(G, good_inf(p, q)), G.inf(seq_total(G, p), seq_total(G, q))),
            ("f(sup)", seq_total(G, good_sup(p, q)), G.sup(seq_total(G, p), seq_total(G, q))),
        ):
            if not lhs == rhs:
                return _done(wit, report.fail(name, {"a": str(p), "b": str(q)}))
    return wit


# naturality squares


def check_phi_naturality(h: MvHom, max_len: int = 3, budget: int = DEFAULT_BUDGET, seed: int = DEFAULT_SEED) -> Report:
    """gamma(l_hom(h)) . phi_A == phi_B . h on enumerated/sampled a."""
    A, B = h.source, h.target
    report = Report("phi-naturality", h.label, seed=seed, exhaustive=A.is_finite)
    top = l_hom(h, max_len)
    z_b = zero_seq(B)
    for a in carrier_points(A, budget, random.Random(seed))[0]:
        report.checked += 1
        left = top(GroupElement(single(A, a), zero_seq(A)))
        right = GroupElement(single(B, h(a)), z_b)
        if not left == right:
            return report.fail("square", {"a": A.fmt(a)})
    return report


def check_psi_naturality(h: LHom, max_len: int = 3, budget: int = DEFAULT_BUDGET, seed: int = DEFAULT_SEED) -> Report:
    """l_hom(gamma_hom(h)) . psi_G == psi_H . h on sampled x."""
    G, H = h.source, h.target
    report = Report("psi-naturality", h.label, seed=seed)
    top = l_hom(gamma_hom(h, budget, seed), max_len)
    for x in sample_points(G, budget, random.Random(seed)):
        report.checked += 1
        if not top(psi_forward(G, x)) == psi_forward(H, h(x)):
            return report.fail("square", {"x": G.fmt(x)})
    return report


def check_naturality(h, max_len: int = 3, budget: int = DEFAULT_BUDGET, seed: int = DEFAULT_SEED) -> Report:
    """Dispatch on the kind of homomorphism: phi's square for MvHom, psi's for LHom."""
    if isinstance(h, MvHom):
        return check_phi_naturality(h, max_len, budget, seed)
    if isinstance(h, LHom):
        return check_psi_naturality(h, max_len, budget, seed)
    raise TypeError(f"not a homomorphism: {h!r}")


def check_strong_unit_of_l(A: MvAlgebra, max_len: int = 2, budget: int = DEFAULT_BUDGET, seed: int = DEFAULT_SEED) -> Report:
    """Every [p, q] >= 0 equals some [c, (0)] and lies below len(c)*u.

    The positive representative c is found by searching q + c = p over the
    enumerated sequences (finite A) or is p's difference via sampling.
    """
    L = l_group(A, max_len)
    rng = random.Random(seed)
    if A.is_finite:
        seqs = enumerate_good(A, max_len)
        pairs = [GroupElement(p, q) for p in seqs for q in seqs]
        exhaustive = True
    else:
        seqs = [random_good(A, rng, max_len) for _ in range(budget)]
        pairs = [GroupElement(random_good(A, rng, max_len), random_good(A, rng, max_len)) for _ in range(budget)]
        exhaustive = False
    report = Report("strong-unit-L", L.name, seed=seed, exhaustive=exhaustive)
    for x in pairs:
        if not L.leq(L.zero, x):
            continue
        report.checked += 1
        c = next((c for c in seqs if good_sum(x.q, c) == x.p), None)
        if c is None:
            if exhaustive:
                return report.fail("positive-rep", {"x": str(x)})
            continue
        if not L.leq(x, L.times(len(c), L.unit)):
            return report.fail(14, {"x": str(x), "m": len(c)})
    return report


__all__ = [
    "GammaAlgebra",
    "GroupElement",
    "IsoWitness",
    "LGroupOfAlgebra",
    "check_naturality",
    "check_phi_naturality",
    "check_psi_naturality",
    "check_strong_unit_of_l",
    "gamma",
    "gamma_hom",
    "good_decompose",
    "group_eq",
    "l_group",
    "l_hom",
    "phi",
    "phi_backward",
    "psi",
    "psi_backward",
    "psi_forward",
]

"""MV-algebras: carriers, derived operations, homomorphisms, axiom checks.

Four exact representations are provided:

* :class:`FiniteTable` -- an index-based carrier with explicit tables,
* :class:`Chain` -- rationals in [0, 1], optionally only multiples of 1/n
  (the finite chain L_n); ``Chain(None)`` is the rational unit interval,
* :class:`Product` -- componentwise operations over a list of factors,
* :class:`Chang` -- the unit interval of Z x_lex Z under (1, 0).

Subclasses implement the primitive ``oplus``/``neg``/``zero`` unchecked; the
module-level functions (:func:`odot`, :func:`mv_leq`, ...) validate carrier
membership first.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable

from .errors import ElementNotInCarrier, SourceTargetMismatch, SpecError
from .report import DEFAULT_BUDGET, DEFAULT_SEED, Report


class MvAlgebra:
    name = "MV"

    # primitive structure; overridden by every representation
    zero: Any

    def oplus(self, x, y):
        raise NotImplementedError

    def neg(self, x):
        raise NotImplementedError

    def contains(self, x) -> bool:
        raise NotImplementedError

    def elements(self) -> list | None:
        """All elements when the carrier is finite, else ``None``."""
        return None

    def sample(self, rng: random.Random):
        raise NotImplementedError

    def probes(self) -> list:
        """A few fixed elements always included in sampled checks."""
        return [self.zero, self.one]

    def fmt(self, x) -> str:
        return str(x)

    def encode(self, x):
        return x

    def decode(self, data):
        return data

    def to_spec(self) -> dict:
        raise NotImplementedError

    # derived structure

    @property
    def one(self):
        return self.neg(self.zero)

    @property
    def is_finite(self) -> bool:
        return self.elements() is not None

    def odot(self, x, y):
        return self.neg(self.oplus(self.neg(x), self.neg(y)))

    def leq(self, x, y) -> bool:
        return self.oplus(self.neg(x), y) == self.one

    def sup(self, x, y):
        return self.oplus(self.odot(x, self.neg(y)), y)

    def inf(self, x, y):
        return self.odot(x, self.oplus(self.neg(x), y))

    def check(self, *xs):
        for x in xs:
            if not self.contains(x):
                raise ElementNotInCarrier(self, x)

    def __str__(self):
        return self.name


def odot(A: MvAlgebra, x, y):
    A.check(x, y)
    return A.odot(x, y)


def mv_leq(A: MvAlgebra, x, y) -> bool:
    A.check(x, y)
    return A.leq(x, y)


def mv_sup(A: MvAlgebra, x, y):
    A.check(x, y)
    return A.sup(x, y)


def mv_inf(A: MvAlgebra, x, y):
    A.check(x, y)
    return A.inf(x, y)


@dataclass(frozen=True, eq=True)
class FiniteTable(MvAlgebra):
    """Carrier ``range(size)``; ``labels`` only affect printing."""

    size: int
    oplus_table: tuple[tuple[int, ...], ...]
    neg_table: tuple[int, ...]
    zero_index: int = 0
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        k = self.size
        if k < 1 or len(self.oplus_table) != k or any(len(r) != k for r in self.oplus_table):
            raise SpecError(f"oplus table must be {k}x{k}")
        if len(self.neg_table) != k:
            raise SpecError(f"neg table must have {k} entries")
        cells = [v for r in self.oplus_table for v in r] + list(self.neg_table) + [self.zero_index]
        if any(not isinstance(v, int) or not 0 <= v < k for v in cells):
            raise SpecError("table entries must be indices in range(size)")

    @property
    def name(self):
        return f"FiniteTable({self.size})"

    @property
    def zero(self):
        return self.zero_index

    def oplus(self, x, y):
        return self.oplus_table[x][y]

    def neg(self, x):
        return self.neg_table[x]

    def contains(self, x):
        return isinstance(x, int) and not isinstance(x, bool) and 0 <= x < self.size

    def elements(self):
        return list(range(self.size))

    def sample(self, rng):
        return rng.randrange(self.size)

    def fmt(self, x):
        return self.labels[x] if self.labels else str(x)

    def to_spec(self):
        return {
            "kind": "finite",
            "size": self.size,
            "oplus": [list(r) for r in self.oplus_table],
            "neg": list(self.neg_table),
            "zero": self.zero_index,
        }

    @classmethod
    def from_algebra(cls, A: MvAlgebra) -> FiniteTable:
        """Tabulate a finite algebra; labels come from ``A.fmt``."""
        elems = A.elements()
        if elems is None:
            raise SpecError(f"{A} is infinite")
        index = {e: i for i, e in enumerate(elems)}
        return cls(
            size=len(elems),
            oplus_table=tuple(tuple(index[A.oplus(x, y)] for y in elems) for x in elems),
            neg_table=tuple(index[A.neg(x)] for x in elems),
            zero_index=index[A.zero],
            labels=tuple(A.fmt(e) for e in elems),
        )


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise SpecError(f"not an exact rational: {x!r}")


def fmt_frac(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def encode_frac(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class Chain(MvAlgebra):
    """The standard MV-algebra on rationals in [0, 1].

    With ``n`` set, the carrier is {0, 1/n, ..., 1}, i.e. the chain L_n.
    """

    n: int | None = None
    max_denominator: int = 12  # sampling only, when n is None

    def __post_init__(self):
        if self.n is not None and self.n < 1:
            raise SpecError("chain length n must be >= 1")

    @property
    def name(self):
        return "Q[0,1]" if self.n is None else f"L{self.n}"

    @property
    def zero(self):
        return Fraction(0)

    def oplus(self, x, y):
        return min(Fraction(1), x + y)

    def neg(self, x):
        return 1 - x

    # on a chain the derived lattice operations are min/max; keep the
    # MV-term definitions from the base class so they stay under test

    def contains(self, x):
        if not isinstance(x, Fraction) or not 0 <= x <= 1:
            return False
        return self.n is None or self.n % x.denominator == 0

    def elements(self):
        if self.n is None:
            return None
        return [Fraction(k, self.n) for k in range(self.n + 1)]

    def sample(self, rng):
        if self.n is not None:
            return Fraction(rng.randint(0, self.n), self.n)
        q = rng.randint(1, self.max_denominator)
        return Fraction(rng.randint(0, q), q)

    def probes(self):
        return [Fraction(0), Fraction(1), Fraction(1, 2)] if self.n is None else [Fraction(0), Fraction(1)]

    def fmt(self, x):
        return fmt_frac(x)

    def encode(self, x):
        return encode_frac(x)

    def decode(self, data):
        return _frac(data)

    def to_spec(self):
        return {"kind": "chain", "n": self.n}


@dataclass(frozen=True)
class Product(MvAlgebra):
    factors: tuple[MvAlgebra, ...]

    def __post_init__(self):
        if not self.factors:
            raise SpecError("product needs at least one factor")

    @property
    def name(self):
        return "x".join(f.name for f in self.factors)

    @property
    def zero(self):
        return tuple(f.zero for f in self.factors)

    def oplus(self, x, y):
        return tuple(f.oplus(a, b) for f, a, b in zip(self.factors, x, y))

    def neg(self, x):
        return tuple(f.neg(a) for f, a in zip(self.factors, x))

    def contains(self, x):
        return (
            isinstance(x, tuple)
            and len(x) == len(self.factors)
            and all(f.contains(a) for f, a in zip(self.factors, x))
        )

    def elements(self):
        parts = [f.elements() for f in self.factors]
        if any(p is None for p in parts):
            return None
        return [tuple(t) for t in itertools.product(*parts)]

    def sample(self, rng):
        return tuple(f.sample(rng) for f in self.factors)

    def fmt(self, x):
        return "(" + ",".join(f.fmt(a) for f, a in zip(self.factors, x)) + ")"

    def encode(self, x):
        return [f.encode(a) for f, a in zip(self.factors, x)]

    def decode(self, data):
        if not isinstance(data, list) or len(data) != len(self.factors):
            raise SpecError(f"expected a list of {len(self.factors)} components")
        return tuple(f.decode(a) for f, a in zip(self.factors, data))

    def to_spec(self):
        return {"kind": "product", "factors": [f.to_spec() for f in self.factors]}


_CHANG_TOP = (1, 0)


def _lex_min(x, y):
    return x if x <= y else y  # tuples compare lexicographically


@dataclass(frozen=True)
class Chang(MvAlgebra):
    """Chang's algebra: pairs (0, k) and (1, -k) with k >= 0."""

    sample_radius: int = 20

    name = "Chang"

    @property
    def zero(self):
        return (0, 0)

    def oplus(self, x, y):
        return _lex_min(_CHANG_TOP, (x[0] + y[0], x[1] + y[1]))

    def neg(self, x):
        return (1 - x[0], -x[1])

    def contains(self, x):
        if not (isinstance(x, tuple) and len(x) == 2 and all(type(v) is int for v in x)):
            return False
        return (x[0] == 0 and x[1] >= 0) or (x[0] == 1 and x[1] <= 0)

    def sample(self, rng):
        k = rng.randint(0, self.sample_radius)
        return (0, k) if rng.random() < 0.5 else (1, -k)

    def probes(self):
        return [(0, 0), (1, 0), (0, 1), (1, -1)]

    def fmt(self, x):
        return f"({x[0]},{x[1]})"

    def encode(self, x):
        return list(x)

    def decode(self, data):
        return tuple(data)

    def to_spec(self):
        return {"kind": "chang"}


# homomorphisms


@dataclass(frozen=True, eq=False)
class MvHom:
    source: MvAlgebra
    target: MvAlgebra
    fn: Callable[[Any], Any]
    label: str = "h"
    spec: dict | None = None  # JSON description, when built from one

    def __call__(self, x):
        return self.fn(x)

    @classmethod
    def from_table(cls, source, target, table: dict, label="h"):
        return cls(source, target, table.__getitem__, label)

    @classmethod
    def identity(cls, A: MvAlgebra):
        return cls(A, A, lambda x: x, f"id_{A.name}", {"kind": "identity"})

    def then(self, other: MvHom) -> MvHom:
        """``other`` after ``self``."""
        if self.target != other.source:
            raise SourceTargetMismatch(f"cannot compose {self.label} with {other.label}")
        return MvHom(self.source, other.target, lambda x: other.fn(self.fn(x)), f"{other.label}.{self.label}")


# sampling helpers


def carrier_points(A: MvAlgebra, budget: int, rng: random.Random) -> tuple[list, bool]:
    """Elements to quantify over: the whole carrier, or probes plus samples."""
    elems = A.elements()
    if elems is not None:
        return elems, True
    return list(A.probes()) + [A.sample(rng) for _ in range(budget)], False


def tuples(A: MvAlgebra, arity: int, budget: int, rng: random.Random) -> tuple[Iterable[tuple], bool]:
    """All ``arity``-tuples of a finite carrier, else ``budget`` random tuples."""
    elems = A.elements()
    if elems is not None:
        return itertools.product(elems, repeat=arity), True
    probes = A.probes()
    fixed = list(itertools.product(probes, repeat=arity))
    return fixed + [tuple(A.sample(rng) for _ in range(arity)) for _ in range(budget)], False


MV_AXIOMS = {
    1: ("x+(y+z) = (x+y)+z", 3, lambda A, x, y, z: A.oplus(x, A.oplus(y, z)) == A.oplus(A.oplus(x, y), z)),
    2: ("x+y = y+x", 2, lambda A, x, y: A.oplus(x, y) == A.oplus(y, x)),
    3: ("x+0 = x", 1, lambda A, x: A.oplus(x, A.zero) == x),
    4: ("~~x = x", 1, lambda A, x: A.neg(A.neg(x)) == x),
    5: ("x+~0 = ~0", 1, lambda A, x: A.oplus(x, A.neg(A.zero)) == A.neg(A.zero)),
    6: (
        "~(~x+y)+y = ~(~y+x)+x",
        2,
        lambda A, x, y: A.oplus(A.neg(A.oplus(A.neg(x), y)), y) == A.oplus(A.neg(A.oplus(A.neg(y), x)), x),
    ),
}


def _witness(A, names, values):
    return {n: A.fmt(v) for n, v in zip(names, values)}


def check_mv_axioms(A: MvAlgebra, budget: int = DEFAULT_BUDGET, seed: int = DEFAULT_SEED) -> Report:
    """Check closure and the six MV axioms.

    Exhaustive over all triples for finite carriers; otherwise ``budget``
    random tuples per axiom (plus the algebra's probe elements).
    """
    rng = random.Random(seed)
    report = Report("mv-axioms", A.name, seed=seed, exhaustive=A.is_finite)
    if not A.contains(A.zero):
        return report.fail("closure", {"zero": repr(A.zero)}, "zero not in carrier")
    for xs in tuples(A, 2, budget, rng)[0]:
        report.checked += 1
        x, y = xs
        for value, what in ((A.oplus(x, y), "oplus"), (A.neg(x), "neg")):
            if not A.contains(value):
                return report.fail("closure", _witness(A, "xy", xs), f"{what} leaves the carrier")
    for index, (text, arity, law) in MV_AXIOMS.items():
        points, _ = tuples(A, arity, budget, rng)
        for xs in points:
            report.checked += 1
            if not law(A, *xs):
                return report.fail(index, _witness(A, "xyz", xs), text)
    return report


def check_mv_hom(h: MvHom, budget: int = DEFAULT_BUDGET, seed: int = DEFAULT_SEED) -> Report:
    """Check that ``h`` preserves oplus, neg and 0 on enumerated/sampled pairs."""
    rng = random.Random(seed)
    A, B = h.source, h.target
    report = Report("mv-hom", f"{h.label}: {A.name} -> {B.name}", seed=seed, exhaustive=A.is_finite)
    points, _ = carrier_points(A, budget, rng)
    for x in points:
        try:
            image = h(x)
        except (KeyError, IndexError) as exc:
            raise SourceTargetMismatch(f"{h.label} is undefined at {A.fmt(x)}") from exc
        if not B.contains(image):
            raise SourceTargetMismatch(f"{h.label}({A.fmt(x)}) = {image!r} is not in {B.name}")
    if h(A.zero) != B.zero:
        return report.fail("zero", {"h(0)": B.fmt(h(A.zero))})
    for x in points:
        report.checked += 1
        if h(A.neg(x)) != B.neg(h(x)):
            return report.fail("neg", {"x": A.fmt(x)})
    for x, y in tuples(A, 2, budget, rng)[0]:
        report.checked += 1
        if h(A.oplus(x, y)) != B.oplus(h(x), h(y)):
            return report.fail("oplus", _witness(A, "xy", (x, y)))
    return report


def is_isomorphic_finite(A: MvAlgebra, B: MvAlgebra) -> bool:
    """Brute-force isomorphism test for small finite algebras."""
    ea, eb = A.elements(), B.elements()
    if ea is None or eb is None:
        raise ValueError("both algebras must be finite")
    if len(ea) != len(eb):
        return False
    for perm in itertools.permutations(eb):
        table = dict(zip(ea, perm))
        if table[A.zero] != B.zero:
            continue
        if all(table[A.neg(x)] == B.neg(table[x]) for x in ea) and all(
            table[A.oplus(x, y)] == B.oplus(table[x], table[y]) for x in ea for y in ea
        ):
            return True
    return False

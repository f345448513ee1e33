"""Good sequences over an MV-algebra and the lattice-ordered monoid they form.

A good sequence is stored trimmed: no trailing zeros, and the empty tuple is
the zero sequence (0).  Two zero-padded sequences therefore denote the same
good sequence exactly when their trimmed forms are equal.  Indices in
docstrings are 1-based; components past the stored length read as 0.
"""
from __future__ import annotations

import functools
import itertools
import random
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import AlgebraMismatch, InvariantViolation, NotAGoodSequence
from .mv import MvAlgebra
from .report import DEFAULT_BUDGET, DEFAULT_SEED, Report


@dataclass(frozen=True)
class GoodSequence:
    algebra: MvAlgebra
    components: tuple = ()

    def __len__(self):
        return len(self.components)

    def __getitem__(self, i: int):
        """1-based component access, 0 beyond the support."""
        if i < 1:
            raise IndexError("good sequences are indexed from 1")
        if i <= len(self.components):
            return self.components[i - 1]
        return self.algebra.zero

    def padded(self, n: int) -> tuple:
        return tuple(self[i] for i in range(1, n + 1))

    def __str__(self):
        if not self.components:
            return "(0)"
        return "(" + ",".join(self.algebra.fmt(a) for a in self.components) + ")"

    def encode(self) -> list:
        return [self.algebra.encode(a) for a in self.components]


def normalize(A: MvAlgebra, raw: Iterable) -> GoodSequence:
    """Trim trailing zeros and verify absorption a_i + a_{i+1} = a_i.

    Raises :class:`NotAGoodSequence` carrying the first 1-based index i at
    which absorption fails.
    """
    comps = list(raw)
    A.check(*comps)
    while comps and comps[-1] == A.zero:
        comps.pop()
    for i in range(len(comps) - 1):
        if A.oplus(comps[i], comps[i + 1]) != comps[i]:
            raise NotAGoodSequence(i + 1, tuple(comps))
    return GoodSequence(A, tuple(comps))


def _trusted(A: MvAlgebra, comps: list) -> GoodSequence:
    while comps and comps[-1] == A.zero:
        comps.pop()
    return GoodSequence(A, tuple(comps))


def zero_seq(A: MvAlgebra) -> GoodSequence:
    return GoodSequence(A, ())


def single(A: MvAlgebra, a) -> GoodSequence:
    """The sequence (a) = (a, 0, 0, ...)."""
    return normalize(A, [a])


def ones(A: MvAlgebra, m: int) -> GoodSequence:
    """1^m: the first m components equal to 1."""
    return GoodSequence(A, (A.one,) * m) if A.one != A.zero else zero_seq(A)


def is_good(A: MvAlgebra, comps: Sequence) -> bool:
    try:
        normalize(A, comps)
    except NotAGoodSequence:
        return False
    return True


def _same_algebra(x: GoodSequence, y: GoodSequence) -> MvAlgebra:
    if x.algebra != y.algebra:
        raise AlgebraMismatch(f"{x.algebra} vs {y.algebra}")
    return x.algebra


def sum_component(x: GoodSequence, y: GoodSequence, i: int):
    """c_i = a_i + (a_{i-1}.b_1) + ... + (a_1.b_{i-1}) + b_i."""
    A = x.algebra
    c = A.oplus(x[i], y[i])
    # a_k . b_j vanishes once either index leaves its support
    for j in range(max(1, i - len(x)), min(i - 1, len(y)) + 1):
        c = A.oplus(c, A.odot(x[i - j], y[j]))
    return c


@functools.lru_cache(maxsize=1 << 16)
def good_sum(x: GoodSequence, y: GoodSequence) -> GoodSequence:
    """The monoid sum; memoized, since the group operations reuse it heavily."""
    A = _same_algebra(x, y)
    n = len(x) + len(y)
    comps = [sum_component(x, y, i) for i in range(1, n + 1)]
    if n and sum_component(x, y, n + 1) != A.zero:
        raise InvariantViolation(f"sum of {x} and {y} has support beyond {n}")
    out = _trusted(A, comps)
    for i in range(len(out) - 1):
        if A.oplus(out.components[i], out.components[i + 1]) != out.components[i]:
            raise InvariantViolation(f"sum of {x} and {y} is not good at index {i + 1}")
    return out


def good_leq(x: GoodSequence, y: GoodSequence) -> bool:
    A = _same_algebra(x, y)
    n = max(len(x), len(y))
    return all(A.leq(x[i], y[i]) for i in range(1, n + 1))


def _pointwise(op: Callable, x: GoodSequence, y: GoodSequence) -> GoodSequence:
    A = _same_algebra(x, y)
    n = max(len(x), len(y))
    return normalize(A, [op(x[i], y[i]) for i in range(1, n + 1)])


def good_inf(x: GoodSequence, y: GoodSequence) -> GoodSequence:
    return _pointwise(x.algebra.inf, x, y)


def good_sup(x: GoodSequence, y: GoodSequence) -> GoodSequence:
    return _pointwise(x.algebra.sup, x, y)


def apply_hom(f, x: GoodSequence, target: MvAlgebra) -> GoodSequence:
    """Componentwise image of a good sequence under an MV-homomorphism."""
    return normalize(target, [f(a) for a in x.components])


def enumerate_good(A: MvAlgebra, max_len: int) -> list[GoodSequence]:
    """All good sequences of length <= max_len over a finite algebra."""
    elems = A.elements()
    if elems is None:
        raise ValueError(f"{A} is infinite; use random_good")
    nonzero = [a for a in elems if a != A.zero]
    out = [zero_seq(A)]
    frontier = [(a,) for a in nonzero]
    for _ in range(max_len):
        out.extend(GoodSequence(A, t) for t in frontier)
        frontier = [t + (b,) for t in frontier for b in nonzero if A.oplus(t[-1], b) == t[-1]]
    return out


def random_good(A: MvAlgebra, rng: random.Random, max_len: int) -> GoodSequence:
    """A random good sequence: the sum of up to max_len singletons (a)."""
    acc = zero_seq(A)
    for _ in range(rng.randint(0, max_len)):
        acc = good_sum(acc, single(A, A.sample(rng)))
    return acc


def sequence_pool(A: MvAlgebra, max_len: int, budget: int, rng: random.Random) -> tuple[list[GoodSequence], bool]:
    if A.is_finite:
        return enumerate_good(A, max_len), True
    fixed = [zero_seq(A), ones(A, 1), ones(A, 2)]
    return fixed + [random_good(A, rng, max_len) for _ in range(budget)], False


def _triples(pool, exhaustive, budget, rng):
    if exhaustive:
        return itertools.product(pool, repeat=3)
    return ((rng.choice(pool), rng.choice(pool), rng.choice(pool)) for _ in range(budget))


def _ws(names, seqs):
    return {n: str(s) for n, s in zip(names, seqs)}


def check_monoid_laws(
    A: MvAlgebra,
    max_len: int = 3,
    budget: int = DEFAULT_BUDGET,
    seed: int = DEFAULT_SEED,
    add: Callable[[GoodSequence, GoodSequence], GoodSequence] = good_sum,
) -> Report:
    """Check the lattice-ordered monoid laws of good sequences.

    Exhaustive over all triples of sequences of length <= max_len when A is
    finite, else ``budget`` random triples.  Construction failures inside a
    law (a sum that is not good) are reported as failures, not raised.
    """
    rng = random.Random(seed)
    pool, exhaustive = sequence_pool(A, max_len, budget, rng)
    report = Report("monoid-laws", f"{A.name} len<={max_len}", seed=seed, exhaustive=exhaustive)
    zero = zero_seq(A)
    for a, b, c in _triples(pool, exhaustive, budget, rng):
        report.checked += 1
        try:
            ab = add(a, b)
            laws = (
                ("assoc", lambda: add(ab, c) == add(a, add(b, c))),
                ("comm", lambda: ab == add(b, a)),
                ("identity", lambda: add(a, zero) == a),
                ("monotone", lambda: not good_leq(a, b) or good_leq(add(a, c), add(b, c))),
                ("inf-lower", lambda: good_leq(good_inf(a, b), a) and good_leq(good_inf(a, b), b)),
                ("sup-upper", lambda: good_leq(a, good_sup(a, b)) and good_leq(b, good_sup(a, b))),
                ("inf-greatest", lambda: not (good_leq(c, a) and good_leq(c, b)) or good_leq(c, good_inf(a, b))),
                ("sup-least", lambda: not (good_leq(a, c) and good_leq(b, c)) or good_leq(good_sup(a, b), c)),
                ("order=inf", lambda: good_leq(a, b) == (good_inf(a, b) == a)),
                ("support", lambda: len(ab) <= len(a) + len(b)),
            )
            for name, law in laws:
                if not law():
                    return report.fail(name, _ws("abc", (a, b, c)))
        except (NotAGoodSequence, InvariantViolation) as exc:
            return report.fail("well-defined", _ws("abc", (a, b, c)), str(exc))
    return report


def check_cancellation(
    A: MvAlgebra,
    max_len: int = 3,
    budget: int = DEFAULT_BUDGET,
    seed: int = DEFAULT_SEED,
    add: Callable[[GoodSequence, GoodSequence], GoodSequence] = good_sum,
) -> Report:
    """Check a+b = a+c implies b = c."""
    rng = random.Random(seed)
    pool, exhaustive = sequence_pool(A, max_len, budget, rng)
    report = Report("cancellation", f"{A.name} len<={max_len}", seed=seed, exhaustive=exhaustive)
    if exhaustive:
        # bucket by a+b so each collision is examined once
        for a in pool:
            seen = {}
            for b in pool:
                report.checked += 1
                s = add(a, b)
                if s in seen and seen[s] != b:
                    return report.fail("cancel", _ws("abc", (a, seen[s], b)))
                seen[s] = b
        return report
    for _ in range(budget):
        a, b = rng.choice(pool), rng.choice(pool)
        s = add(a, b)
        # an equal sum must come from b itself; test b against near misses too
        for c in (b, *(rng.choice(pool) for _ in range(4))):
            report.checked += 1
            if add(a, c) == s and c != b:
                return report.fail("cancel", _ws("abc", (a, b, c)))
    return report


def check_order_existential(A: MvAlgebra, max_len: int = 2) -> Report:
    """On finite A: x <= y iff some enumerated c has x + c = y.

    A difference c with x + c = y satisfies c <= y, so candidates of length
    <= max_len suffice.
    """
    pool = enumerate_good(A, max_len)
    cands = pool
    report = Report("order-existential", f"{A.name} len<={max_len}", exhaustive=True)
    for x in pool:
        sums = {good_sum(x, c) for c in cands}
        for y in pool:
            report.checked += 1
            if good_leq(x, y) != (y in sums):
                return report.fail("order", _ws("xy", (x, y)))
    return report

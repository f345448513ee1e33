"""Computable evidence that MV-algebras and unital l-groups are not bi-interpretable.

Every l-group is torsion-free, so no nontrivial l-group is finite, while
there are finite MV-algebras that are not isomorphic (L_2 and L_3).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .lgroup import LGroupU, check_torsion_free
from .mv import Chain, is_isomorphic_finite
from .report import DEFAULT_SEED, Report


@dataclass(frozen=True)
class CyclicMock(LGroupU):
    """Z/k with the order of representatives 0 < 1 < ... < k-1.

    Not an l-group (the order is not translation invariant); it exists so the
    torsion check has something to catch.
    """

    k: int

    @property
    def name(self):
        return f"Z/{self.k}"

    @property
    def zero(self):
        return 0

    @property
    def unit(self):
        return 1 % self.k

    def add(self, x, y):
        return (x + y) % self.k

    def neg(self, x):
        return -x % self.k

    def leq(self, x, y):
        return x <= y

    def inf(self, x, y):
        return min(x, y)

    def sup(self, x, y):
        return max(x, y)

    def contains(self, x):
        return isinstance(x, int) and 0 <= x < self.k

    def unit_bound(self, x):
        return x

    def sample(self, rng):
        return rng.randrange(self.k)

    def probes(self):
        return list(range(self.k))

    def bounded_elements(self, radius):
        return list(range(self.k))

    def to_spec(self):
        return {"kind": "cyclic", "k": self.k}


def small_abelian_groups(max_size: int = 6):
    """(name, elements, add) for every abelian group of order <= max_size, up to isomorphism."""
    out = []
    for n in range(1, max_size + 1):
        out.append((f"Z/{n}", list(range(n)), lambda x, y, n=n: (x + y) % n))
        # non-cyclic: products Z/a x Z/b with a | b, a > 1
        for a in range(2, n + 1):
            if n % (a * a) == 0:
                b = n // a
                if b % a == 0:
                    els = [(i, j) for i in range(a) for j in range(b)]
                    out.append((f"Z/{a}xZ/{b}", els, lambda x, y, a=a, b=b: ((x[0] + y[0]) % a, (x[1] + y[1]) % b)))
    return out


def lattice_ordered_finite_groups(max_size: int = 6) -> list[tuple[str, tuple]]:
    """All (group, positive cone) pairs of order <= max_size that make an l-group.

    A positive cone P contains 0, is closed under addition and meets -P only
    in 0; the order x <= y iff y - x in P must then be a lattice.
    """
    found = []
    for name, els, add in small_abelian_groups(max_size):
        zero = els[0]
        neg = {x: next(y for y in els if add(x, y) == zero) for x in els}
        rest = els[1:]
        for r in range(len(rest) + 1):
            for extra in itertools.combinations(rest, r):
                P = {zero, *extra}
                if any(add(x, y) not in P for x in P for y in P):
                    continue
                if any(neg[x] in P for x in extra):
                    continue

                def le(x, y, P=P):
                    return add(y, neg[x]) in P

                if all(_has_join(els, le, x, y) for x in els for y in els):
                    found.append((name, tuple(sorted(P, key=str))))
    return found


def _has_join(els, le, x, y) -> bool:
    ub = [z for z in els if le(x, z) and le(y, z)]
    return any(all(le(z, w) for w in ub) for z in ub)


def check_non_bi_interpretability(groups: dict, budget: int = 50, seed: int = DEFAULT_SEED) -> Report:
    """Torsion-freeness of the given groups, plus the finite MV side of the argument."""
    report = Report("non-bi-interpretability", "MV vs l-groups", seed=seed)
    for G in groups.values():
        report.absorb(check_torsion_free(G, budget, seed))
    L2, L3 = Chain(2), Chain(3)
    report.checked += 1
    if not (L2.is_finite and L3.is_finite) or is_isomorphic_finite(L2, L3):
        return report.fail("finite-mv", {"A": L2.name, "B": L3.name}, "expected two finite non-isomorphic algebras")
    found = lattice_ordered_finite_groups(6)
    report.checked += 1
    if [g for g, _ in found] != ["Z/1"]:
        return report.fail("finite-l-group", {"found": [g for g, _ in found]}, "a nontrivial finite l-group")
    return report

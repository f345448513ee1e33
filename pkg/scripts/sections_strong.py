"""Search for a finite-space sheaf of unital l-groups whose sections lack a strong unit.

Sections over an open U are tuples indexed by the finitely many points of U,
and each coordinate is bounded by a multiple of that stalk's unit, so the
maximum of those multiples bounds the tuple.  This script checks that
bound on random sheaves over every poset with at most four points.
"""
import argparse
import itertools
import math
import random

from mundici.lgroup import LHom, ScaledInt
from mundici.sheaf import FiniteSpace, StructSheaf, check_sections_strong


def posets(n):
    pts = tuple(range(n))
    pairs = [(i, j) for i in pts for j in pts if i < j]
    seen = set()
    for r in range(len(pairs) + 1):
        for rel in itertools.combinations(pairs, r):
            X = FiniteSpace.from_relation(pts, rel, f"P{n}{rel}")
            if X.leq not in seen:
                seen.add(X.leq)
                yield X


def random_sheaf(X, rng):
    # stalk (Z, n_x); restriction x <= y multiplies by n_y / n_x, so n_x | n_y
    order = sorted(X.points, key=lambda p: len(X.up(p)), reverse=True)
    units = {}
    for p in order:
        below = [units[q] for q in units if X.le(q, p)]
        units[p] = math.lcm(1, *below) * rng.randint(1, 3)
    stalks = {p: ScaledInt(units[p]) for p in X.points}
    restr = {}
    for x, y in X.pairs():
        k = units[y] // units[x]
        restr[(x, y)] = LHom(stalks[x], stalks[y], lambda v, k=k: k * v, f"x{k}")
    return StructSheaf(X, stalks, restr)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-points", type=int, default=4)
    ap.add_argument("--per-space", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    spaces = sheaves = failures = 0
    for n in range(1, args.max_points + 1):
        for X in posets(n):
            spaces += 1
            for _ in range(args.per_space):
                sheaves += 1
                r = check_sections_strong(random_sheaf(X, rng), budget=40, seed=args.seed)
                if not r.ok:
                    failures += 1
                    print(r.line())
    print(f"{spaces} spaces, {sheaves} sheaves, {failures} without a strong unit on some open")


if __name__ == "__main__":
    main()

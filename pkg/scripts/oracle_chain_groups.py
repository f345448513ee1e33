"""Tabulate l_group(L_n) against the integer oracle [p, q] -> n (sum p - sum q).

For each n, prints how many formal differences of good sequences (length
<= max_len) land on each integer, and checks the group operations against
integer arithmetic.
"""
import argparse
import collections
from fractions import Fraction

from mundici.functors import GroupElement, l_group
from mundici.goodseq import enumerate_good
from mundici.mv import Chain


def oracle(n, x):
    v = n * (sum(x.p.components, Fraction(0)) - sum(x.q.components, Fraction(0)))
    assert v.denominator == 1
    return int(v)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--max-len", type=int, default=3)
    args = ap.parse_args()
    for n in range(1, args.max_n + 1):
        A = Chain(n)
        L = l_group(A, args.max_len)
        seqs = enumerate_good(A, args.max_len)
        els = [GroupElement(p, q) for p in seqs for q in seqs]
        vals = [oracle(n, x) for x in els]
        fibres = collections.Counter(vals)
        bad = sum(
            oracle(n, L.add(x, y)) != vx + vy or L.leq(x, y) != (vx <= vy)
            for x, vx in zip(els, vals)
            for y, vy in zip(els, vals)
        )
        print(f"L{n}: {len(seqs)} good sequences, {len(els)} pairs, image {min(vals)}..{max(vals)}, "
              f"unit -> {oracle(n, L.unit)}, mismatches {bad}")
        print("   fibre sizes: " + " ".join(f"{k}:{fibres[k]}" for k in sorted(fibres)))


if __name__ == "__main__":
    main()

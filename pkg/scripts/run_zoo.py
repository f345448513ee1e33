"""Run every check on the built-in zoo and print a per-check-type summary."""
import argparse
import collections
import time

from mundici import cli


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--budget", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-len", type=int, default=3)
    args = ap.parse_args()
    t = time.perf_counter()
    ns = cli.build_parser().parse_args(
        ["zoo", "--budget", str(args.budget), "--seed", str(args.seed), "--max-len", str(args.max_len)]
    )
    reports, _ = cli.cmd_zoo(ns)
    by_check = collections.defaultdict(collections.Counter)
    for r in reports:
        by_check[r.check][r.status] += 1
    for check, counts in sorted(by_check.items()):
        print(f"{check:28s} " + "  ".join(f"{k}={v}" for k, v in sorted(counts.items())))
    for r in reports:
        if not r.ok:
            print(r.line())
    print(f"{len(reports)} reports, overall {cli.overall(reports)}, {time.perf_counter() - t:.1f}s")


if __name__ == "__main__":
    main()

"""Wall-clock time of each acceptance criterion."""
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "tests"))

from test_acceptance import CRITERIA, evaluate  # noqa: E402


def main():
    total = 0.0
    for num, title, fn in CRITERIA:
        ok, _, secs = evaluate(fn)
        total += secs
        print(f"{num:2d} {title:40s} {secs:6.2f}s {'ok' if ok else 'FAIL'}")
    print(f"   {'total':40s} {total:6.2f}s")


if __name__ == "__main__":
    main()

"""Covering counts and covering-group homology for periodic Takahashi manifolds.

    python scripts/takahashi_table.py --max-p 5 --max-r 5 --degrees 2 3 4 5
"""

import argparse

from strongcyclic import (
    Monodromy,
    abelianize,
    covering_count,
    covering_homology,
    lift_words,
    takahashi_knot,
)
from strongcyclic.words import format_word


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--max-p", type=int, default=4)
    ap.add_argument("--max-r", type=int, default=4)
    ap.add_argument("--degrees", type=int, nargs="+", default=[2, 3, 4, 5])
    ap.add_argument("--words", action="store_true", help="print the two cyclic words too")
    args = ap.parse_args()

    print(f"{'p':>3} {'r':>3} {'n':>3} {'count':>6}  H_1(T_n(p/1, r/1))")
    for p in range(1, args.max_p + 1):
        for r in range(1, args.max_r + 1):
            knot = takahashi_knot(p, r)
            h = abelianize(knot)
            for n in args.degrees:
                cp = lift_words(knot, Monodromy(n, (0, 0)))
                print(f"{p:>3} {r:>3} {n:>3} {covering_count(h, n):>6}  {covering_homology(cp)}")
                if args.words:
                    for w in cp.words:
                        print(f"{'':>19}{format_word(w)}")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""
Sweep small Seifert invariants {0, n; r_1, ..., r_k} and tabulate what the
constructed open book on the star-shaped plumbing looks like.

    python scripts/seifert_sweep.py --max-denominator 4 --max-arms 3
"""
import argparse
import itertools
from fractions import Fraction

from plumbook.errors import EmptyBindingError
from plumbook.milnor import milnor_report
from plumbook.openbook import synthesize
from plumbook.seifert import SeifertInvariants, horizontal_criterion, star_graph


def ratios(max_denominator):
    return sorted({Fraction(p, q) for q in range(2, max_denominator + 1) for p in range(1, q)})


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[1])
    ap.add_argument("--max-denominator", type=int, default=3)
    ap.add_argument("--max-arms", type=int, default=3)
    ap.add_argument("--euler", type=int, nargs=2, default=(-6, -1), metavar=("LO", "HI"))
    args = ap.parse_args()

    header = f"{'invariants':<34} {'horiz':>5} {'page':>9} {'left':>4} {'milnor verdict'}"
    print(header)
    print("-" * len(header))
    for k in range(1, args.max_arms + 1):
        for rs in itertools.combinations_with_replacement(ratios(args.max_denominator), k):
            for n in range(args.euler[0], args.euler[1] + 1):
                s = SeifertInvariants(0, n, rs)
                g = star_graph(s)
                label = "{0, %d; %s}" % (n, ", ".join(str(r) for r in rs))
                try:
                    ob = synthesize(g)
                    verdict = milnor_report(g).verdict
                except EmptyBindingError:
                    print(f"{label:<34} {'-':>5} {'empty':>9}")
                    continue
                assert horizontal_criterion(s)[0] == ob.verdicts.horizontal
                page = f"({ob.page.genus},{ob.page.boundary_components})"
                print(f"{label:<34} {str(ob.verdicts.horizontal):>5} {page:>9} {ob.count(-1):>4} {verdict}")


if __name__ == "__main__":
    main()

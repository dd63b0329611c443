"""Iterate Fermat's method on phi to get further two-equal-sides pairs.

Prints each seed's pair scaled to coprime integers and whether it is
constructible (new seeds frequently are not).

    python scripts/more_isosceles_pairs.py --r1 2 --r2 1 --count 3
"""
import argparse

from bq_lab import isosceles as iso
from bq_lab.numerics import primitive_integers
from bq_lab.quad import PairRecord, constructible
from bq_lab.search import cross_check_family


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--r1", type=int, default=2)
    ap.add_argument("--r2", type=int, default=1)
    ap.add_argument("--count", type=int, default=3)
    args = ap.parse_args()
    p = iso.IsoParams(args.r1, args.r2)
    for seed in iso.extended_seeds(p, args.count):
        a, b = seed.sides()
        ints, _ = primitive_integers(list(a) + list(b))
        a, b = ints[:4], ints[4:]
        ok = constructible(a) and constructible(b)
        print(f"q1/q2 = {seed.q1}/{seed.q2}")
        print(f"  a = {a}\n  b = {b}\n  constructible: {ok}")
        if ok:
            rep = cross_check_family(PairRecord("isosceles-extended", {}, a, b))
            print(f"  cross-check: {'ok' if rep.ok else rep.failures}")


if __name__ == "__main__":
    main()

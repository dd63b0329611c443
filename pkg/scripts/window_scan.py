"""Locate where each family's pairs stop being constructible.

    python scripts/window_scan.py --step 1/1000
"""
import argparse
from fractions import Fraction

from bq_lab import isosceles as iso
from bq_lab import scalene as sca
from bq_lab.quad import constructible


def iso_ok(r):
    a, b = iso.closed_sides(r, Fraction(1))
    return constructible(a) and constructible(b)


def sca_ok(t):
    a, b = sca.closed_sides(t)
    return constructible(a) and constructible(b) and len(set(a)) == 4 and len(set(b)) == 4


def transitions(fn, lo, hi, step):
    out, prev, x = [], None, lo
    while x <= hi:
        cur = fn(x)
        if prev is not None and cur != prev:
            out.append((x - step, x, cur))
        prev, x = cur, x + step
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--step", default="1/1000")
    args = ap.parse_args()
    step = Fraction(args.step)
    for name, fn, lo, hi in (("r1/r2", iso_ok, Fraction(1), Fraction(3)),
                             ("t", sca_ok, Fraction(4), Fraction(7))):
        for a, b, now in transitions(fn, lo, hi, step):
            state = "enters" if now else "leaves"
            print(f"{name}: {state} constructible region between {float(a):.4f} and {float(b):.4f}")


if __name__ == "__main__":
    main()

"""Pairs with two equal sides each, parameterized by coprime (r1, r2).

Closed forms are written ring-generically: pass ints/Fractions to evaluate,
or ``BiPoly.x(), BiPoly.y()`` to expand symbolically.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .fermat import Quartic, fermat_iterate, fermat_root_const
from .numerics import rat_str, rational_square_root
from .quad import PairRecord, metrics, sixteen_area_sq, triple_product

HALF = Fraction(1, 2)
WINDOW = (Fraction(163, 100), Fraction(211, 100))  # documentation only


@dataclass(frozen=True)
class IsoParams:
    r1: int
    r2: int

    def __post_init__(self):
        if self.r1 <= 0 or self.r2 <= 0:
            raise ValueError("r1, r2 must be positive")
        if self.r1 == self.r2:
            raise ValueError("r1 == r2 makes the construction degenerate")
        if math.gcd(self.r1, self.r2) != 1:
            raise ValueError("r1, r2 must be coprime")

    @classmethod
    def from_ratio(cls, ratio) -> "IsoParams":
        ratio = Fraction(ratio)
        return cls(ratio.numerator, ratio.denominator)


# --- quantities shared by several closed forms --------------------------

def quartic_f4(r1, r2):
    return r1**4 - 4*r1**3*r2 + 10*r1**2*r2**2 - 4*r1*r2**3 + r2**4


def octic_d8(r1, r2):
    return (r1**8 - 8*r1**7*r2 + 36*r1**6*r2**2 - 88*r1**5*r2**3 + 198*r1**4*r2**4
            - 88*r1**3*r2**5 + 36*r1**2*r2**6 - 8*r1*r2**7 + r2**8)


def octic_q8(r1, r2):
    return (r1**8 - 8*r1**7*r2 + 52*r1**6*r2**2 - 152*r1**5*r2**3 + 230*r1**4*r2**4
            - 152*r1**3*r2**5 + 52*r1**2*r2**6 - 8*r1*r2**7 + r2**8)


def phi(q1, q2, r1, r2):
    """The quartic in (q1, q2) that must be a square for rational diagonals."""
    rr = r1**2 * r2**2
    mid = r1**4 - 4*r1**3*r2 + 12*r1**2*r2**2 - 4*r1*r2**3 + r2**4
    return rr*q1**4 - 4*rr*q1**3*q2 + mid*q1**2*q2**2 - 4*rr*q1*q2**3 + rr*q2**4


def phi_quartic(r1, r2) -> Quartic:
    """phi with q2 = 1, as a quartic in z = q1/q2."""
    rr = Fraction(r1)**2 * Fraction(r2)**2
    mid = r1**4 - 4*r1**3*r2 + 12*r1**2*r2**2 - 4*r1*r2**3 + r2**4
    return Quartic(rr, -4*rr, mid, -4*rr, rr)


# --- printed closed forms -------------------------------------------------

def closed_sides(r1, r2):
    """((a1, a2, a3, a4), (b1, b2, b3, b4)) exactly as printed, signs included."""
    s2 = r1**2 + r2**2
    k2 = r1**2 - 4*r1*r2 + r2**2
    a1 = s2 * k2 * (r1**6 - 4*r1**5*r2 + 19*r1**4*r2**2 - 40*r1**3*r2**3
                    + 19*r1**2*r2**4 - 4*r1*r2**5 + r2**6)
    a2 = -s2 * k2 * (r1**6 - 8*r1**5*r2 + 35*r1**4*r2**2 - 48*r1**3*r2**3
                     + 35*r1**2*r2**4 - 8*r1*r2**5 + r2**6)
    a3 = (r1 - r2)**2 * octic_d8(r1, r2)
    b1 = -(r1 - r2) * (r1**4 - 8*r1**3*r2 + 10*r1**2*r2**2 + r2**4) \
        * (r1**5 + r1**4*r2 - 6*r1**3*r2**2 + 18*r1**2*r2**3 - 7*r1*r2**4 + r2**5)
    b2 = (r1 - r2) * (r1**4 + 10*r1**2*r2**2 - 8*r1*r2**3 + r2**4) \
        * (r1**5 - 7*r1**4*r2 + 18*r1**3*r2**2 - 6*r1**2*r2**3 + r1*r2**4 + r2**5)
    b3 = k2**2 * s2**3
    return (a1, a2, a3, a3), (b1, b2, b3, b3)


def closed_perimeter(r1, r2):
    return (2*r1**10 - 16*r1**9*r2 + 74*r1**8*r2**2 - 256*r1**7*r2**3 + 724*r1**6*r2**4
            - 992*r1**5*r2**5 + 724*r1**4*r2**6 - 256*r1**3*r2**7 + 74*r1**2*r2**8
            - 16*r1*r2**9 + 2*r2**10)


def closed_area(r1, r2):
    return (32 * r1**3 * r2**3 * (r1 - r2)**2 * (r1**2 + r2**2)**2
            * (r1**2 - 4*r1*r2 + r2**2)**2 * quartic_f4(r1, r2))


def closed_shared_diagonal(r1, r2):
    """The diagonal common to both quadrilaterals (and all trapezium diagonals)."""
    return 2 * r1 * r2 * octic_q8(r1, r2)


def closed_other_diagonals(r1, r2):
    """(numerator_a, numerator_b, denominator) of the remaining two diagonals."""
    k2 = r1**2 - 4*r1*r2 + r2**2
    s2 = r1**2 + r2**2
    num_a = 2 * octic_d8(r1, r2) * (r1 - r2)**2 * s2**2 * k2**2
    num_b = 16 * r1 * r2 * quartic_f4(r1, r2) * (r1 - r2)**2 * k2**2 * s2**3
    return num_a, num_b, octic_q8(r1, r2)


def closed_circumradii(r1, r2):
    """((num_a, den_a), (num_b, den_b))."""
    q8 = octic_q8(r1, r2)
    return ((octic_d8(r1, r2) * q8, 16 * r1 * r2 * quartic_f4(r1, r2)),
            ((r1**2 + r2**2) * q8, 2))


# --- derivation pipeline --------------------------------------------------

def sides_from_x(x):
    """Inverse of the side transform: a_i = (sum x - 2 x_i) / 2."""
    x1, x2, x3, x4 = x
    return ((-x1 + x2 + x3 + x4) * HALF, (x1 - x2 + x3 + x4) * HALF,
            (x1 + x2 - x3 + x4) * HALF, (x1 + x2 + x3 - x4) * HALF)


def x_from_sides(a):
    """Forward transform: x_i = s - a_i with s the semiperimeter."""
    s = (a[0] + a[1] + a[2] + a[3]) * HALF
    return tuple(s - ai for ai in a)


@dataclass(frozen=True)
class IsoSeed:
    q1: Fraction
    q2: Fraction
    p1: Fraction
    p2: Fraction
    x: Tuple[Fraction, ...]
    y: Tuple[Fraction, ...]

    def sides(self):
        return sides_from_x(self.x), sides_from_x(self.y)


def seed_values(q1, q2, r1, r2):
    """(p1, p2, x, y) from (q1, q2); ring-generic."""
    p1 = (r1 - r2)**2
    p2 = (q1 - q2)**2
    x = (p1 * q1**2, p1 * q2**2, p2 * r1 * r2, p2 * r1 * r2)
    y = (p2 * r1**2, p2 * r2**2, p1 * q1 * q2, p1 * q1 * q2)
    return p1, p2, x, y


def make_seed(q1, q2, r1, r2) -> IsoSeed:
    q1, q2 = Fraction(q1), Fraction(q2)
    p1, p2, x, y = seed_values(q1, q2, Fraction(r1), Fraction(r2))
    seed = IsoSeed(q1, q2, p1, p2, tuple(x), tuple(y))
    _verify_seed(seed)
    return seed


def _prod(v):
    out = 1
    for t in v:
        out = out * t
    return out


def _verify_seed(s: IsoSeed) -> None:
    x, y = s.x, s.y
    problems = []
    if x[2] != x[3] or y[2] != y[3]:
        problems.append("equal-side condition")
    if rational_square_root(x[0] * x[1]) is None or rational_square_root(y[0] * y[1]) is None:
        problems.append("x1*x2 / y1*y2 not squares")
    if sum(x) != sum(y):
        problems.append("sum x != sum y")
    if _prod(x) != _prod(y) or rational_square_root(_prod(x)) is None:
        problems.append("product condition")
    if problems:
        raise AssertionError(f"inconsistent seed {s}: {', '.join(problems)}")


def default_q(r1, r2):
    return 8 * r1**2 * r2**2, quartic_f4(r1, r2)


def default_seed(p: IsoParams) -> IsoSeed:
    q1, q2 = default_q(p.r1, p.r2)
    return make_seed(q1, q2, p.r1, p.r2)


def fermat_q_ratio(p: IsoParams) -> Fraction:
    """q1/q2 recovered by the constant-anchored Fermat step on phi."""
    return fermat_root_const(phi_quartic(p.r1, p.r2))


def extended_seeds(p: IsoParams, k: int) -> List[IsoSeed]:
    """Further seeds from iterating Fermat's method on phi(z, 1, r1, r2).

    phi is symmetric under q1 <-> q2, which only swaps two sides, so a
    ratio is skipped when it or its reciprocal was already used (the
    default seed included). Stalls simply return fewer seeds.
    """
    if k <= 0:
        return []
    q1, q2 = default_q(p.r1, p.r2)
    used = {Fraction(q1, q2), Fraction(q2, q1), Fraction(1)}  # z == 1 collapses p2
    seeds: List[IsoSeed] = []
    budget = 2 * k + 2
    while len(seeds) < k:
        run = fermat_iterate(phi_quartic(p.r1, p.r2), budget)
        for z in run.solutions:
            if z in used:
                continue
            used.update((z, 1 / z))
            seeds.append(make_seed(z.numerator, z.denominator, p.r1, p.r2))
            if len(seeds) == k:
                break
        if run.stalled or len(seeds) == k:
            break
        budget *= 2
    return seeds


def _uniform_factor(closed, derived):
    ratios = {Fraction(c) / Fraction(d) for c, d in zip(closed, derived) if d != 0}
    zeros_ok = all((c == 0) == (d == 0) for c, d in zip(closed, derived))
    if len(ratios) != 1 or not zeros_ok:
        raise AssertionError(f"closed form {closed} disagrees with pipeline {derived}")
    return ratios.pop()


def build_pair(p: IsoParams) -> PairRecord:
    """Closed-form sides, cross-checked against the derivation pipeline."""
    a, b = closed_sides(p.r1, p.r2)
    seed = default_seed(p)
    da, db = seed.sides()
    fa, fb = _uniform_factor(a, da), _uniform_factor(b, db)
    rec = PairRecord(
        family="isosceles",
        params={"r1": str(p.r1), "r2": str(p.r2)},
        sides_a=tuple(Fraction(v) for v in a),
        sides_b=tuple(Fraction(v) for v in b),
        extra={"pipeline_factor": {"a": rat_str(fa), "b": rat_str(fb)}},
    )
    if sum(a) != sum(b) or sum(a) != closed_perimeter(p.r1, p.r2):
        raise AssertionError("perimeter identity failed")
    if sixteen_area_sq(*a) != sixteen_area_sq(*b) or \
            sixteen_area_sq(*a) != 16 * closed_area(p.r1, p.r2) ** 2:
        raise AssertionError("area identity failed")
    if rec.constructible:
        _verify_metrics(p, rec)
    return rec


def _verify_metrics(p: IsoParams, rec: PairRecord) -> None:
    ma, mb = rec.metrics()
    chk = rec.check()
    if not (chk.equal_perimeter and chk.equal_area and chk.square_triple_a and chk.square_triple_b):
        raise AssertionError(f"pair check failed: {chk.failures()}")
    r1, r2 = Fraction(p.r1), Fraction(p.r2)
    shared = closed_shared_diagonal(r1, r2)
    na, nb, den = closed_other_diagonals(r1, r2)
    (ra, rda), (rb, rdb) = closed_circumradii(r1, r2)
    expected = [
        (ma.area, closed_area(r1, r2)), (mb.area, closed_area(r1, r2)),
        (ma.d1, shared), (mb.d1, shared), (ma.d2, na / den), (mb.d2, nb / den),
        (ma.circumradius, ra / rda), (mb.circumradius, rb / rdb),
    ]
    for got, want in expected:
        if got != want:
            raise AssertionError(f"metric mismatch: {got} != {want}")


def trapezium_variant(p: IsoParams) -> PairRecord:
    """Reorder both quadruples as (s1, s3, s2, s4): isosceles trapezia."""
    base = build_pair(p)
    a, b = base.sides_a, base.sides_b
    rec = PairRecord(
        family="isosceles-trapezium",
        params=dict(base.params),
        sides_a=(a[0], a[2], a[1], a[3]),
        sides_b=(b[0], b[2], b[1], b[3]),
    )
    if rec.constructible:
        want = closed_shared_diagonal(Fraction(p.r1), Fraction(p.r2))
        ma, mb = rec.metrics()
        if {ma.d1, ma.d2, mb.d1, mb.d2} != {want}:
            raise AssertionError("trapezium diagonals are not all equal")
    return rec


def triple_products(r1, r2):
    a, b = closed_sides(r1, r2)
    return triple_product(*a), triple_product(*b)

"""Pairs with all sides unequal, parameterized by a rational t.

Route: two quadruples with equal sums and products, then two square
conditions that combine into a quartic elliptic curve; a known point on
it fixes (g, h, m, n) and Fermat's method on the remaining quartic fixes
(r1, r2). Every formula is ring-generic in t (Fraction or UniPoly).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .fermat import Quartic, fermat_root_const, fermat_root_leading, FermatError
from .isosceles import sides_from_x
from .numerics import primitive_integers, rat_str, rational_square_root
from .poly import UniPoly, poly_square_root
from .quad import PairRecord, sixteen_area_sq, triple_product

WINDOW = (Fraction(4991, 1000), Fraction(5565, 1000))  # documentation only


def horner(desc, t):
    """Evaluate integer coefficients given highest degree first."""
    acc = 0
    for c in desc:
        acc = acc * t + c
    return acc


# printed side factors, highest degree first
_A16 = [1, 0, -24, 48, -100, -672, -1128, 2960, -3002, -4032, 1240, 592, -868, 96, 40, -16, 1]
_A17 = [3, -15, 8, 136, -140, -276, 2488, -2792, 1170, -42, 2488, -1800, -140, -52, 8, -24, 3, 1]
_P17 = [1, 1, -72, -264, -580, -964, -2680, -2232, -250, 1542, -2680, -952, -580, 60, -72, -8, 1, 1]
_P16 = [1, 0, -8, 0, 60, -768, -1720, 0, 1542, 2560, 328, 2048, 1084, 256, -8, 0, 1]
_B16 = [1, 0, -24, -48, -100, 672, -1128, -2960, -3002, 4032, 1240, -592, -868, -96, 40, 16, 1]
_B17 = [3, 15, 8, -136, -140, 276, 2488, 2792, 1170, 42, 2488, 1800, -140, 52, 8, 24, 3, -1]
_C16 = [1, 0, -8, 0, 60, 768, -1720, 0, 1542, -2560, 328, -2048, 1084, -256, -8, 0, 1]
_C17 = [1, -1, -72, 264, -580, 964, -2680, 2232, -250, -1542, -2680, 952, -580, -60, -72, 8, 1, -1]
_D16 = [1, -16, 40, 96, -868, 592, 1240, -4032, -3002, 2960, -1128, -672, -100, 48, -24, 0, 1]
_D17 = [1, 3, -24, 8, -52, -140, -1800, 2488, -42, 1170, -2792, 2488, -276, -140, 136, 8, -15, 3]
_E17 = [1, 1, -8, -72, 60, -580, -952, -2680, 1542, -250, -2232, -2680, -964, -580, -264, -72, 1, 1]
_E16 = [1, 0, -8, 256, 1084, 2048, 328, 2560, 1542, 0, -1720, -768, 60, 0, -8, 0, 1]
_F16 = [1, 0, -8, -256, 1084, -2048, 328, -2560, 1542, 0, -1720, 768, 60, 0, -8, 0, 1]
_F17 = [1, -1, -8, 72, 60, 580, -952, 2680, 1542, 250, -2232, 2680, -964, 580, -264, 72, 1, -1]
_G16 = [1, 16, 40, -96, -868, -592, 1240, 4032, -3002, -2960, -1128, 672, -100, -48, -24, 0, 1]
_G17 = [1, -3, -24, -8, -52, 140, -1800, -2488, -42, -1170, -2792, -2488, -276, 140, 136, -8, -15, -3]


def quartic_plus(t):
    return t**4 + 4*t**3 + 10*t**2 + 4*t + 1


def quartic_minus(t):
    return t**4 - 4*t**3 + 10*t**2 - 4*t + 1


def closed_sides(t):
    """((a1..a4), (b1..b4)) exactly as printed, before removing common factors."""
    qp, qm = quartic_plus(t), quartic_minus(t)
    H = lambda c: horner(c, t)  # noqa: E731
    a = (qp * H(_A16) * H(_A17),
         -qm * H(_P17) * H(_P16),
         -qm * H(_B16) * H(_B17),
         -qp * H(_C16) * H(_C17))
    b = (-qp * H(_D16) * H(_D17),
         qm * H(_E17) * H(_E16),
         -qp * H(_F16) * H(_F17),
         -qm * H(_G16) * H(_G17))
    return a, b


# --- elliptic quartic ------------------------------------------------------

def uv_of_t(t):
    return t * (t**4 - 2*t**2 + 5), 5*t**4 - 2*t**2 + 1


def curve_rhs(X, Y_unused, u, v):
    return (X*u - v) * (X*u + v) * (X*v - u) * (X*v + u)


def point_parts(t):
    """(X_num, X_den, Y_num, Y_den) of the printed point."""
    x_num = 3*t**4 - 6*t**2 - 1
    c = t**4 + 6*t**2 - 3
    y_num = (4 * (t - 1) * (t + 1) * (t**2 + 1)**2 * (t**2 + 2*t - 1) * (t**2 - 2*t - 1)
             * (t**8 + 20*t**6 - 26*t**4 + 20*t**2 + 1))
    return x_num, t * c, y_num, t * c**2


@dataclass(frozen=True)
class EllipticQuarticPoint:
    u: Fraction
    v: Fraction
    X: Fraction
    Y: Fraction

    def __post_init__(self):
        if self.Y**2 != curve_rhs(self.X, self.Y, self.u, self.v):
            raise ValueError("point is not on Y^2 = (Xu-v)(Xu+v)(Xv-u)(Xv+u)")


def _param(t) -> Fraction:
    t = Fraction(t)
    if t in (0, 1, -1):
        raise ValueError(f"t = {t} is degenerate")
    if t * (t**4 + 6*t**2 - 3) == 0:  # pragma: no cover - irrational roots
        raise ValueError(f"t = {t} makes the point undefined")
    return t


def point_of_t(t) -> EllipticQuarticPoint:
    t = Fraction(t)
    xn, xd, yn, yd = point_parts(t)
    if xd == 0:
        raise ValueError(f"t = {t} makes the point undefined")
    u, v = uv_of_t(t)
    return EllipticQuarticPoint(u, v, xn / xd, yn / yd)


# --- parameters and seed ---------------------------------------------------

def ghmn(t):
    g = (t**2 + 2*t - 1) * (t**2 - 2*t - 1)
    h = -4 * t * (t**2 + 1)
    m = t**5 - 3*t**4 + 6*t**3 + 6*t**2 - 3*t + 1
    n = (t**4 + 6*t**2 - 3) * t
    return g, h, m, n


def r_of_t(t):
    r1 = 32 * t**2 * quartic_minus(t) * quartic_plus(t) * (t**2 + 1)**2
    r2 = ((t**8 + 4*t**7 + 4*t**6 - 20*t**5 + 70*t**4 - 20*t**3 + 4*t**2 + 4*t + 1)
          * (t**8 - 4*t**7 + 4*t**6 + 20*t**5 + 70*t**4 + 20*t**3 + 4*t**2 - 4*t + 1))
    return r1, r2


def cond1_residual(g, h, m, n, u, v):
    return ((m*u - n*u - n*v) * (m*u - n*u + n*v) * g**2
            - (m*v + n*u - n*v) * (m*v - n*u - n*v) * h**2)


def xy_values(g, h, m, n, r1, r2):
    """Two quadruples with equal sums and equal (square) products."""
    k = g**2 * r1 - h**2 * r2
    x = (g**2 * r1 * n * (r1 - r2), -h**2 * r2 * (r1 - r2) * (m - n),
         r2 * n * k, -r1 * k * (m - n))
    y = (-g**2 * r1 * (r1 - r2) * (m - n), h**2 * r2 * n * (r1 - r2),
         r1 * n * k, -r2 * k * (m - n))
    return x, y


def phi1(r1, r2, t):
    return (r1 * r2 * (r1 - r2) * t * (3*t**4 - 6*t**2 - 1) * (t**4 + 6*t**2 - 3)
            * (r1 * (t**2 + 2*t - 1)**2 * (t**2 - 2*t - 1)**2 - 16 * r2 * t**2 * (t**2 + 1)**2))


def phi2_coeffs(t):
    """Coefficients (c0..c4) of phi2 as a quartic in r1 with r2 = 1."""
    qp, qm = quartic_plus(t), quartic_minus(t)
    gp, gm, s = t**2 + 2*t - 1, t**2 - 2*t - 1, t**2 + 1
    c4 = qm**2 * qp**2 * gp**4 * gm**4
    c3 = -64 * t**2 * s**2 * gp**4 * qm * qp * gm**4
    c2 = 32 * t**2 * s**2 * gp**2 * qm**2 * qp**2 * gm**2
    c1 = -1024 * t**4 * gp**2 * gm**2 * qm * qp * s**4
    c0 = 256 * t**4 * qm**2 * qp**2 * s**4
    return c0, c1, c2, c3, c4


def phi2(r1, r2, t):
    c0, c1, c2, c3, c4 = phi2_coeffs(t)
    return c4*r1**4 + c3*r1**3*r2 + c2*r1**2*r2**2 + c1*r1*r2**3 + c0*r2**4


@dataclass(frozen=True)
class ScaleneSeed:
    t: Fraction
    g: Fraction
    h: Fraction
    m: Fraction
    n: Fraction
    w: Fraction
    r1: Fraction
    r2: Fraction
    x: Tuple[Fraction, ...]
    y: Tuple[Fraction, ...]

    def sides(self):
        return sides_from_x(self.x), sides_from_x(self.y)


def _prod(v):
    out = 1
    for a in v:
        out = out * a
    return out


def seed_of_t(t) -> ScaleneSeed:
    t = _param(t)
    g, h, m, n = ghmn(t)
    r1, r2 = r_of_t(t)
    x, y = xy_values(g, h, m, n, r1, r2)
    root2 = rational_square_root(phi2(r1, r2, t))
    if root2 is None:
        raise AssertionError(f"phi2 is not a square at t = {t}")
    w = phi1(r1, r2, t) * root2
    seed = ScaleneSeed(t, g, h, m, n, w, r1, r2, tuple(x), tuple(y))
    _verify_seed(seed)
    return seed


def _verify_seed(s: ScaleneSeed) -> None:
    u, v = uv_of_t(s.t)
    problems = []
    if sum(s.x) != sum(s.y):
        problems.append("sum x != sum y")
    if _prod(s.x) != _prod(s.y) or rational_square_root(_prod(s.x)) is None:
        problems.append("product condition")
    if triple_product(*s.x) != (u * s.w) ** 2:
        problems.append("first square condition")
    if triple_product(*s.y) != (v * s.w) ** 2:
        problems.append("second square condition")
    if cond1_residual(s.g, s.h, s.m, s.n, u, v) != 0:
        problems.append("curve condition")
    if problems:
        raise AssertionError(f"inconsistent seed at t = {s.t}: {', '.join(problems)}")


def rederive_r_by_fermat(t, anchor: str = "const") -> Fraction:
    """Recover r1/r2 by one Fermat step on phi2(z, 1, t).

    The constant-term anchor reproduces the closed-form (r1, r2); the
    leading anchor gives a different, equally valid ratio.
    """
    t = _param(t)
    f = Quartic(*phi2_coeffs(t))
    fn = fermat_root_leading if anchor == "leading" else fermat_root_const
    return fn(f)


def _normalize_pair(a, b):
    ints, factor = primitive_integers(list(a) + list(b))
    return ints[:4], ints[4:], factor


def build_pair(t) -> PairRecord:
    """Closed-form sides at t, scaled jointly to coprime integers."""
    t = _param(t)
    a, b = closed_sides(t)
    seed = seed_of_t(t)
    da, db = seed.sides()
    na, nb, factor = _normalize_pair(a, b)
    pa, pb, _ = _normalize_pair(da, db)
    if (na, nb) != (pa, pb):
        raise AssertionError(f"closed form and pipeline disagree at t = {t}")
    rec = PairRecord(
        family="scalene",
        params={"t": rat_str(t)},
        sides_a=tuple(Fraction(v) for v in na),
        sides_b=tuple(Fraction(v) for v in nb),
        extra={"pipeline_factor": rat_str(Fraction(a[0]) / Fraction(da[0]) if da[0] else 0),
               "removed_factor": rat_str(1 / factor)},
    )
    if sum(na) != sum(nb) or sixteen_area_sq(*na) != sixteen_area_sq(*nb):
        raise AssertionError("equal perimeter/area identity failed")
    if rec.constructible:
        chk = rec.check()
        if not (chk.square_triple_a and chk.square_triple_b):
            raise AssertionError(f"pair check failed: {chk.failures()}")
    return rec


def all_distinct(sides) -> bool:
    return len(set(sides)) == len(sides)


# --- symbolic forms --------------------------------------------------------

def symbolic_point_identity() -> Tuple[UniPoly, UniPoly]:
    """(lhs, rhs) of Y^2 = quartic after clearing X and Y denominators.

    With X = N/D, Y = P/Q and Q = t*c^2, D = t*c: Y^2 D^4 = (P t)^2.
    """
    t = UniPoly.z()
    xn, xd, yn, _ = point_parts(t)
    u, v = uv_of_t(t)
    rhs = (xn*u - v*xd) * (xn*u + v*xd) * (xn*v - u*xd) * (xn*v + u*xd)
    return (yn * t) ** 2, rhs


def symbolic_cond1() -> UniPoly:
    t = UniPoly.z()
    u, v = uv_of_t(t)
    return cond1_residual(*ghmn(t), u, v)


def symbolic_phi2_root() -> Tuple[UniPoly, UniPoly | None]:
    t = UniPoly.z()
    r1, r2 = r_of_t(t)
    p = phi2(r1, r2, t)
    return p, poly_square_root(p)


def symbolic_xy():
    t = UniPoly.z()
    g, h, m, n = ghmn(t)
    r1, r2 = r_of_t(t)
    return xy_values(g, h, m, n, r1, r2)

"""Symbolic identity suites for both families, as exact polynomial checks."""
from __future__ import annotations

from typing import Callable, List, Tuple

from . import isosceles as iso
from . import scalene as sca
from .poly import BiPoly, UniPoly, bipoly_square_root, poly_square_root
from .quad import pair_sums, sixteen_area_sq, triple_product

Check = Tuple[str, Callable[[], bool]]


def _sum(vals, zero):
    out = zero
    for v in vals:
        out = out + v
    return out


def _prod(vals, one):
    out = one
    for v in vals:
        out = out * v
    return out


def isosceles_checks() -> List[Check]:
    r1, r2 = BiPoly.x(), BiPoly.y()
    a, b = iso.closed_sides(r1, r2)
    perim = iso.closed_perimeter(r1, r2)
    area = iso.closed_area(r1, r2)
    diag = iso.closed_shared_diagonal(r1, r2)

    def diagonals_equal(q) -> bool:
        t1, t2, t3 = pair_sums(*q)
        return t1 * t2 == diag**2 * t3 and t2 * t3 == diag**2 * t1

    def pipeline_factor() -> bool:
        q1, q2 = iso.default_q(r1, r2)
        _, _, x, y = iso.seed_values(q1, q2, r1, r2)
        da, db = iso.sides_from_x(x), iso.sides_from_x(y)
        return all(c == 2 * d for c, d in zip(a + b, da + db))

    def phi_square() -> bool:
        q1, q2 = iso.default_q(r1, r2)
        return bipoly_square_root(iso.phi(q1, q2, r1, r2)) is not None

    zero = BiPoly()
    return [
        ("perimeter_a", lambda: _sum(a, zero) == perim),
        ("perimeter_b", lambda: _sum(b, zero) == perim),
        ("area_a", lambda: sixteen_area_sq(*a) == 16 * area**2),
        ("area_b", lambda: sixteen_area_sq(*b) == 16 * area**2),
        ("square_triple_a", lambda: bipoly_square_root(triple_product(*a)) is not None),
        ("square_triple_b", lambda: bipoly_square_root(triple_product(*b)) is not None),
        ("shared_diagonal_a", lambda: (lambda t: t[0] * t[1] == diag**2 * t[2])(pair_sums(*a))),
        ("shared_diagonal_b", lambda: (lambda t: t[0] * t[1] == diag**2 * t[2])(pair_sums(*b))),
        ("trapezium_a", lambda: diagonals_equal((a[0], a[2], a[1], a[3]))),
        ("trapezium_b", lambda: diagonals_equal((b[0], b[2], b[1], b[3]))),
        ("phi_square_at_default_q", phi_square),
        ("closed_is_twice_pipeline", pipeline_factor),
    ]


def scalene_checks() -> List[Check]:
    t = UniPoly.z()
    x, y = sca.symbolic_xy()
    one, zero = UniPoly([1]), UniPoly()

    def point() -> bool:
        lhs, rhs = sca.symbolic_point_identity()
        return lhs == rhs

    def proportional() -> bool:
        a, b = sca.closed_sides(t)
        da, db = sca.sides_from_x(x), sca.sides_from_x(y)
        c, d = a + b, da + db
        return all(c[i] * d[0] == d[i] * c[0] for i in range(8))

    def product_square() -> bool:
        return poly_square_root(_prod(x, one)) is not None

    return [
        ("point_on_curve", point),
        ("cond1_residual_zero", lambda: sca.symbolic_cond1().is_zero()),
        ("phi2_square", lambda: sca.symbolic_phi2_root()[1] is not None),
        ("sum_x_eq_sum_y", lambda: _sum(x, zero) == _sum(y, zero)),
        ("prod_x_eq_prod_y", lambda: _prod(x, one) == _prod(y, one)),
        ("prod_x_square", product_square),
        ("square_triple_x", lambda: poly_square_root(triple_product(*x)) is not None),
        ("square_triple_y", lambda: poly_square_root(triple_product(*y)) is not None),
        ("closed_proportional_to_pipeline", proportional),
    ]


SUITES = {"isosceles": isosceles_checks, "scalene": scalene_checks}
SECTION_ALIASES = {"2.1": "isosceles", "2.2": "scalene"}


def run_suite(name: str) -> List[Tuple[str, bool]]:
    name = SECTION_ALIASES.get(name, name)
    return [(label, bool(fn())) for label, fn in SUITES[name]()]

import math
from fractions import Fraction

import pytest

from bq_lab import isosceles as iso
from bq_lab.numerics import rational_square_root
from bq_lab.poly import BiPoly, bipoly_square_root
from bq_lab.quad import constructible, pair_sums, sixteen_area_sq, triple_product

X, Y = BiPoly.x(), BiPoly.y()


def test_phi_examples():
    assert iso.phi(1, 0, 5, 3) == 225
    assert iso.phi(1, 1, 1, 1) == 0
    val = iso.phi(Fraction(32), Fraction(17), 2, 1)
    # phi(z, 1, 2, 1) at z = 32/17 is (706/289)^2; homogeneity scales by 17^4
    assert val == 706**2
    assert rational_square_root(val) == 706


def test_default_seed_2_1():
    s = iso.default_seed(iso.IsoParams(2, 1))
    assert (s.q1, s.q2) == (32, 17)
    assert math.prod(s.x) == math.prod(s.y)
    assert s.x[2] == s.x[3] and s.y[2] == s.y[3]


@pytest.mark.parametrize("r1,r2", [(1, 1), (0, 1), (4, 2)])
def test_params_rejected(r1, r2):
    with pytest.raises(ValueError):
        iso.IsoParams(r1, r2)


def test_params_from_ratio():
    assert iso.IsoParams.from_ratio(Fraction(10, 5)) == iso.IsoParams(2, 1)


def test_build_pair_published():
    rec = iso.build_pair(iso.IsoParams(2, 1))
    assert rec.sides_a == (165, 1635, 1313, 1313)
    assert rec.sides_b == (413, 1763, 1125, 1125)
    ma, mb = rec.metrics()
    assert ma.perimeter == mb.perimeter == 4426
    assert ma.area == mb.area == 979200
    assert rec.check().ok


def test_build_pair_outside_window():
    rec = iso.build_pair(iso.IsoParams(3, 2))
    # oracle: evaluate the printed forms at (3, 2) and test constructibility
    a, b = iso.closed_sides(3, 2)
    assert rec.sides_a == a and rec.sides_b == b
    assert not (constructible(a) and constructible(b))
    assert rec.constructible is False
    assert rec.to_json()["constructible"] is False


def test_trapezium():
    rec = iso.trapezium_variant(iso.IsoParams(2, 1))
    ma, mb = rec.metrics()
    assert {ma.d1, ma.d2, mb.d1, mb.d2} == {1412}
    assert ma.perimeter == mb.perimeter == 4426
    assert iso.trapezium_variant(iso.IsoParams(3, 2)).constructible is False


def test_extended_seeds():
    p = iso.IsoParams(2, 1)
    assert iso.extended_seeds(p, 0) == []
    (seed,) = iso.extended_seeds(p, 1)
    assert (seed.q1, seed.q2) not in {(32, 17), (17, 32)}
    assert rational_square_root(iso.phi(seed.q1, seed.q2, 2, 1)) is not None


def test_extended_seeds_5_2():
    seeds = iso.extended_seeds(iso.IsoParams(5, 2), 2)
    assert len(seeds) == 2
    for s in seeds:
        assert sum(s.x) == sum(s.y)
        assert math.prod(s.x) == math.prod(s.y)


def test_extended_seed_gives_equal_pair():
    (seed,) = iso.extended_seeds(iso.IsoParams(2, 1), 1)
    a, b = seed.sides()
    assert sum(a) == sum(b)
    assert sixteen_area_sq(*a) == sixteen_area_sq(*b)
    assert rational_square_root(triple_product(*a)) is not None
    assert rational_square_root(triple_product(*b)) is not None


def test_closed_form_vs_pipeline_grid():
    for r1 in range(2, 13):
        for r2 in range(1, r1):
            if math.gcd(r1, r2) != 1:
                continue
            rec = iso.build_pair(iso.IsoParams(r1, r2))
            assert rec.extra["pipeline_factor"] == {"a": "2", "b": "2"}


def test_symbolic_identities():
    a, b = iso.closed_sides(X, Y)
    perim = iso.closed_perimeter(X, Y)
    assert sum(a, BiPoly()) == perim == sum(b, BiPoly())
    area = iso.closed_area(X, Y)
    assert sixteen_area_sq(*a) == 16 * area**2 == sixteen_area_sq(*b)
    for q in (a, b):
        root = bipoly_square_root(triple_product(*q))
        assert root is not None and root * root == triple_product(*q)
    t1, t2, t3 = pair_sums(*a)
    assert t1 * t2 == iso.closed_shared_diagonal(X, Y) ** 2 * t3

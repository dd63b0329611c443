"""Exit criteria. Each test prints one PASS/FAIL line in the summary."""
import math
import random
import time
from contextlib import contextmanager
from fractions import Fraction

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from bq_lab import isosceles as iso
from bq_lab import scalene as sca
from bq_lab.fermat import fermat_root_const
from bq_lab.identities import run_suite
from bq_lab.numerics import isqrt_floor, perfect_square_root, rational_square_root
from bq_lab.poly import UniPoly, poly_square_root
from bq_lab.quad import QuadSides, constructible, equal_pair_check, metrics
from bq_lab.search import SearchConfig, cross_check_family, enumerate_rows, find_equal_pairs

from conftest import ACCEPTANCE_RESULTS


@contextmanager
def criterion(number, label, limit_s):
    start = time.perf_counter()
    status = "FAIL"
    try:
        yield
        elapsed = time.perf_counter() - start
        assert elapsed < limit_s, f"took {elapsed:.2f}s, limit {limit_s}s"
        status = "PASS"
    finally:
        elapsed = time.perf_counter() - start
        ACCEPTANCE_RESULTS.append(f"{status} [{number}] {label} ({elapsed:.2f}s / {limit_s}s)")
        print(ACCEPTANCE_RESULTS[-1])


def _pair_ok(a, b, distinct=False):
    if not (all(v > 0 for v in a + b) and constructible(a) and constructible(b)):
        return False
    return not distinct or (len(set(a)) == 4 and len(set(b)) == 4)


def test_criterion_1_isosceles_anchor():
    with criterion(1, "isosceles pair at (2, 1)", 1.0):
        rec = iso.build_pair(iso.IsoParams(2, 1))
        assert rec.sides_a == (165, 1635, 1313, 1313)
        assert rec.sides_b == (413, 1763, 1125, 1125)
        ma, mb = rec.metrics()
        assert ma.perimeter == mb.perimeter == 4426
        assert ma.area == mb.area == 979200
        assert (ma.d1, ma.d2) == (1412, Fraction(590850, 353))
        assert (mb.d1, mb.d2) == (1412, Fraction(612000, 353))
        assert ma.circumradius == Fraction(463489, 544)
        assert mb.circumradius == Fraction(1765, 2)


def test_criterion_2_scalene_anchor():
    with criterion(2, "scalene pair at t = 5", 5.0):
        rec = sca.build_pair(5)
        assert rec.sides_a == (1910470516999149312, 175866555513132912053,
                               169314770763852594617, 207503184245618672382)
        assert rec.sides_b == (154300800756891939924, 50195745087237056747,
                               121029496193614687182, 229068939001859644511)
        ma, mb = rec.metrics()
        assert ma.perimeter == mb.perimeter == 554594981039603328364
        assert ma.area == mb.area == 14509220341219325824870053111347523537900
        assert ma.d1 == Fraction(250496054986226007288150003450, 1204106621)
        assert ma.d2 == Fraction(43680775787512057583999745775, 246823021)
        assert ma.circumradius == Fraction(1338548290849915267747645, 12376)
        assert mb.d1 == Fraction(123610451156476856682515, 769)
        assert mb.d2 == Fraction(46331747007719685906339040691, 246823021)
        assert mb.circumradius == Fraction(7098921625266102351020269, 61880)


def test_criterion_3_isosceles_identities():
    with criterion(3, "isosceles symbolic identities", 30.0):
        results = dict(run_suite("isosceles"))
        required = ["perimeter_a", "perimeter_b", "area_a", "area_b", "square_triple_a",
                    "square_triple_b", "trapezium_a", "trapezium_b"]
        assert all(results[k] for k in required), results


def test_criterion_4_scalene_identities():
    with criterion(4, "scalene symbolic identities", 60.0):
        results = dict(run_suite("scalene"))
        required = ["point_on_curve", "cond1_residual_zero", "phi2_square",
                    "sum_x_eq_sum_y", "prod_x_eq_prod_y"]
        assert all(results[k] for k in required), results


def test_criterion_5_fermat_reproduction():
    with criterion(5, "Fermat step reproduces q1/q2", 5.0):
        pairs = [(r1, r2) for r1 in range(2, 13) for r2 in range(1, r1) if math.gcd(r1, r2) == 1]
        for r1, r2 in random.Random(2024).sample(pairs, 20):
            want = Fraction(8 * r1**2 * r2**2, iso.quartic_f4(r1, r2))
            assert fermat_root_const(iso.phi_quartic(r1, r2)) == want


def test_criterion_6_windows():
    with criterion(6, "constructibility windows", 30.0):
        rng = random.Random(6)
        lo, hi = Fraction(163, 100), Fraction(211, 100)
        for _ in range(50):
            r = lo + (hi - lo) * Fraction(rng.randint(1, 9999), 10000)
            p = iso.IsoParams.from_ratio(r)
            rec = iso.build_pair(p)
            assert _pair_ok(rec.sides_a, rec.sides_b), r
        for r in (Fraction(3, 2), Fraction(11, 5)):
            a, b = iso.closed_sides(r.numerator, r.denominator)
            assert not _pair_ok(a, b), r

        lo, hi = Fraction(4991, 1000), Fraction(5565, 1000)
        for _ in range(25):
            t = lo + (hi - lo) * Fraction(rng.randint(1, 9999), 10000)
            rec = sca.build_pair(t)
            assert _pair_ok(rec.sides_a, rec.sides_b, distinct=True), t
        for t in (4, 6):
            a, b = sca.closed_sides(Fraction(t))
            assert not _pair_ok(a, b, distinct=True), t


def _naive_count(max_p):
    count = 0
    for a in range(1, max_p + 1):
        for b in range(a, max_p + 1):
            for c in range(b, max_p + 1):
                for d in range(c, max_p + 1):
                    if a + b + c + d <= max_p and d < a + b + c:
                        count += 1
    return count


def test_criterion_7_oracle():
    with criterion(7, "search oracle at desk scale", 300.0):
        pairs = find_equal_pairs(SearchConfig(300))
        assert pairs
        for p in pairs:
            chk = equal_pair_check(*p.quads)
            assert chk.equal_perimeter and chk.equal_area and chk.distinct_multisets
        assert len(enumerate_rows(SearchConfig(20, require_integer_area=False))) == _naive_count(20)
        assert cross_check_family(iso.build_pair(iso.IsoParams(2, 1))).ok
        assert cross_check_family(sca.build_pair(5)).ok


side = st.fractions(min_value=Fraction(1, 40), max_value=500, max_denominator=40)


@st.composite
def quads(draw):
    vals = draw(st.lists(side, min_size=4, max_size=4))
    assume(constructible(vals))
    return QuadSides(*vals)


def test_criterion_8_properties():
    trials = settings(max_examples=200, deadline=None)

    @trials
    @given(st.integers(0, 2**512))
    def isqrt_bracket(n):
        r = isqrt_floor(n)
        assert r * r <= n < (r + 1) ** 2

    @trials
    @given(st.integers(-(2**300), 2**300))
    def int_square(n):
        assert perfect_square_root(n * n) == abs(n)

    @trials
    @given(st.fractions(max_denominator=10**9).filter(lambda q: abs(q) < 10**20))
    def rat_square(q):
        assert rational_square_root(q * q) == abs(q)

    @trials
    @given(st.lists(st.fractions(min_value=-50, max_value=50, max_denominator=9), max_size=9))
    def poly_square(cs):
        q = UniPoly(cs)
        root = poly_square_root(q * q)
        assert root == q or root == -q

    @trials
    @given(quads())
    def ptolemy(q):
        m = metrics(q)
        a1, a2, a3, a4 = q.as_tuple()
        assert m.d1_sq * m.d2_sq == (a1 * a3 + a2 * a4) ** 2

    @trials
    @given(quads(), st.fractions(min_value=Fraction(1, 30), max_value=30, max_denominator=30))
    def scaling(q, lam):
        m, s = metrics(q), metrics(q.scaled(lam))
        assert s.perimeter == lam * m.perimeter and s.area_sq == lam**4 * m.area_sq
        assert s.d1_sq == lam**2 * m.d1_sq and s.d2_sq == lam**2 * m.d2_sq
        assert s.circumradius_sq == lam**2 * m.circumradius_sq

    with criterion(8, "property suites, 200 trials each", 60.0):
        for prop in (isqrt_bracket, int_square, rat_square, poly_square, ptolemy, scaling):
            prop()

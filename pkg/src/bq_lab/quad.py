"""Exact geometry of cyclic quadrilaterals and pair records.

All quantities are kept squared (area, diagonals, circumradius) since the
squares are always rational; rational roots are attached when they exist.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Optional, Sequence, Tuple

from .numerics import (
    RatLike,
    lcm_of_denominators,
    rat_str,
    rational_square_root,
    to_rational,
)


class NotConstructibleError(ValueError):
    """Sides violate the strict polygon inequality (or are nonpositive)."""

    def __init__(self, sides, violated: Tuple[int, ...]):
        self.sides = tuple(sides)
        self.violated = violated
        i = violated[-1]
        super().__init__(
            f"sides {[rat_str(s) for s in sides]} not constructible: "
            f"side {i + 1} is not less than the sum of sides "
            f"{[k + 1 for k in violated[:-1]]}"
        )


@dataclass(frozen=True)
class QuadSides:
    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4"):
            v = Fraction(getattr(self, name))
            if v <= 0:
                raise ValueError(f"side {name} must be positive, got {v}")
            object.__setattr__(self, name, v)

    @classmethod
    def of(cls, values: Sequence[RatLike]) -> "QuadSides":
        if len(values) != 4:
            raise ValueError("a quadrilateral needs exactly four sides")
        return cls(*(to_rational(v) for v in values))

    def as_tuple(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a1, self.a2, self.a3, self.a4)

    def scaled(self, lam: RatLike) -> "QuadSides":
        return QuadSides(*(lam * a for a in self.as_tuple()))

    @property
    def perimeter(self) -> Fraction:
        return sum(self.as_tuple(), Fraction(0))


def constructible(sides: Sequence[RatLike]) -> bool:
    """Every side strictly positive and strictly less than the other three."""
    return _violation(sides) is None


def _violation(sides: Sequence[RatLike]) -> Optional[Tuple[int, ...]]:
    vals = [Fraction(s) for s in (sides.as_tuple() if isinstance(sides, QuadSides) else sides)]
    total = sum(vals)
    for i, v in enumerate(vals):
        if v <= 0 or v >= total - v:
            return tuple(k for k in range(4) if k != i) + (i,)
    return None


def sixteen_area_sq(a1, a2, a3, a4):
    """(−a1+a2+a3+a4)(a1−a2+a3+a4)(a1+a2−a3+a4)(a1+a2+a3−a4).

    Written without division so it works on ints and polynomials alike.
    """
    return ((a1 - a2 + a3 + a4) * (a1 + a2 - a3 + a4)
            * (a1 + a2 + a3 - a4) * (-a1 + a2 + a3 + a4))


def pair_sums(a1, a2, a3, a4):
    """(a1a2+a3a4, a1a3+a2a4, a1a4+a2a3)."""
    return (a1 * a2 + a3 * a4, a1 * a3 + a2 * a4, a1 * a4 + a2 * a3)


def triple_product(a1, a2, a3, a4):
    t1, t2, t3 = pair_sums(a1, a2, a3, a4)
    return t1 * t2 * t3


@dataclass(frozen=True)
class QuadMetrics:
    sides: QuadSides
    semiperimeter: Fraction
    perimeter: Fraction
    area_sq: Fraction
    d1_sq: Fraction
    d2_sq: Fraction
    circumradius_sq: Fraction
    area: Optional[Fraction] = None
    d1: Optional[Fraction] = None
    d2: Optional[Fraction] = None
    circumradius: Optional[Fraction] = None

    def to_json(self) -> Dict[str, Any]:
        opt = lambda v: None if v is None else rat_str(v)  # noqa: E731
        return {
            "sides": [rat_str(a) for a in self.sides.as_tuple()],
            "perimeter": rat_str(self.perimeter),
            "area": opt(self.area),
            "area_sq": rat_str(self.area_sq),
            "d1": opt(self.d1),
            "d1_sq": rat_str(self.d1_sq),
            "d2": opt(self.d2),
            "d2_sq": rat_str(self.d2_sq),
            "circumradius": opt(self.circumradius),
            "circumradius_sq": rat_str(self.circumradius_sq),
        }

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "QuadMetrics":
        opt = lambda v: None if v is None else to_rational(v)  # noqa: E731
        sides = QuadSides.of(data["sides"])
        return cls(
            sides=sides,
            semiperimeter=to_rational(data["perimeter"]) / 2,
            perimeter=to_rational(data["perimeter"]),
            area_sq=to_rational(data["area_sq"]),
            d1_sq=to_rational(data["d1_sq"]),
            d2_sq=to_rational(data["d2_sq"]),
            circumradius_sq=to_rational(data["circumradius_sq"]),
            area=opt(data["area"]),
            d1=opt(data["d1"]),
            d2=opt(data["d2"]),
            circumradius=opt(data["circumradius"]),
        )


def metrics(q: QuadSides | Sequence[RatLike]) -> QuadMetrics:
    """Area, diagonals and circumradius (squared, plus rational roots)."""
    if not isinstance(q, QuadSides):
        vals = [to_rational(v) for v in q]
        bad = _violation(vals)
        if bad is not None:
            raise NotConstructibleError(vals, bad)
        q = QuadSides(*vals)
    bad = _violation(q.as_tuple())
    if bad is not None:
        raise NotConstructibleError(q.as_tuple(), bad)
    a1, a2, a3, a4 = q.as_tuple()
    s = q.perimeter / 2
    area_sq = sixteen_area_sq(a1, a2, a3, a4) / 16
    t1, t2, t3 = pair_sums(a1, a2, a3, a4)
    d1_sq = t1 * t2 / t3
    d2_sq = t2 * t3 / t1
    r_sq = t1 * t2 * t3 / (16 * area_sq)
    return QuadMetrics(
        sides=q,
        semiperimeter=s,
        perimeter=2 * s,
        area_sq=area_sq,
        d1_sq=d1_sq,
        d2_sq=d2_sq,
        circumradius_sq=r_sq,
        area=rational_square_root(area_sq),
        d1=rational_square_root(d1_sq),
        d2=rational_square_root(d2_sq),
        circumradius=rational_square_root(r_sq),
    )


def sibling_orders(q: QuadSides) -> Tuple[QuadSides, QuadSides, QuadSides]:
    """The three inequivalent cyclic orders of the same four sides.

    Repeated sides can make some of the three coincide; no deduplication.
    """
    a1, a2, a3, a4 = q.as_tuple()
    return (QuadSides(a1, a2, a3, a4), QuadSides(a1, a3, a2, a4), QuadSides(a1, a2, a4, a3))


@dataclass(frozen=True)
class BrahmaguptaCertificate:
    scale: Fraction
    sides: Tuple[int, int, int, int]
    diagonals: Tuple[int, int]
    area: int
    circumradius: Optional[Fraction]

    def to_json(self) -> Dict[str, Any]:
        return {
            "scale": rat_str(self.scale),
            "sides": [str(a) for a in self.sides],
            "diagonals": [str(d) for d in self.diagonals],
            "area": str(self.area),
            "circumradius": None if self.circumradius is None else rat_str(self.circumradius),
        }


def scale_to_brahmagupta(q: QuadSides) -> Optional[BrahmaguptaCertificate]:
    """Least scale turning sides, diagonals and area into integers.

    None when a diagonal or the area is irrational.
    """
    m = metrics(q)
    if m.area is None or m.d1 is None or m.d2 is None:
        return None
    lengths = list(q.as_tuple()) + [m.d1, m.d2]
    # least rational lam0 with lam0 * lengths all integral
    den = lcm_of_denominators(lengths)
    lam0 = Fraction(den, math.gcd(*(int(v * den) for v in lengths)))
    # the admissible scales are k*lam0; area scales quadratically
    base = lam0 * lam0 * m.area
    k = 1
    while (k * k * base).denominator != 1:
        k += 1
    lam = k * lam0
    sides = tuple(int(lam * a) for a in q.as_tuple())
    diags = (int(lam * m.d1), int(lam * m.d2))
    area = lam * lam * m.area
    cert = BrahmaguptaCertificate(
        scale=lam,
        sides=sides,
        diagonals=diags,
        area=int(area),
        circumradius=None if m.circumradius is None else lam * m.circumradius,
    )
    _verify_certificate(cert)
    return cert


def _verify_certificate(cert: BrahmaguptaCertificate) -> None:
    m = metrics(QuadSides(*cert.sides))
    if m.area != cert.area or (m.d1, m.d2) != cert.diagonals:
        raise ArithmeticError("certificate does not recompute")  # pragma: no cover


@dataclass(frozen=True)
class PairCheck:
    equal_perimeter: bool
    equal_area: bool
    square_triple_a: bool
    square_triple_b: bool
    distinct_multisets: bool

    @property
    def equal_perimeter_area(self) -> bool:
        return self.equal_perimeter and self.equal_area

    @property
    def ok(self) -> bool:
        return all((self.equal_perimeter, self.equal_area, self.square_triple_a,
                    self.square_triple_b, self.distinct_multisets))

    def failures(self) -> list:
        return [k for k, v in self.to_json().items() if v is False]

    def to_json(self) -> Dict[str, bool]:
        return {
            "equal_perimeter": self.equal_perimeter,
            "equal_area": self.equal_area,
            "square_triple_a": self.square_triple_a,
            "square_triple_b": self.square_triple_b,
            "distinct_multisets": self.distinct_multisets,
        }


def equal_pair_check(p: QuadSides, q: QuadSides) -> PairCheck:
    for s in (p, q):
        bad = _violation(s.as_tuple())
        if bad is not None:
            raise NotConstructibleError(s.as_tuple(), bad)
    a, b = p.as_tuple(), q.as_tuple()
    return PairCheck(
        equal_perimeter=sum(a) == sum(b),
        equal_area=sixteen_area_sq(*a) == sixteen_area_sq(*b),
        square_triple_a=rational_square_root(triple_product(*a)) is not None,
        square_triple_b=rational_square_root(triple_product(*b)) is not None,
        distinct_multisets=sorted(a) != sorted(b),
    )


@dataclass(frozen=True)
class PairRecord:
    """Two side quadruples claimed to share perimeter and area.

    ``sides_a``/``sides_b`` are kept raw (possibly nonpositive outside a
    family's window); metrics are attached only when constructible.
    """

    family: str
    params: Dict[str, str]
    sides_a: Tuple[Fraction, ...]
    sides_b: Tuple[Fraction, ...]
    extra: Dict[str, Any] = field(default_factory=dict, compare=False)

    @property
    def constructible(self) -> bool:
        return constructible(self.sides_a) and constructible(self.sides_b)

    @property
    def quads(self) -> Tuple[QuadSides, QuadSides]:
        return QuadSides(*self.sides_a), QuadSides(*self.sides_b)

    def metrics(self) -> Tuple[QuadMetrics, QuadMetrics]:
        qa, qb = self.quads
        return metrics(qa), metrics(qb)

    def check(self) -> PairCheck:
        return equal_pair_check(*self.quads)

    def to_json(self) -> Dict[str, Any]:
        ok = self.constructible
        if ok:
            ma, mb = self.metrics()
            qa, qb = ma.to_json(), mb.to_json()
            common = {
                "perimeter": qa["perimeter"] if ma.perimeter == mb.perimeter else None,
                "area": qa["area"] if ma.area_sq == mb.area_sq else None,
            }
        else:
            qa, qb = _raw_quad_json(self.sides_a), _raw_quad_json(self.sides_b)
            common = {"perimeter": None, "area": None}
            if sum(self.sides_a) == sum(self.sides_b):
                common["perimeter"] = rat_str(sum(self.sides_a))
        out = {
            "family": self.family,
            "params": dict(self.params),
            "quad_a": qa,
            "quad_b": qb,
            "common": common,
            "constructible": ok,
        }
        out.update(self.extra)
        return out

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "PairRecord":
        known = {"family", "params", "quad_a", "quad_b", "common", "constructible"}
        return cls(
            family=data["family"],
            params=dict(data["params"]),
            sides_a=tuple(to_rational(v) for v in data["quad_a"]["sides"]),
            sides_b=tuple(to_rational(v) for v in data["quad_b"]["sides"]),
            extra={k: v for k, v in data.items() if k not in known},
        )


_METRIC_KEYS = ("area", "area_sq", "d1", "d1_sq", "d2", "d2_sq", "circumradius", "circumradius_sq")


def _raw_quad_json(sides) -> Dict[str, Any]:
    out: Dict[str, Any] = {"sides": [rat_str(a) for a in sides], "perimeter": rat_str(sum(sides))}
    out.update({k: None for k in _METRIC_KEYS})
    return out

"""Fermat's method for rational z making a quartic f(z) a square.

Match f against the square of a quadratic agreeing with f in its three
lowest (or highest) coefficients; the difference then has a single
nonzero rational root, at which f is a square.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Union

from .numerics import RatLike, rational_square_root, to_rational
from .poly import UniPoly, parse_unipoly


class FermatError(ValueError):
    """The requested expansion yields no usable solution."""


class NotSquareAnchor(FermatError):
    """The anchoring coefficient is not a nonzero rational square."""


class IdenticallySquare(FermatError):
    """f is the square of a quadratic, so every z works."""

    def __init__(self, root: UniPoly):
        self.root = root
        super().__init__(f"quartic is identically a square: ({root.to_text()})^2")


@dataclass(frozen=True)
class Quartic:
    c0: Fraction
    c1: Fraction
    c2: Fraction
    c3: Fraction
    c4: Fraction

    def __post_init__(self):
        for k in ("c0", "c1", "c2", "c3", "c4"):
            object.__setattr__(self, k, Fraction(getattr(self, k)))
        if not any(self.coeffs):
            raise ValueError("quartic is identically zero")

    @classmethod
    def from_poly(cls, p: UniPoly) -> "Quartic":
        if p.degree > 4:
            raise ValueError(f"degree {p.degree} polynomial is not a quartic")
        cs = list(p.coeffs) + [0] * (5 - len(p.coeffs))
        return cls(*cs)

    @classmethod
    def parse(cls, text: str) -> "Quartic":
        """Accept ``"c0,c1,c2,c3,c4"`` or a polynomial in z."""
        if "," in text:
            parts = [to_rational(s) for s in text.split(",")]
            if len(parts) != 5:
                raise ValueError("expected five comma-separated coefficients c0..c4")
            return cls(*parts)
        return cls.from_poly(parse_unipoly(text, "z"))

    @property
    def coeffs(self):
        return (self.c0, self.c1, self.c2, self.c3, self.c4)

    @property
    def poly(self) -> UniPoly:
        return UniPoly(self.coeffs)

    def __call__(self, z: RatLike) -> Fraction:
        return self.poly(Fraction(z))

    def shift(self, a: RatLike) -> "Quartic":
        return Quartic.from_poly(self.poly.shift(a))


def _check(f: Quartic, z: Fraction) -> Fraction:
    if z == 0:
        raise FermatError("expansion only yields the trivial point z = 0")
    val = f(z)
    if val == 0:
        raise FermatError(f"z = {z} is a root of f; degenerate")
    if rational_square_root(val) is None:  # pragma: no cover
        raise ArithmeticError(f"f({z}) = {val} is not a square")
    return z


def fermat_root_const(f: Quartic) -> Fraction:
    """Solution anchored at the constant term (needs c0 a nonzero square)."""
    e0 = rational_square_root(f.c0) if f.c0 != 0 else None
    if e0 is None:
        raise NotSquareAnchor(f"constant term {f.c0} is not a nonzero rational square")
    b1 = f.c1 / (2 * e0)
    b2 = (f.c2 - b1 * b1) / (2 * e0)
    # f - (e0 + b1 z + b2 z^2)^2 = z^3 (A + B z)
    A = f.c3 - 2 * b1 * b2
    B = f.c4 - b2 * b2
    if B == 0:
        if A == 0:
            raise IdenticallySquare(UniPoly([e0, b1, b2]))
        raise FermatError("no Fermat solution from this expansion")
    return _check(f, -A / B)


def fermat_root_leading(f: Quartic) -> Fraction:
    """Solution anchored at the z^4 term (needs c4 a nonzero square)."""
    e4 = rational_square_root(f.c4) if f.c4 != 0 else None
    if e4 is None:
        raise NotSquareAnchor(f"leading term {f.c4} is not a nonzero rational square")
    b1 = f.c3 / (2 * e4)
    b0 = (f.c2 - b1 * b1) / (2 * e4)
    # f - (e4 z^2 + b1 z + b0)^2 = A z + B
    A = f.c1 - 2 * b1 * b0
    B = f.c0 - b0 * b0
    if A == 0:
        if B == 0:
            raise IdenticallySquare(UniPoly([b0, b1, e4]))
        raise FermatError("no Fermat solution from this expansion")
    return _check(f, -B / A)


@dataclass
class FermatRun:
    solutions: List[Fraction] = field(default_factory=list)
    stalled: bool = False
    identically_square: bool = False


def _try(fn, f: Quartic) -> Optional[Fraction]:
    try:
        return fn(f)
    except IdenticallySquare:
        raise
    except FermatError:
        return None


def fermat_iterate(f: Quartic, k: int, anchors: Sequence[str] = ("const", "leading")) -> FermatRun:
    """Up to ``k`` distinct nonzero z with f(z) a nonzero square.

    Known points are used as new expansion centres: f(z + p) has square
    constant term f(p), so the constant-anchored step applies again. The
    leading anchor is shift invariant and is tried from each centre too.
    """
    run = FermatRun()
    if k <= 0:
        return run
    try:
        centres: List[Fraction] = []
        if f.c0 != 0 and rational_square_root(f.c0) is not None:
            centres.append(Fraction(0))
        seeds = []
        for name in anchors:
            fn = fermat_root_const if name == "const" else fermat_root_leading
            z = _try(fn, f)
            if z is not None:
                seeds.append(z)
    except IdenticallySquare:
        run.identically_square = True
        run.solutions = [Fraction(i) for i in range(1, k + 1)]
        return run

    found: List[Fraction] = []
    seen = set()

    def add(z: Fraction) -> None:
        if z != 0 and z not in seen and f(z) != 0:
            seen.add(z)
            found.append(z)

    for z in seeds:
        add(z)
    idx = 0
    while len(found) < k and idx < len(found):
        p = found[idx]
        idx += 1
        g = f.shift(p)
        for fn in (fermat_root_const, fermat_root_leading):
            try:
                w = fn(g)
            except FermatError:
                continue
            add(p + w)
    run.solutions = found[:k]
    run.stalled = len(run.solutions) < k
    return run


def square_witness(f: Union[Quartic, UniPoly], z: RatLike) -> Optional[Fraction]:
    return rational_square_root(f(Fraction(z)))

"""Exact integer/rational helpers: square detection and normalization.

Rationals are ``fractions.Fraction`` throughout; it is already canonical
(gcd-reduced, positive denominator) so equality is structural.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Iterable, Optional, Sequence, Union

Rat = Fraction
RatLike = Union[int, Fraction]

# quadratic residues used as a cheap rejection filter before isqrt
_SQ_MOD64 = frozenset(i * i % 64 for i in range(64))
_SQ_MOD63 = frozenset(i * i % 63 for i in range(63))
_SQ_MOD65 = frozenset(i * i % 65 for i in range(65))
_SQ_MOD11 = frozenset(i * i % 11 for i in range(11))


def isqrt_floor(n: int) -> int:
    """Return floor(sqrt(n)) for a nonnegative integer."""
    if n < 0:
        raise ValueError(f"isqrt_floor of negative number {n}")
    r = math.isqrt(n)
    if not (r * r <= n < (r + 1) * (r + 1)):  # pragma: no cover
        raise ArithmeticError("isqrt bracketing failed")
    return r


def perfect_square_root(n: int) -> Optional[int]:
    if n < 0:
        return None
    if n < 2:
        return n
    if (n % 64 not in _SQ_MOD64 or n % 63 not in _SQ_MOD63
            or n % 65 not in _SQ_MOD65 or n % 11 not in _SQ_MOD11):
        return None
    r = isqrt_floor(n)
    return r if r * r == n else None


def is_square(n: int) -> bool:
    return perfect_square_root(n) is not None


def rational_square_root(q: RatLike) -> Optional[Fraction]:
    """Nonnegative rational square root of ``q``, or None when irrational."""
    q = Fraction(q)
    num = perfect_square_root(q.numerator)
    if num is None:
        return None
    den = perfect_square_root(q.denominator)
    if den is None:
        return None
    return Fraction(num, den)


def to_rational(value: Union[str, int, Fraction]) -> Fraction:
    """Parse ``"p/q"`` or an integer string. Decimals are rejected."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    text = str(value).strip()
    if not text or any(c in text for c in ".eE_") or text.count("/") > 1:
        raise ValueError(f"not an exact rational: {value!r}")
    if "/" in text:
        p, q = text.split("/")
        if int(q) == 0:
            raise ZeroDivisionError(f"zero denominator in {value!r}")
        return Fraction(int(p), int(q))
    return Fraction(int(text))


def rat_str(q: RatLike) -> str:
    """Canonical text form: ``"p/q"``, or ``"p"`` when q == 1."""
    return str(Fraction(q))


def normalize_quadruple(v: Sequence[int]) -> tuple[int, ...]:
    """Divide integers by their common gcd, preserving order and signs."""
    g = math.gcd(*v)
    if g == 0:
        raise ValueError("cannot normalize an all-zero tuple")
    return tuple(x // g for x in v)


def lcm_of_denominators(values: Iterable[RatLike]) -> int:
    return reduce(math.lcm, (Fraction(v).denominator for v in values), 1)


def primitive_integers(values: Sequence[RatLike]) -> tuple[tuple[int, ...], Fraction]:
    """Scale rationals to coprime integers.

    Returns ``(ints, factor)`` with ``ints[i] == factor * values[i]`` and
    ``factor > 0``.
    """
    vals = [Fraction(v) for v in values]
    den = lcm_of_denominators(vals)
    ints = [int(v * den) for v in vals]
    g = math.gcd(*ints)
    if g == 0:
        raise ValueError("cannot normalize an all-zero tuple")
    return tuple(i // g for i in ints), Fraction(den, g)

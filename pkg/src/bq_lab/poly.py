"""Dense univariate and sparse bivariate polynomials over the rationals.

Both classes support ``+ - * **`` with each other's kind (same class only)
and with plain ints/Fractions, so closed-form expressions written once can
be evaluated on numbers or expanded symbolically.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import reduce
from typing import Dict, Iterable, Optional, Sequence, Tuple, Union

from .numerics import rat_str, rational_square_root

Scalar = Union[int, Fraction]


def _common_den(coeffs: Iterable[Fraction]) -> int:
    return reduce(math.lcm, (c.denominator for c in coeffs), 1)


class UniPoly:
    """Univariate polynomial; ``coeffs[i]`` is the coefficient of z**i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: Tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def z(cls) -> "UniPoly":
        return cls([0, 1])

    @classmethod
    def const(cls, c: Scalar) -> "UniPoly":
        return cls([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __repr__(self) -> str:
        return f"UniPoly({self.to_text()!r})"

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = UniPoly([other])
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    @staticmethod
    def _lift(other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly([other])
        raise TypeError(f"cannot combine UniPoly with {type(other).__name__}")

    def __add__(self, other) -> "UniPoly":
        o = self._lift(other)
        n = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = o.coeffs + (Fraction(0),) * (n - len(o.coeffs))
        return UniPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> "UniPoly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "UniPoly":
        return self._lift(other) - self

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            return UniPoly(c * other for c in self.coeffs)
        o = self._lift(other)
        if not self.coeffs or not o.coeffs:
            return UniPoly()
        # integer convolution on a common denominator
        da, db = _common_den(self.coeffs), _common_den(o.coeffs)
        a = [int(c * da) for c in self.coeffs]
        b = [int(c * db) for c in o.coeffs]
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        d = da * db
        return UniPoly(Fraction(c, d) for c in out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "UniPoly":
        if k < 0:
            raise ValueError("negative polynomial power")
        result, base = UniPoly([1]), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __call__(self, value):
        """Horner evaluation; ``value`` may be a scalar or another UniPoly."""
        acc = UniPoly() if isinstance(value, UniPoly) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def shift(self, a: Scalar) -> "UniPoly":
        """Return p(z + a)."""
        return self(UniPoly([a, 1]))

    def reverse(self, degree: Optional[int] = None) -> "UniPoly":
        """Return z**degree * p(1/z)."""
        d = self.degree if degree is None else degree
        cs = list(self.coeffs) + [Fraction(0)] * (d + 1 - len(self.coeffs))
        return UniPoly(reversed(cs))

    def to_text(self, var: str = "z") -> str:
        return _format({(i, 0): c for i, c in enumerate(self.coeffs) if c}, (var, ""))


class BiPoly:
    """Sparse bivariate polynomial in (x, y): ``{(i, j): coeff}``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[Tuple[int, int], Scalar]] = None):
        self.terms: Dict[Tuple[int, int], Fraction] = {
            k: Fraction(v) for k, v in (terms or {}).items() if v != 0
        }

    @classmethod
    def x(cls) -> "BiPoly":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "BiPoly":
        return cls({(0, 1): 1})

    @classmethod
    def const(cls, c: Scalar) -> "BiPoly":
        return cls({(0, 0): c})

    def __repr__(self) -> str:
        return f"BiPoly({self.to_text()!r})"

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = BiPoly.const(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    @staticmethod
    def _lift(other) -> "BiPoly":
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return BiPoly.const(other)
        raise TypeError(f"cannot combine BiPoly with {type(other).__name__}")

    def __add__(self, other) -> "BiPoly":
        o = self._lift(other)
        out = dict(self.terms)
        for k, v in o.terms.items():
            out[k] = out.get(k, 0) + v
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other) -> "BiPoly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "BiPoly":
        return self._lift(other) - self

    def __mul__(self, other) -> "BiPoly":
        if isinstance(other, (int, Fraction)):
            return BiPoly({k: v * other for k, v in self.terms.items()})
        o = self._lift(other)
        da, db = _common_den(self.terms.values()), _common_den(o.terms.values())
        a = [(k, int(v * da)) for k, v in self.terms.items()]
        b = [(k, int(v * db)) for k, v in o.terms.items()]
        out: Dict[Tuple[int, int], int] = {}
        for (i1, j1), c1 in a:
            for (i2, j2), c2 in b:
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        d = da * db
        return BiPoly({k: Fraction(v, d) for k, v in out.items()})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "BiPoly":
        if k < 0:
            raise ValueError("negative polynomial power")
        result, base = BiPoly.const(1), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    @property
    def total_degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    def variables(self) -> set:
        used = set()
        for i, j in self.terms:
            if i:
                used.add("x")
            if j:
                used.add("y")
        return used

    def is_homogeneous(self) -> bool:
        return len({i + j for i, j in self.terms}) <= 1

    def __call__(self, x: Scalar, y: Scalar) -> Fraction:
        return self.eval(x, y)

    def eval(self, x: Scalar, y: Scalar) -> Fraction:
        x, y = Fraction(x), Fraction(y)
        return sum((c * x ** i * y ** j for (i, j), c in self.terms.items()), Fraction(0))

    def substitute(self, var: str, value: Union[Scalar, UniPoly]) -> UniPoly:
        """Replace ``var`` by a scalar or a UniPoly in the other variable.

        The result is a UniPoly in the remaining variable.
        """
        if var not in ("x", "y"):
            raise ValueError(f"unknown variable {var!r}")
        keep = 1 if var == "x" else 0
        if isinstance(value, UniPoly):
            out = UniPoly()
            for k, c in self.terms.items():
                out = out + (value ** k[1 - keep]) * UniPoly([0] * k[keep] + [c])
            return out
        value = Fraction(value)
        cs: Dict[int, Fraction] = {}
        for k, c in self.terms.items():
            cs[k[keep]] = cs.get(k[keep], 0) + c * value ** k[1 - keep]
        top = max(cs, default=-1)
        return UniPoly(cs.get(i, 0) for i in range(top + 1))

    def dehomogenize(self) -> UniPoly:
        """Set y = 1, giving a UniPoly in x."""
        return self.substitute("y", 1)

    @classmethod
    def homogenize(cls, p: UniPoly, degree: int) -> "BiPoly":
        if p.degree > degree:
            raise ValueError("homogenizing degree below polynomial degree")
        return cls({(i, degree - i): c for i, c in enumerate(p.coeffs) if c})

    @classmethod
    def from_uni(cls, p: UniPoly, var: str = "x") -> "BiPoly":
        if var == "x":
            return cls({(i, 0): c for i, c in enumerate(p.coeffs)})
        return cls({(0, i): c for i, c in enumerate(p.coeffs)})

    def to_text(self, names: Tuple[str, str] = ("x", "y")) -> str:
        return _format(self.terms, names)


# --- text form ------------------------------------------------------------

def _format(terms: Dict[Tuple[int, int], Fraction], names: Tuple[str, str]) -> str:
    if not terms:
        return "0"
    keys = sorted(terms, key=lambda k: (-(k[0] + k[1]), -k[0]))
    parts = []
    for n, k in enumerate(keys):
        c = terms[k]
        factors = [rat_str(abs(c))]
        for name, e in zip(names, k):
            if e:
                factors.append(name if e == 1 else f"{name}^{e}")
        sign = "-" if c < 0 else "+"
        body = "*".join(factors)
        parts.append(("-" + body) if n == 0 and sign == "-" else body if n == 0 else f"{sign} {body}")
    return " ".join(parts)


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_]\w*)|(\^)|(\*)|([+-]))")


def _parse_terms(text: str, names: Sequence[str]) -> Dict[Tuple[int, ...], Fraction]:
    pos, tokens = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"unexpected character at {pos} in {text!r}")
        tokens.append(m.groups())
        pos = m.end()
    if not tokens:
        raise ValueError("empty polynomial text")

    out: Dict[Tuple[int, ...], Fraction] = {}
    i, n = 0, len(tokens)
    while i < n:
        sign = 1
        while i < n and tokens[i][4]:
            sign = -sign if tokens[i][4] == "-" else sign
            i += 1
        if i >= n:
            raise ValueError("dangling sign")
        coeff = Fraction(sign)
        exps = [0] * len(names)
        while True:
            num, name, caret, star, _ = tokens[i]
            if num:
                p, _, q = num.partition("/")
                coeff *= Fraction(int(p), int(q or 1))
                i += 1
            elif name:
                if name not in names:
                    raise ValueError(f"unknown variable {name!r}")
                i += 1
                e = 1
                if i < n and tokens[i][2]:
                    if i + 1 >= n or not tokens[i + 1][0] or "/" in tokens[i + 1][0]:
                        raise ValueError("exponent must be a nonnegative integer")
                    e = int(tokens[i + 1][0])
                    i += 2
                exps[names.index(name)] += e
            else:
                raise ValueError(f"malformed term in {text!r}")
            if i < n and tokens[i][3]:
                i += 1
                if i >= n:
                    raise ValueError("dangling '*'")
                continue
            break
        key = tuple(exps)
        out[key] = out.get(key, 0) + coeff
        if i < n and not tokens[i][4]:
            raise ValueError(f"expected '+' or '-' in {text!r}")
    return out


def parse_bipoly(text: str, names: Tuple[str, str] = ("x", "y")) -> BiPoly:
    return BiPoly(_parse_terms(text, names))


def parse_unipoly(text: str, var: str = "z") -> UniPoly:
    terms = _parse_terms(text, (var,))
    top = max((k[0] for k in terms), default=-1)
    return UniPoly(terms.get((i,), 0) for i in range(top + 1))


# --- square roots -----------------------------------------------------------

def poly_square_root(p: UniPoly) -> Optional[UniPoly]:
    """Exact square root with positive leading coefficient, or None."""
    if p.is_zero():
        return UniPoly()
    n = p.degree
    if n % 2:
        return None
    lead = rational_square_root(p.leading)
    if lead is None:
        return None
    m = n // 2
    q = [Fraction(0)] * (m + 1)
    q[m] = lead
    two_lead = 2 * lead
    for k in range(1, m + 1):
        # coefficient of z^(n-k) in q^2, excluding the unknown 2*q[m]*q[m-k]
        acc = sum((q[i] * q[n - k - i] for i in range(m - k + 1, m)), Fraction(0))
        q[m - k] = (p.coeffs[n - k] - acc) / two_lead
    root = UniPoly(q)
    return root if root * root == p else None


def bipoly_square_root(p: BiPoly) -> Optional[BiPoly]:
    """Square root of a homogeneous or single-variable BiPoly.

    Returns None when no square root exists or when ``p`` is neither
    homogeneous nor univariate in disguise.
    """
    if p.is_zero():
        return BiPoly()
    used = p.variables()
    if used <= {"x"} or used == {"y"}:
        var = "y" if used == {"y"} else "x"
        uni = p.substitute("x" if var == "y" else "y", 1)
        r = poly_square_root(uni)
        return None if r is None else BiPoly.from_uni(r, var)
    if not p.is_homogeneous():
        return None
    d = p.total_degree
    if d % 2:
        return None
    r = poly_square_root(p.dehomogenize())
    if r is None:
        return None
    root = BiPoly.homogenize(r, d // 2)
    return root if root * root == p else None

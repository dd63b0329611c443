"""Exact construction and search of Brahmagupta quadrilateral pairs
with equal perimeters and equal areas."""

from .numerics import isqrt_floor, perfect_square_root, rational_square_root, normalize_quadruple
from .quad import QuadSides, QuadMetrics, PairRecord, metrics, constructible, equal_pair_check

__all__ = [
    "isqrt_floor", "perfect_square_root", "rational_square_root", "normalize_quadruple",
    "QuadSides", "QuadMetrics", "PairRecord", "metrics", "constructible", "equal_pair_check",
]

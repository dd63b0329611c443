"""Brute-force enumeration of integer cyclic quadrilaterals.

Sorted quadruples a1 <= a2 <= a3 <= a4 with a4 < a1 + a2 + a3 are walked
with numpy over (a3, a4) for each (a1, a2); square tests use residue
filters followed by exact ``math.isqrt``. No floating point is involved.
"""
from __future__ import annotations

import csv
import math
import os
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .numerics import lcm_of_denominators, perfect_square_root, rat_str
from .quad import PairRecord, QuadMetrics, QuadSides, metrics

# int64 holds 16K^2 <= P^4 comfortably below this bound
MAX_VECTOR_PERIMETER = 50_000


def _residue_table(mod: int) -> np.ndarray:
    table = np.zeros(mod, dtype=bool)
    table[[i * i % mod for i in range(mod)]] = True
    return table


_FILTERS = [(m, _residue_table(m)) for m in (64, 63, 65, 11)]


@dataclass(frozen=True)
class SearchConfig:
    max_perimeter: int
    require_integer_area: bool = True
    require_square_diagonals: bool = False
    worker_shards: int = 1

    def __post_init__(self):
        if self.max_perimeter < 4:
            raise ValueError("max_perimeter must be at least 4")
        if self.max_perimeter > MAX_VECTOR_PERIMETER:
            raise ValueError(f"max_perimeter above {MAX_VECTOR_PERIMETER} is not supported")
        if self.worker_shards < 1:
            raise ValueError("worker_shards must be positive")


@dataclass(frozen=True, order=True)
class GroupKey:
    perimeter: int
    sixteen_K_sq: int


Row = Tuple[int, int, int, int, int]  # a1, a2, a3, a4, 16K^2


def triple_product_int(a1: int, a2: int, a3: int, a4: int) -> int:
    return (a1 * a2 + a3 * a4) * (a1 * a3 + a2 * a4) * (a1 * a4 + a2 * a3)


def _shard_rows(cfg: SearchConfig, shard: int, nshards: int) -> List[Row]:
    P = cfg.max_perimeter
    out: List[Row] = []
    for a1 in range(1 + shard, P // 4 + 1, nshards):
        for a2 in range(a1, (P - a1) // 3 + 1):
            a3_max = (P - a1 - a2) // 2
            if a3_max < a2:
                break
            a3 = np.arange(a2, a3_max + 1, dtype=np.int64)
            hi = np.minimum(a1 + a2 + a3 - 1, P - a1 - a2 - a3)
            counts = hi - a3 + 1
            keep = counts > 0
            a3, hi, counts = a3[keep], hi[keep], counts[keep]
            if a3.size == 0:
                continue
            total = int(counts.sum())
            a3_rep = np.repeat(a3, counts)
            starts = np.cumsum(counts) - counts
            a4 = a3_rep + (np.arange(total, dtype=np.int64) - np.repeat(starts, counts))
            n = (-a1 + a2 + a3_rep + a4) * (a1 - a2 + a3_rep + a4) \
                * (a1 + a2 - a3_rep + a4) * (a1 + a2 + a3_rep - a4)
            if cfg.require_integer_area:
                mask = np.ones(total, dtype=bool)
                for mod, table in _FILTERS:
                    mask &= table[n % mod]
                idx = np.nonzero(mask)[0]
            else:
                idx = range(total)
            a3l, a4l, nl = a3_rep.tolist(), a4.tolist(), n.tolist()
            for i in idx:
                nn = nl[i]
                if cfg.require_integer_area:
                    r = perfect_square_root(nn)
                    if r is None or r % 4:
                        continue
                q = (a1, a2, a3l[i], a4l[i])
                if cfg.require_square_diagonals and perfect_square_root(triple_product_int(*q)) is None:
                    continue
                out.append(q + (nn,))
    return out


def _worker(args) -> List[Row]:
    return _shard_rows(*args)


def enumerate_rows(cfg: SearchConfig) -> List[Row]:
    """All qualifying (a1, a2, a3, a4, 16K^2), lexicographically sorted."""
    k = cfg.worker_shards
    if k == 1:
        rows = _shard_rows(cfg, 0, 1)
    else:
        with ProcessPoolExecutor(max_workers=k) as pool:
            parts = pool.map(_worker, [(cfg, i, k) for i in range(k)])
            rows = [r for part in parts for r in part]
    rows.sort()
    return rows


def enumerate_quads(cfg: SearchConfig) -> Iterator[Tuple[QuadSides, QuadMetrics]]:
    for a1, a2, a3, a4, _ in enumerate_rows(cfg):
        q = QuadSides(a1, a2, a3, a4)
        yield q, metrics(q)


def group_rows(rows: Sequence[Row]) -> Dict[GroupKey, List[Row]]:
    groups: Dict[GroupKey, List[Row]] = defaultdict(list)
    for row in rows:
        groups[GroupKey(sum(row[:4]), row[4])].append(row)
    return groups


def find_equal_pairs(cfg: SearchConfig) -> List[PairRecord]:
    """Every pair of distinct sorted quadruples sharing (perimeter, 16K^2)."""
    pairs = []
    groups = group_rows(enumerate_rows(cfg))
    for key in sorted(groups):
        members = groups[key]
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                pairs.append(PairRecord(
                    family="search",
                    params={"max_perimeter": str(cfg.max_perimeter)},
                    sides_a=tuple(Fraction(v) for v in members[i][:4]),
                    sides_b=tuple(Fraction(v) for v in members[j][:4]),
                ))
    return pairs


def write_csv(rows: Sequence[Row], fh) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["a1", "a2", "a3", "a4", "perimeter", "sixteen_K_sq", "K", "d1_sq", "d2_sq"])
    for a1, a2, a3, a4, n in rows:
        r = perfect_square_root(n)
        k = "" if r is None else rat_str(Fraction(r, 4))
        t1, t2, t3 = a1 * a2 + a3 * a4, a1 * a3 + a2 * a4, a1 * a4 + a2 * a3
        writer.writerow([a1, a2, a3, a4, a1 + a2 + a3 + a4, n, k,
                         rat_str(Fraction(t1 * t2, t3)), rat_str(Fraction(t2 * t3, t1))])


def default_shards() -> int:
    return int(os.environ.get("BQ_LAB_SHARDS", "1"))


# --- independent replay ----------------------------------------------------

@dataclass
class CrossCheck:
    ok: bool
    failures: List[str] = field(default_factory=list)
    details: Dict[str, str] = field(default_factory=dict)


def cross_check_family(pair: PairRecord) -> CrossCheck:
    """Re-verify a pair with integer-only arithmetic, naming any failure."""
    vals = list(pair.sides_a) + list(pair.sides_b)
    scale = lcm_of_denominators(vals)
    a = [int(v * scale) for v in pair.sides_a]
    b = [int(v * scale) for v in pair.sides_b]
    failures, details = [], {}

    def area16(s):
        p = sum(s)
        return (p - 2 * s[0]) * (p - 2 * s[1]) * (p - 2 * s[2]) * (p - 2 * s[3])

    for name, s in (("a", a), ("b", b)):
        if any(v <= 0 or 2 * v >= sum(s) for v in s):
            failures.append(f"constructible_{name}")
            details[f"constructible_{name}"] = str(s)
        tp = triple_product_int(*s)
        if perfect_square_root(tp) is None:
            failures.append(f"square_diagonals_{name}")
            details[f"square_diagonals_{name}"] = f"triple product {tp} is not a square"
    if sum(a) != sum(b):
        failures.append("equal_perimeter")
        details["equal_perimeter"] = f"{sum(a)} != {sum(b)} (scaled by {scale})"
    if area16(a) != area16(b):
        failures.append("equal_area")
        details["equal_area"] = f"16K^2: {area16(a)} != {area16(b)} (scaled by {scale})"
    else:
        if perfect_square_root(area16(a)) is None:
            failures.append("rational_area")
            details["rational_area"] = f"16K^2 = {area16(a)} is not a square"
    if sorted(a) == sorted(b):
        failures.append("distinct_multisets")
        details["distinct_multisets"] = str(sorted(a))
    return CrossCheck(ok=not failures, failures=failures, details=details)

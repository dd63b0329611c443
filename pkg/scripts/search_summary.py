"""Summarize equal-perimeter/equal-area pairs up to a perimeter bound.

    python scripts/search_summary.py --max-perimeter 300 --shards 4
"""
import argparse
import time
from collections import Counter

from bq_lab.search import SearchConfig, enumerate_rows, find_equal_pairs


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-perimeter", type=int, default=300)
    ap.add_argument("--shards", type=int, default=1)
    args = ap.parse_args()

    start = time.perf_counter()
    cfg = SearchConfig(args.max_perimeter, worker_shards=args.shards)
    rows = enumerate_rows(cfg)
    pairs = find_equal_pairs(cfg)
    bq = find_equal_pairs(SearchConfig(args.max_perimeter, require_square_diagonals=True,
                                       worker_shards=args.shards))
    print(f"integer-area quadrilaterals: {len(rows)}")
    print(f"equal perimeter/area pairs:  {len(pairs)}")
    if pairs:
        first = pairs[0]
        print(f"smallest: {tuple(map(int, first.sides_a))} / {tuple(map(int, first.sides_b))}")
    per = Counter(int(sum(p.sides_a)) for p in pairs)
    print("busiest perimeters:", per.most_common(5))
    print(f"pairs with rational diagonals: {len(bq)}")
    for p in bq:
        print(f"  {tuple(map(int, p.sides_a))} / {tuple(map(int, p.sides_b))}")
    print(f"elapsed {time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()

"""Independent reference checks used by the tests.

Nothing here imports the library's search or coverage code.
"""

from itertools import combinations
from math import comb
from pathlib import Path

GOLDEN = Path(__file__).parent / "golden"


def covers_all_pairs(n, blocks):
    seen = set()
    for b in blocks:
        for i in b:
            for j in b:
                if i < j:
                    seen.add((i, j))
    return len(seen) == n * (n - 1) // 2


def naive_min_cover(n, k, max_m):
    """Plain enumeration of m-families of k-subsets, smallest m first."""
    pair_index = {p: i for i, p in enumerate(combinations(range(1, n + 1), 2))}
    masks = []
    for b in combinations(range(1, n + 1), k):
        m = 0
        for p in combinations(b, 2):
            m |= 1 << pair_index[p]
        masks.append(m)
    full = (1 << comb(n, 2)) - 1
    for m in range(1, max_m + 1):
        for fam in combinations(masks, m):
            acc = 0
            for x in fam:
                acc |= x
            if acc == full:
                return m
    return None


def cross_group_pairs(groups):
    for gi, gj in combinations(groups, 2):
        for a in gi:
            for b in gj:
                yield (min(a, b), max(a, b))

"""Exact small-instance solvers.

``min_cover_exact`` finds the covering number C(n, k, 2) by iterative
deepening branch-and-bound over k-subsets; the partition maximizers
brute-force the two quadratic forms that the referee lower-bound proofs
optimise.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .core import Assignment, InvalidInstanceError, make_assignment


@dataclass(frozen=True)
class OracleResult:
    minimum: int
    witness: Assignment
    nodes_explored: int
    exhausted: bool
    # every family smaller than this was ruled out by the search
    proven_lower: int

    def summary(self) -> str:
        return f"minimum={self.minimum} exhausted={str(self.exhausted).lower()}"


class _NodeLimit(Exception):
    pass


def min_cover_exact(
    n: int,
    k: int,
    referee_limit: int | None = None,
    node_limit: int | None = None,
) -> OracleResult:
    """Smallest family of k-subsets of {1..n} covering every pair.

    The first block is fixed to {1..k}. Each further level branches on the
    blocks containing the lowest-numbered uncovered pair, in lexicographic
    order, and prunes when ``remaining * C(k,2) < uncovered``. If
    ``referee_limit`` or ``node_limit`` stops the search first, the result
    carries the greedy cover as best known and ``exhausted=False``.
    """
    if n < 2 or k < 2:
        raise InvalidInstanceError(f"need n >= 2 and k >= 2, got n={n}, k={k}")
    k = min(k, n)
    pair_bit = {p: i for i, p in enumerate(combinations(range(n), 2))}
    full = (1 << len(pair_bit)) - 1
    per_block = comb(k, 2)

    blocks = list(combinations(range(n), k))
    masks = []
    for b in blocks:
        m = 0
        for p in combinations(b, 2):
            m |= 1 << pair_bit[p]
        masks.append(m)
    # blocks containing each pair, in lexicographic block order
    holding = [[] for _ in pair_bit]
    for idx, b in enumerate(blocks):
        for p in combinations(b, 2):
            holding[pair_bit[p]].append(idx)

    nodes = 0
    chosen: list[int] = []

    def search(covered: int, budget: int) -> bool:
        nonlocal nodes
        nodes += 1
        if node_limit is not None and nodes > node_limit:
            raise _NodeLimit
        if covered == full:
            return True
        open_ = full & ~covered
        if budget * per_block < open_.bit_count():
            return False
        first = (open_ & -open_).bit_length() - 1
        for idx in holding[first]:
            chosen.append(idx)
            if search(covered | masks[idx], budget - 1):
                return True
            chosen.pop()
        return False

    start = -(-comb(n, 2) // per_block)
    m = start
    proven = 1
    try:
        while referee_limit is None or m <= referee_limit:
            chosen[:] = [0]
            if search(masks[0], m - 1):
                fam = sorted(blocks[i] for i in chosen)
                witness = make_assignment(
                    n, k, [[p + 1 for p in b] for b in fam], "external", declared_capacity=k
                )
                return OracleResult(m, witness, nodes, True, m)
            proven = m + 1
            m += 1
    except _NodeLimit:
        pass

    from .constructions import assign_greedy

    fallback = assign_greedy(n, k)
    proven = max(proven, start)
    return OracleResult(len(fallback), fallback, nodes, False, proven)


@dataclass(frozen=True)
class PartitionMax:
    k: int
    best_value: int
    argmax: tuple[int, ...]


def _compositions(total: int, parts: int):
    """Non-negative integer tuples of the given length summing to total, lexicographic."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _maximize(k: int, parts: int, f) -> PartitionMax:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    best, arg = None, None
    for c in _compositions(k, parts):
        v = f(*c)
        if best is None or v > best:
            best, arg = v, c
    return PartitionMax(k, best, arg)


def _f3(w, x, y, z):
    return w * y + w * z + x * z + y * z


def _f5(w, x, y, z, s, t):
    return (
        w * y + w * z + w * s + w * t
        + x * z + x * s + x * t
        + y * z + y * s + y * t
        + z * s + z * t + s * t
    )


def max_pairs_partition3(k: int) -> PartitionMax:
    """Max of wy + wz + xz + yz over w + x + y + z = k, argmax (w, x, y, z)."""
    return _maximize(k, 4, _f3)


def max_pairs_partition5(k: int) -> PartitionMax:
    """Max over w + x + y + z + s + t = k of the sum of all products except wx."""
    return _maximize(k, 6, _f5)

"""Explicit pair-covering assignments and a greedy fallback.

Every builder lays proposals out in contiguous index blocks so the emitted
grids can be compared cell by cell with hand-drawn panel tables.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

import numpy as np

from .core import Assignment, InvalidInstanceError, UnsupportedShapeError, make_assignment
from .designs import TupleSystem, quadruple_system, triple_system

# exact greedy enumerates every k-subset; above this many (subset, pair) cells it
# switches to growing each block one proposal at a time
GREEDY_EXACT_LIMIT = 5_000_000


def _block(start: int, size: int) -> list[int]:
    return list(range(start, start + size))


def _split(block: list[int], sizes: list[int]) -> list[list[int]]:
    out, pos = [], 0
    for s in sizes:
        out.append(block[pos : pos + s])
        pos += s
    return out


def _near_equal(total: int, parts: int) -> list[int]:
    q, r = divmod(total, parts)
    return [q + 1] * r + [q] * (parts - r)


def _halves(block: list[int]) -> list[list[int]]:
    return _split(block, _near_equal(len(block), 2))


def _cross(left: list[list[int]], right: list[list[int]]) -> list[list[int]]:
    return [a + b for a in left for b in right]


def assign_full(n: int, k: int | None = None) -> Assignment:
    k = n if k is None else k
    return make_assignment(n, k, [_block(1, n)], "full", declared_capacity=n)


def assign_half_even(n: int) -> Assignment:
    if n % 2 or n < 4:
        raise UnsupportedShapeError(f"half-capacity layout for even n needs even n >= 4, got n={n}")
    k = n // 2
    a, b = _block(1, k), _block(k + 1, k)
    blocks = [a, b] + _cross(_halves(a), _halves(b))
    return make_assignment(n, k, blocks, "half_even")


def assign_half_odd(n: int, k: int | None = None) -> Assignment:
    """Six referees for odd n: three hold ceil(n/2) proposals, three hold floor(n/2)."""
    if n % 2 == 0 or n < 5:
        raise UnsupportedShapeError(f"half-capacity layout for odd n needs odd n >= 5, got n={n}")
    h = n // 2
    a, b = _block(1, h + 1), _block(h + 2, h)
    blocks = [a, b] + _cross(_halves(a), _halves(b))
    return make_assignment(n, h if k is None else k, blocks, "half_odd")


def _grouped(n: int, system: TupleSystem, order: list[tuple[int, ...]], method: str) -> Assignment:
    g = system.group_size
    k = n // g
    groups = [_block(i * k + 1, k) for i in range(g)]
    subgroups = [_split(grp, _near_equal(k, g)) for grp in groups]
    blocks = [list(grp) for grp in groups]
    for t in order:
        ref = []
        for symbol in t:
            grp, pos = system.slot(symbol)
            ref.extend(subgroups[grp][pos])
        blocks.append(ref)
    return make_assignment(n, k, blocks, method)


def assign_thirds(n: int) -> Assignment:
    """3 group referees plus 9 cross referees scheduled by the triple system.

    When 3 does not divide n/3 the subgroups are uneven and some cross
    referees hold more than n/3 proposals; ``declared_capacity`` records the
    largest load.
    """
    if n % 3 or n < 6:
        raise UnsupportedShapeError(f"thirds layout needs 3 | n and n >= 6, got n={n}")
    s = triple_system()
    order = sorted(s.tuples, key=lambda t: (t[-1], t[0]))
    return _grouped(n, s, order, "thirds")


def assign_quarters(n: int) -> Assignment:
    if n % 4 or n < 8:
        raise UnsupportedShapeError(f"quarters layout needs 4 | n and n >= 8, got n={n}")
    s = quadruple_system()
    return _grouped(n, s, list(s.tuples), "quarters")


def _overlapping_halves(block: list[int]) -> list[list[int]]:
    h = (len(block) + 1) // 2
    return [block[:h], block[-h:]]


def assign_general(n: int, k: int) -> Assignment:
    """n/k group referees plus four cross referees for every pair of groups.

    Even k: cross referees hold two disjoint halves and each pair of
    proposals from different groups is covered exactly once. Odd k: the
    halves share the middle proposal, so cross referees hold k+1 proposals.
    """
    if k < 2 or k > n:
        raise InvalidInstanceError(f"need 2 <= k <= n, got n={n}, k={k}")
    if n % k:
        raise UnsupportedShapeError(f"general layout needs k | n, got n={n}, k={k}")
    groups = [_block(i * k + 1, k) for i in range(n // k)]
    split = _halves if k % 2 == 0 else _overlapping_halves
    blocks = [list(grp) for grp in groups]
    for gi, gj in combinations(range(len(groups)), 2):
        blocks.extend(_cross(split(groups[gi]), split(groups[gj])))
    method = "general_even" if k % 2 == 0 else "general_odd"
    return make_assignment(n, k, blocks, method)


def assign_three(n: int, k: int) -> Assignment:
    """Three referees for k < n <= 3k/2: two overlapping k-blocks plus the uncovered cross."""
    if not k < n <= 3 * k // 2:
        raise UnsupportedShapeError(f"three-referee layout needs k < n <= 3k/2, got n={n}, k={k}")
    d = n - k
    blocks = [_block(1, k), _block(d + 1, k), _block(1, d) + _block(k + 1, d)]
    return make_assignment(n, k, blocks, "three", declared_capacity=k)


def _greedy_blocks(n: int, k: int) -> list[list[int]]:
    pid = np.full((n, n), -1, dtype=np.int64)
    for idx, (i, j) in enumerate(combinations(range(n), 2)):
        pid[i, j] = pid[j, i] = idx
    uncovered = np.ones(comb(n, 2), dtype=bool)
    blocks = []
    if comb(n, k) * comb(k, 2) <= GREEDY_EXACT_LIMIT:
        subsets = np.array(list(combinations(range(n), k)), dtype=np.int64)
        cols = list(combinations(range(k), 2))
        subset_pairs = np.stack([pid[subsets[:, a], subsets[:, b]] for a, b in cols], axis=1)
        while uncovered.any():
            gains = uncovered[subset_pairs].sum(axis=1)
            best = int(np.argmax(gains))  # first maximum = lexicographically smallest subset
            uncovered[subset_pairs[best]] = False
            blocks.append([int(p) + 1 for p in subsets[best]])
        return blocks
    open_pairs = np.zeros((n, n), dtype=bool)
    open_pairs[np.triu_indices(n, 1)] = True
    open_pairs |= open_pairs.T
    while open_pairs.any():
        chosen = [int(np.argmax(open_pairs.sum(axis=1)))]
        free = np.ones(n, dtype=bool)
        free[chosen[0]] = False
        while len(chosen) < k:
            gain = open_pairs[:, chosen].sum(axis=1).astype(np.int64)
            gain[~free] = -1
            nxt = int(np.argmax(gain))
            chosen.append(nxt)
            free[nxt] = False
        idx = np.array(chosen)
        open_pairs[np.ix_(idx, idx)] = False
        blocks.append(sorted(p + 1 for p in chosen))
    return blocks


def assign_greedy(n: int, k: int) -> Assignment:
    """Repeatedly add the k-subset covering the most uncovered pairs.

    Ties go to the lexicographically smallest subset. For large C(n, k) the
    subset is instead grown one proposal at a time (same gain rule, lowest
    index on ties), which is no longer an exact per-step maximum.
    """
    if n < 2 or k < 2:
        raise InvalidInstanceError(f"need n >= 2 and k >= 2, got n={n}, k={k}")
    kk = min(k, n)
    return make_assignment(n, k, _greedy_blocks(n, kk), "greedy", declared_capacity=kk)


def applicable_method(n: int, k: int) -> str | None:
    """Name of the first explicit layout that applies to (n, k), or None."""
    if k >= n:
        return "full"
    if k < n <= 3 * k // 2:
        return "three"
    if n % 2 == 0 and n >= 4 and k == n // 2:
        return "half_even"
    if n % 2 == 1 and n >= 5 and k in (n // 2, n // 2 + 1):
        return "half_odd"
    # empty subgroups (k < g) would push cross loads far past k
    if n == 3 * k and k >= 3:
        return "thirds"
    if n == 4 * k and k >= 4:
        return "quarters"
    if n % k == 0:
        return "general_even" if k % 2 == 0 else "general_odd"
    return None


def assign_auto(n: int, k: int, allow_greedy: bool = True) -> Assignment:
    if n < 2 or k < 2:
        raise InvalidInstanceError(f"need n >= 2 and k >= 2, got n={n}, k={k}")
    method = applicable_method(n, k)
    if method == "full":
        return assign_full(n, k)
    if method == "three":
        return assign_three(n, k)
    if method == "half_even":
        return assign_half_even(n)
    if method == "half_odd":
        return assign_half_odd(n, k)
    if method == "thirds":
        return assign_thirds(n)
    if method == "quarters":
        return assign_quarters(n)
    if method is not None:
        return assign_general(n, k)
    if not allow_greedy:
        raise UnsupportedShapeError(f"no explicit layout for n={n}, k={k}")
    return assign_greedy(n, k)


BUILDERS = {
    "full": lambda n, k: assign_full(n, k),
    "three": assign_three,
    "half": lambda n, k: assign_half_even(n) if n % 2 == 0 else assign_half_odd(n, k),
    "thirds": lambda n, k: assign_thirds(n),
    "quarters": lambda n, k: assign_quarters(n),
    "general": assign_general,
    "greedy": assign_greedy,
    "auto": assign_auto,
}


def build(method: str, n: int, k: int) -> Assignment:
    try:
        fn = BUILDERS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; choose from {sorted(BUILDERS)}") from None
    return fn(n, k)


def table9b_fixture() -> Assignment:
    """Five referees covering six proposals with mixed loads of 3 and 4."""
    from importlib import resources

    text = resources.files("paircover.data").joinpath("table9b.json").read_text()
    return Assignment.from_json(text)

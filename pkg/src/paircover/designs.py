"""Orthogonal tuple systems used to schedule the cross referees.

A system of order g has g*g tuples, one coordinate per group of g symbols,
and any two tuples agree in at most one symbol. The thirds (g=3) and
quarters (g=4) constructions read their cross-referee layout from these.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

TRIPLES = (
    (1, 4, 7), (1, 5, 8), (1, 6, 9),
    (2, 4, 9), (2, 5, 7), (2, 6, 8),
    (3, 4, 8), (3, 5, 9), (3, 6, 7),
)

QUADRUPLES = (
    (1, 5, 9, 13), (1, 6, 11, 16), (1, 7, 12, 14), (1, 8, 10, 15),
    (2, 6, 10, 14), (2, 5, 12, 15), (2, 8, 11, 13), (2, 7, 9, 16),
    (3, 7, 11, 15), (3, 5, 10, 16), (3, 6, 12, 13), (3, 8, 9, 14),
    (4, 8, 12, 16), (4, 5, 11, 14), (4, 7, 10, 13), (4, 6, 9, 15),
)


@dataclass(frozen=True)
class TupleSystem:
    arity: int
    tuples: tuple[tuple[int, ...], ...]
    group_size: int

    def ground_set(self, i: int) -> range:
        """Symbols allowed in coordinate ``i`` (0-based): group i holds i*g+1 .. (i+1)*g."""
        g = self.group_size
        return range(i * g + 1, (i + 1) * g + 1)

    def slot(self, symbol: int) -> tuple[int, int]:
        """(group, position within group), both 0-based."""
        return divmod(symbol - 1, self.group_size)

    def to_dict(self) -> dict:
        return {
            "arity": self.arity,
            "group_size": self.group_size,
            "tuples": [list(t) for t in self.tuples],
        }


def triple_system() -> TupleSystem:
    return TupleSystem(3, TRIPLES, 3)


def quadruple_system() -> TupleSystem:
    return TupleSystem(4, QUADRUPLES, 4)


@dataclass(frozen=True)
class SystemCheck:
    ok: bool
    reason: str = ""
    violation: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


def check_system(s: TupleSystem) -> SystemCheck:
    """Check size, coordinate ranges, pairwise intersections and projections.

    Returns the first failing tuple (or tuple pair) in list order.
    """
    for t in s.tuples:
        if len(t) != s.arity:
            return SystemCheck(False, "arity", (t,))
        for i, v in enumerate(t):
            if v not in s.ground_set(i):
                return SystemCheck(False, "coordinate out of group", (t,))
    for a, b in combinations(s.tuples, 2):
        if len(set(a) & set(b)) > 1:
            return SystemCheck(False, "tuples share more than one element", (a, b))
    if len(s.tuples) != s.group_size**2:
        return SystemCheck(False, f"expected {s.group_size ** 2} tuples, got {len(s.tuples)}")
    for i, j in combinations(range(s.arity), 2):
        seen = {(t[i], t[j]) for t in s.tuples}
        missing = [c for c in product(s.ground_set(i), s.ground_set(j)) if c not in seen]
        if missing:
            return SystemCheck(False, f"projection on coordinates ({i + 1},{j + 1}) misses", tuple(missing[:1]))
    return SystemCheck(True)

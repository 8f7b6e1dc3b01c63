"""Domain types, pair enumeration and the coverage verifier.

Proposals and referees are numbered from 1 in every external form so that
emitted tables line up with hand-drawn panel grids.
"""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

METHODS = (
    "full",
    "half_even",
    "half_odd",
    "thirds",
    "quarters",
    "general_even",
    "general_odd",
    "three",
    "greedy",
    "external",
)

Pair = tuple[int, int]


class InvalidInstanceError(ValueError):
    pass


class InvalidAssignmentError(ValueError):
    pass


class UnsupportedShapeError(ValueError):
    """No construction of the requested kind exists for this (n, k)."""


@dataclass(frozen=True)
class Instance:
    n: int
    k: int

    def __post_init__(self):
        if self.n < 2:
            raise InvalidInstanceError(f"need at least 2 proposals, got n={self.n}")
        if self.k < 2:
            raise InvalidInstanceError(f"referee capacity must be >= 2, got k={self.k}")

    @property
    def capacity(self) -> int:
        return min(self.k, self.n)

    @property
    def total_pairs(self) -> int:
        return comb(self.n, 2)


@dataclass(frozen=True)
class Referee:
    id: int
    proposals: tuple[int, ...]
    areas: tuple[str, ...] | None = None

    def __post_init__(self):
        props = tuple(sorted(int(p) for p in self.proposals))
        if len(set(props)) != len(props):
            raise InvalidAssignmentError(f"referee {self.id} lists a proposal twice: {props}")
        object.__setattr__(self, "proposals", props)
        if self.areas is not None:
            object.__setattr__(self, "areas", tuple(self.areas))

    @property
    def load(self) -> int:
        return len(self.proposals)

    def pairs(self) -> list[Pair]:
        return list(combinations(self.proposals, 2))


@dataclass(frozen=True)
class Assignment:
    instance: Instance
    referees: tuple[Referee, ...]
    method: str
    declared_capacity: int

    def __post_init__(self):
        if self.method not in METHODS:
            raise InvalidAssignmentError(f"unknown method tag {self.method!r}")
        object.__setattr__(self, "referees", tuple(self.referees))
        n = self.instance.n
        for r in self.referees:
            for p in r.proposals:
                if not 1 <= p <= n:
                    raise InvalidAssignmentError(
                        f"referee {r.id} holds proposal {p}, outside 1..{n}"
                    )
            if r.load > self.declared_capacity:
                raise InvalidAssignmentError(
                    f"referee {r.id} holds {r.load} proposals, "
                    f"declared capacity is {self.declared_capacity}"
                )

    @property
    def n(self) -> int:
        return self.instance.n

    @property
    def k(self) -> int:
        return self.instance.k

    def __len__(self) -> int:
        return len(self.referees)

    def proposal_sets(self) -> list[tuple[int, ...]]:
        return [r.proposals for r in self.referees]

    def to_dict(self) -> dict:
        refs = []
        for r in self.referees:
            d = {"id": r.id, "proposals": list(r.proposals)}
            if r.areas is not None:
                d["areas"] = list(r.areas)
            refs.append(d)
        return {
            "n": self.n,
            "k": self.k,
            "method": self.method,
            "declared_capacity": self.declared_capacity,
            "referees": refs,
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["id", "proposals"])
        for r in self.referees:
            w.writerow([r.id, ";".join(str(p) for p in r.proposals)])
        return buf.getvalue()

    @classmethod
    def from_dict(cls, d: dict) -> "Assignment":
        try:
            inst = Instance(int(d["n"]), int(d["k"]))
            refs = tuple(
                Referee(int(r["id"]), tuple(r["proposals"]), r.get("areas"))
                for r in d["referees"]
            )
            cap = int(d.get("declared_capacity", max((r.load for r in refs), default=0)))
            return cls(inst, refs, d.get("method", "external"), cap)
        except (KeyError, TypeError) as exc:
            raise InvalidAssignmentError(f"malformed assignment document: {exc}") from exc

    @classmethod
    def from_json(cls, text: str) -> "Assignment":
        return cls.from_dict(json.loads(text))

    @classmethod
    def from_csv(cls, text: str, n: int, k: int, method: str = "external") -> "Assignment":
        rows = list(csv.reader(io.StringIO(text)))
        if rows and rows[0] and rows[0][0].strip().lower() == "id":
            rows = rows[1:]
        refs = []
        for row in rows:
            if not row:
                continue
            props = [int(x) for x in row[1].split(";") if x.strip()] if len(row) > 1 else []
            refs.append(Referee(int(row[0]), tuple(props)))
        cap = max((r.load for r in refs), default=0)
        return cls(Instance(n, k), tuple(refs), method, max(cap, min(k, n)))


def make_assignment(
    n: int,
    k: int,
    blocks: Iterable[Sequence[int]],
    method: str,
    declared_capacity: int | None = None,
    areas: Sequence[Sequence[str]] | None = None,
) -> Assignment:
    """Build an Assignment from plain proposal lists, numbering referees from 1."""
    blocks = [tuple(b) for b in blocks]
    refs = tuple(
        Referee(i + 1, b, None if areas is None else tuple(areas[i]))
        for i, b in enumerate(blocks)
    )
    if declared_capacity is None:
        declared_capacity = max([len(b) for b in blocks] + [min(k, n)])
    return Assignment(Instance(n, k), refs, method, declared_capacity)


@dataclass(frozen=True)
class CoverageReport:
    total_pairs: int
    covered_count: int
    uncovered: tuple[Pair, ...]
    multiplicity: dict[Pair, int] = field(repr=False)
    max_load: int
    referee_count: int
    # ids of referees holding fewer than two proposals
    idle_referees: tuple[int, ...] = ()

    @property
    def complete(self) -> bool:
        return not self.uncovered

    def histogram(self) -> dict[int, int]:
        """times-covered -> number of pairs"""
        return dict(sorted(Counter(self.multiplicity.values()).items()))

    def summary(self) -> str:
        hist = " ".join(f"{t}x:{c}" for t, c in self.histogram().items())
        line = (
            f"complete={str(self.complete).lower()} covered={self.covered_count}/{self.total_pairs} "
            f"referees={self.referee_count} max_load={self.max_load} multiplicity=[{hist}]"
        )
        if self.uncovered:
            shown = ", ".join(f"({i},{j})" for i, j in self.uncovered[:20])
            more = "" if len(self.uncovered) <= 20 else f" ... (+{len(self.uncovered) - 20})"
            line += f"\nuncovered: {shown}{more}"
        if self.idle_referees:
            line += "\nwarning: referees covering no pairs: " + ", ".join(map(str, self.idle_referees))
        return line

    def to_dict(self) -> dict:
        return {
            "complete": self.complete,
            "total_pairs": self.total_pairs,
            "covered_count": self.covered_count,
            "uncovered": [list(p) for p in self.uncovered],
            "multiplicity_histogram": {str(t): c for t, c in self.histogram().items()},
            "max_load": self.max_load,
            "referee_count": self.referee_count,
            "idle_referees": list(self.idle_referees),
        }


def all_pairs(n: int) -> list[Pair]:
    if n < 2:
        raise InvalidInstanceError(f"need at least 2 proposals, got n={n}")
    return list(combinations(range(1, n + 1), 2))


def pairs_of(r: Referee) -> int:
    return comb(len(r.proposals), 2)


def verify(a: Assignment) -> CoverageReport:
    n = a.n
    mult = dict.fromkeys(all_pairs(n), 0)
    for r in a.referees:
        for p in r.proposals:
            if not 1 <= p <= n:
                raise InvalidAssignmentError(f"referee {r.id} holds proposal {p}, outside 1..{n}")
        for pair in combinations(r.proposals, 2):
            mult[pair] += 1
    uncovered = tuple(p for p, c in mult.items() if c == 0)
    return CoverageReport(
        total_pairs=len(mult),
        covered_count=len(mult) - len(uncovered),
        uncovered=uncovered,
        multiplicity=mult,
        max_load=max((r.load for r in a.referees), default=0),
        referee_count=len(a.referees),
        idle_referees=tuple(r.id for r in a.referees if r.load < 2),
    )


def render_grid(a: Assignment) -> str:
    """Referees as rows, proposals as columns; a cell shows ``p<j>`` when held."""
    labels = [f"r{r.id}" for r in a.referees]
    lw = max((len(s) for s in labels), default=1)
    cw = len(f"p{a.n}")
    lines = []
    for label, r in zip(labels, a.referees):
        held = set(r.proposals)
        cells = [(f"p{j}" if j in held else "").ljust(cw) for j in range(1, a.n + 1)]
        lines.append((label.ljust(lw) + "".join("  " + c for c in cells)).rstrip())
    return "\n".join(lines) + "\n"

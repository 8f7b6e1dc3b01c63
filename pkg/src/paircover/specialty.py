"""Assignments for referees with subject specialties."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from importlib import resources
from itertools import combinations

from .constructions import assign_general, assign_half_even
from .core import Assignment, Referee, UnsupportedShapeError


class InvalidProfileError(ValueError):
    pass


@dataclass(frozen=True)
class SpecialtyProfile:
    areas: tuple[str, ...]
    proposal_area: dict[int, str]
    referee_areas: dict[int, tuple[str, ...]]

    def to_dict(self) -> dict:
        return {
            "areas": list(self.areas),
            "proposal_area": {str(p): a for p, a in sorted(self.proposal_area.items())},
            "referee_areas": {str(r): list(a) for r, a in sorted(self.referee_areas.items())},
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, d: dict) -> "SpecialtyProfile":
        try:
            return cls(
                tuple(d["areas"]),
                {int(p): a for p, a in d["proposal_area"].items()},
                {int(r): tuple(a) for r, a in d["referee_areas"].items()},
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidProfileError(f"malformed specialty profile: {exc}") from exc


def _label(a: Assignment, areas_of: list[tuple[str, ...]]) -> Assignment:
    refs = tuple(Referee(r.id, r.proposals, areas) for r, areas in zip(a.referees, areas_of))
    return Assignment(a.instance, refs, a.method, a.declared_capacity)


def assign_two_specialties(n: int) -> tuple[Assignment, SpecialtyProfile]:
    """Six referees over two areas of n/2 proposals; every proposal is seen three times."""
    if n % 4:
        raise UnsupportedShapeError(f"two-area layout needs 4 | n, got n={n}")
    half = n // 2
    base = assign_half_even(n)
    ref_areas = [("S1",), ("S2",)] + [("S1", "S2")] * 4
    profile = SpecialtyProfile(
        ("S1", "S2"),
        {p: ("S1" if p <= half else "S2") for p in range(1, n + 1)},
        {r.id: areas for r, areas in zip(base.referees, ref_areas)},
    )
    return _label(base, ref_areas), profile


def assign_block_specialties(n: int, k: int) -> tuple[Assignment, SpecialtyProfile]:
    """One single-area referee per area of k proposals, four dual-area referees per area pair."""
    base = assign_general(n, k)
    g = n // k
    names = tuple(f"S{i + 1}" for i in range(g))
    ref_areas = [(name,) for name in names]
    for i, j in combinations(range(g), 2):
        ref_areas.extend([(names[i], names[j])] * 4)
    profile = SpecialtyProfile(
        names,
        {p: names[(p - 1) // k] for p in range(1, n + 1)},
        {r.id: areas for r, areas in zip(base.referees, ref_areas)},
    )
    return _label(base, ref_areas), profile


@dataclass(frozen=True)
class Compliance:
    ok: bool
    violations: tuple[tuple[int, int, str], ...]  # (referee id, proposal, proposal's area)

    def __bool__(self) -> bool:
        return self.ok

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["referee", "proposal", "area"])
        w.writerows(self.violations)
        return buf.getvalue()


def check_specialty_compliance(a: Assignment, p: SpecialtyProfile) -> Compliance:
    violations = []
    for r in a.referees:
        allowed = set(p.referee_areas.get(r.id, ()))
        for prop in r.proposals:
            if prop not in p.proposal_area:
                raise InvalidProfileError(f"proposal {prop} has no area in the profile")
            area = p.proposal_area[prop]
            if area not in allowed:
                violations.append((r.id, prop, area))
    return Compliance(not violations, tuple(violations))


def review_counts(a: Assignment) -> dict[int, int]:
    """proposal -> number of referees holding it"""
    counts = dict.fromkeys(range(1, a.n + 1), 0)
    for r in a.referees:
        for prop in r.proposals:
            counts[prop] += 1
    return counts


def example5_fixture() -> tuple[Assignment, SpecialtyProfile]:
    """Twelve proposals in three scrambled areas over fifteen referees."""
    doc = json.loads(resources.files("paircover.data").joinpath("example5.json").read_text())
    return Assignment.from_dict(doc["assignment"]), SpecialtyProfile.from_dict(doc["profile"])

"""Lower bounds on the referee count and the bound tables/curves."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from .core import InvalidInstanceError

RULES = ("eq2", "thm1_half", "thm2_third", "thm3_quarter", "two_never_suffice", "full_capacity")


@dataclass(frozen=True)
class BoundsReport:
    n: int
    k: int
    general: int
    strengthened: int
    rule: str
    note: str = ""

    def summary(self) -> str:
        s = f"general={self.general} strengthened={self.strengthened} rule={self.rule}"
        return s + (f" note={self.note}" if self.note else "")

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "general": self.general,
            "strengthened": self.strengthened,
            "rule": self.rule,
            "note": self.note,
        }


def _check(n: int, k: int) -> int:
    if n < 2:
        raise InvalidInstanceError(f"need at least 2 proposals, got n={n}")
    if k < 2:
        raise InvalidInstanceError(f"referee capacity must be >= 2, got k={k}")
    return min(k, n)


def lower_bound_general(n: int, k: int) -> int:
    """Counting bound: ceil(n(n-1) / k(k-1)), with k clamped to n."""
    k = _check(n, k)
    return -(-n * (n - 1) // (k * (k - 1)))


def lower_bound_strengthened(n: int, k: int) -> BoundsReport:
    k_eff = _check(n, k)
    general = lower_bound_general(n, k)
    if k_eff >= n:
        return BoundsReport(n, k, general, 1, "full_capacity")

    candidates = [(general, "eq2", "")]
    if n >= 4 and n == 2 * k_eff:
        candidates.append((6, "thm1_half", ""))
    elif n >= 5 and n == 2 * k_eff + 1:
        candidates.append((6, "thm1_half", "odd n: assumes mixed ceil/floor(n/2) capacities"))
    if n >= 12 and n == 3 * k_eff:
        candidates.append((11, "thm2_third", ""))
    if n >= 16 and n == 4 * k_eff:
        candidates.append((18, "thm3_quarter", ""))
    if general <= 2:
        candidates.append((3, "two_never_suffice", ""))

    # on ties the more specific rule is reported
    best = candidates[0]
    for c in candidates[1:]:
        if c[0] >= best[0]:
            best = c
    return BoundsReport(n, k, general, best[0], best[1], best[2])


# Printed values as they appear in the published table (None = N/A).
# Each row: (capacity class label, divisor c with k = n/c, {n: (k, m)}).
TABLE1_PRINTED = (
    ("k = n", 1, {2: (2, 1), 4: (4, 1), 8: (8, 1), 16: (16, 1), 32: (32, 1)}),
    ("k = n/2", 2, {2: None, 4: (2, 6), 8: (4, 5), 16: (8, 5), 32: (16, 5)}),
    ("k = n/3", 3, {2: None, 4: None, 8: (3, 15), 16: (6, 11), 32: (12, 10)}),
    ("k = n/4", 4, {2: None, 4: None, 8: (2, 28), 16: (4, 20), 32: (8, 18)}),
)
TABLE1_LIMITS = {1: 1, 2: 5, 3: 10, 4: 17}
TABLE1_COLUMNS = (2, 4, 8, 16, 32)


@dataclass(frozen=True)
class Table1Cell:
    capacity_class: str
    n: int
    k: int
    printed_m: int
    recomputed_m: int

    @property
    def matches(self) -> bool:
        return self.printed_m == self.recomputed_m


def _row_bound(n: int, c: int) -> int:
    # counting bound with the real capacity k = n/c: ceil(c^2 (n-1) / (n-c))
    if c == 1:
        return 1
    if n % c == 0:
        return lower_bound_general(n, n // c)
    return ceil(Fraction(c * c * (n - 1), n - c))


def table1() -> list[Table1Cell]:
    """Golden printed cells alongside the counting bound recomputed for k = n/c."""
    cells = []
    for label, c, row in TABLE1_PRINTED:
        for n in TABLE1_COLUMNS:
            entry = row[n]
            if entry is None:
                continue
            k, m = entry
            cells.append(Table1Cell(label, n, k, m, _row_bound(n, c)))
    return cells


def format_table1() -> str:
    cells = table1()
    head = ["capacity"] + [f"n={n}" for n in TABLE1_COLUMNS] + ["n->inf"]
    rows = [head]
    for label, c, row in TABLE1_PRINTED:
        out = [label]
        for n in TABLE1_COLUMNS:
            if row[n] is None:
                out.append("N/A")
                continue
            cell = next(x for x in cells if x.capacity_class == label and x.n == n)
            mark = "" if cell.matches else f" [recomputed {cell.recomputed_m}]"
            out.append(f"k={cell.k}, m>={cell.printed_m}{mark}")
        out.append(f"m->{TABLE1_LIMITS[c]}")
        rows.append(out)
    return _align(rows)


def table1_csv() -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["capacity_class", "n", "k", "printed_m", "recomputed_m", "matches"])
    for c in table1():
        w.writerow([c.capacity_class, c.n, c.k, c.printed_m, c.recomputed_m, int(c.matches)])
    return buf.getvalue()


TABLE12_N = (10, 20, 30, 40, 50)
TABLE12_K = (5, 10, 15, 20)
# Upper bounds printed for cells no stated construction reaches.
TABLE12_UNREPRODUCED = {(40, 15): 10, (50, 15): 17, (50, 20): 10}


@dataclass(frozen=True)
class Table12Cell:
    n: int
    k: int
    upper: int
    lower: int
    method: str  # construction that produced ``upper``; "unreproduced" for printed-only cells

    @property
    def reproduced(self) -> bool:
        return self.method != "unreproduced"

    def text(self) -> str:
        return f"{self.upper}({self.lower})" + ("" if self.reproduced else "*")


def table12() -> list[Table12Cell]:
    from .constructions import assign_auto

    cells = []
    for n in TABLE12_N:
        for k in TABLE12_K:
            lower = lower_bound_strengthened(n, k).strengthened
            if (n, k) in TABLE12_UNREPRODUCED:
                cells.append(Table12Cell(n, k, TABLE12_UNREPRODUCED[(n, k)], lower, "unreproduced"))
                continue
            a = assign_auto(n, k, allow_greedy=False)
            cells.append(Table12Cell(n, k, len(a), lower, a.method))
    return cells


def format_table12() -> str:
    cells = {(c.n, c.k): c for c in table12()}
    rows = [["n \\ k"] + [str(k) for k in TABLE12_K]]
    for n in TABLE12_N:
        rows.append([str(n)] + [cells[n, k].text() for k in TABLE12_K])
    return _align(rows) + "* printed value; no stated construction reproduces it\n"


def table12_csv() -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "k", "upper", "lower", "method"])
    for c in table12():
        w.writerow([c.n, c.k, c.upper, c.lower, c.method])
    return buf.getvalue()


def bounds_curve(n: int) -> list[tuple[int, float, float]]:
    """(k, n(n-1)/k(k-1), n(2n-k)/k^2) for k = 2..n, without rounding."""
    if n < 2:
        raise InvalidInstanceError(f"need at least 2 proposals, got n={n}")
    return [(k, n * (n - 1) / (k * (k - 1)), n * (2 * n - k) / (k * k)) for k in range(2, n + 1)]


def curve_csv(n: int) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["k", "lb", "ub"])
    for k, lb, ub in bounds_curve(n):
        w.writerow([k, repr(lb), repr(ub)])
    return buf.getvalue()


def worst_ratio_capacity(n: int) -> int:
    """Integer k in 2..n maximising upper/lower on the bounds curve (exact arithmetic)."""
    return max(range(2, n + 1), key=lambda k: (Fraction((2 * n - k) * (k - 1), k * (n - 1)), -k))


def _align(rows: list[list[str]]) -> str:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n" for r in rows)

from fractions import Fraction

import pytest

from paircover.bounds import (
    bounds_curve,
    curve_csv,
    format_table1,
    format_table12,
    lower_bound_general,
    lower_bound_strengthened,
    table1,
    table12,
    worst_ratio_capacity,
)
from paircover.core import InvalidInstanceError


@pytest.mark.parametrize(
    "n,k,expected",
    [(6, 3, 5), (6, 2, 15), (50, 10, 28), (7, 7, 1), (30, 30, 1), (12, 4, 11)],
)
def test_general(n, k, expected):
    assert lower_bound_general(n, k) == expected


def test_general_clamps_k_and_rejects_small_k():
    assert lower_bound_general(5, 9) == 1
    with pytest.raises(InvalidInstanceError):
        lower_bound_general(5, 1)


@pytest.mark.parametrize(
    "n,k,value,rule",
    [
        (16, 8, 6, "thm1_half"),
        (30, 10, 11, "thm2_third"),
        (40, 10, 18, "thm3_quarter"),
        (20, 15, 3, "two_never_suffice"),
        (10, 15, 1, "full_capacity"),
        (4, 2, 6, "thm1_half"),
        (50, 10, 28, "eq2"),
        (9, 4, 6, "thm1_half"),
    ],
)
def test_strengthened(n, k, value, rule):
    rep = lower_bound_strengthened(n, k)
    assert (rep.strengthened, rep.rule) == (value, rule)


def test_odd_half_carries_note():
    assert "mixed" in lower_bound_strengthened(9, 4).note


def test_strengthened_dominates_general():
    for n in range(2, 41):
        for k in range(2, n + 1):
            rep = lower_bound_strengthened(n, k)
            assert rep.strengthened >= rep.general >= 1
            if k >= n:
                assert rep.strengthened == 1


def test_half_capacity_is_six_for_all_even_n():
    for n in range(4, 202, 2):
        rep = lower_bound_strengthened(n, n // 2)
        if rep.general <= 6:
            assert rep.strengthened == 6


def test_two_referees_never_suffice_brute_force():
    # for k < n no two k-subsets cover every pair; check exhaustively on small n
    from itertools import combinations

    from helpers import covers_all_pairs

    for n in range(3, 8):
        for k in range(2, n):
            subsets = list(combinations(range(1, n + 1), k))
            assert not any(covers_all_pairs(n, [a, b]) for a, b in combinations(subsets, 2))
            assert lower_bound_strengthened(n, k).strengthened >= 3


def test_table1_golden():
    cells = {(c.capacity_class, c.n): c for c in table1()}
    assert cells["k = n/2", 4].printed_m == 6
    assert (cells["k = n/4", 32].k, cells["k = n/4", 32].printed_m) == (8, 18)
    assert (cells["k = n/3", 8].k, cells["k = n/3", 8].printed_m) == (3, 15)
    mismatches = [(c.capacity_class, c.n) for c in table1() if not c.matches]
    assert mismatches == [("k = n/3", 8)]
    assert "N/A" in format_table1()


def test_table12_cells():
    cells = {(c.n, c.k): c for c in table12()}
    assert (cells[10, 5].upper, cells[10, 5].lower) == (6, 6)
    assert (cells[50, 5].upper, cells[50, 5].lower) == (190, 123)
    assert (cells[40, 20].upper, cells[40, 20].lower) == (6, 6)
    assert {k for k, c in cells.items() if not c.reproduced} == {(40, 15), (50, 15), (50, 20)}
    assert "10(8)*" in format_table12()


def test_table12_upper_values_match_print():
    printed = {
        (10, 5): 6, (10, 10): 1, (10, 15): 1, (10, 20): 1,
        (20, 5): 20, (20, 10): 6, (20, 15): 3, (20, 20): 1,
        (30, 5): 66, (30, 10): 12, (30, 15): 6, (30, 20): 3,
        (40, 5): 120, (40, 10): 20, (40, 15): 10, (40, 20): 6,
        (50, 5): 190, (50, 10): 45, (50, 15): 17, (50, 20): 10,
    }
    assert {(c.n, c.k): c.upper for c in table12()} == printed


def test_curve_values():
    rows = bounds_curve(50)
    assert rows[0] == (2, 1225.0, 1225.0)
    assert rows[-1][0] == 50 and rows[-1][2] == 1.0
    assert len(rows) == 49
    assert curve_csv(4).splitlines()[0] == "k,lb,ub"


def test_worst_ratio_matches_enumeration():
    for n in (8, 18, 32, 50, 72, 128):
        ratios = {k: Fraction(n * (2 * n - k), k * k) / Fraction(n * (n - 1), k * (k - 1)) for k in range(2, n + 1)}
        assert worst_ratio_capacity(n) == max(ratios, key=ratios.get)
    assert worst_ratio_capacity(50) == 10

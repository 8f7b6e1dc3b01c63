import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from paircover.constructions import assign_general, table9b_fixture
from paircover.core import (
    Assignment,
    Instance,
    InvalidAssignmentError,
    InvalidInstanceError,
    Referee,
    all_pairs,
    make_assignment,
    pairs_of,
    render_grid,
    verify,
)


def test_all_pairs_small():
    assert all_pairs(2) == [(1, 2)]
    assert len(all_pairs(6)) == 15
    assert len(all_pairs(18)) == 153


@pytest.mark.parametrize("n", range(2, 31))
def test_all_pairs_count_and_order(n):
    pairs = all_pairs(n)
    assert len(pairs) == n * (n - 1) // 2
    assert pairs == sorted(set(pairs))
    assert all(i < j for i, j in pairs)


def test_all_pairs_rejects_tiny():
    with pytest.raises(InvalidInstanceError):
        all_pairs(1)


def test_instance_invariants():
    with pytest.raises(InvalidInstanceError):
        Instance(1, 2)
    with pytest.raises(InvalidInstanceError):
        Instance(5, 1)
    assert Instance(4, 9).capacity == 4


def test_pairs_of():
    assert pairs_of(Referee(1, (1, 2))) == 1
    assert pairs_of(Referee(1, (1, 2, 3, 4, 5, 6))) == 15
    for k in range(2, 12):
        assert pairs_of(Referee(1, tuple(range(1, k + 1)))) == k * (k - 1) // 2


def test_referee_sorts_and_rejects_duplicates():
    assert Referee(3, (5, 1, 2)).proposals == (1, 2, 5)
    with pytest.raises(InvalidAssignmentError):
        Referee(1, (1, 1, 2))


def test_verify_table8():
    rep = verify(assign_general(6, 2))
    assert rep.complete
    assert rep.covered_count == 15
    assert set(rep.multiplicity.values()) == {1}


def test_verify_uncovers_removed_referee():
    a = assign_general(6, 2)
    b = Assignment(a.instance, a.referees[:-1], "external", a.declared_capacity)
    rep = verify(b)
    assert rep.uncovered == ((4, 6),)
    assert rep.covered_count == 14
    assert not rep.complete


def test_out_of_range_proposal_raises():
    with pytest.raises(InvalidAssignmentError):
        make_assignment(4, 2, [[1, 5]], "external")
    doc = {"n": 4, "k": 2, "method": "external", "declared_capacity": 2,
           "referees": [{"id": 1, "proposals": [0, 2]}]}
    with pytest.raises(InvalidAssignmentError):
        Assignment.from_dict(doc)


def test_capacity_enforced():
    with pytest.raises(InvalidAssignmentError):
        make_assignment(6, 2, [[1, 2, 3]], "external", declared_capacity=2)


def test_idle_referee_flagged():
    a = make_assignment(3, 2, [[1, 2], [2, 3], [1, 3], [2]], "external")
    rep = verify(a)
    assert rep.complete
    assert rep.idle_referees == (4,)
    assert "warning" in rep.summary()


def test_json_round_trip():
    a = table9b_fixture()
    b = Assignment.from_json(a.to_json())
    assert b == a
    doc = json.loads(a.to_json())
    assert set(doc) == {"n", "k", "method", "declared_capacity", "referees"}


def test_csv_round_trip():
    a = assign_general(6, 2)
    text = a.to_csv()
    assert text.splitlines()[1] == "1,1;2"
    b = Assignment.from_csv(text, 6, 2)
    assert b.proposal_sets() == a.proposal_sets()


def test_grid_rendering_is_stable():
    a = make_assignment(4, 2, [[1, 2], [3, 4]], "external")
    assert render_grid(a) == "r1  p1  p2\nr2          p3  p4\n"


@st.composite
def assignments(draw):
    n = draw(st.integers(2, 9))
    blocks = draw(st.lists(st.lists(st.integers(1, n), min_size=0, max_size=n, unique=True), max_size=8))
    return n, blocks


@settings(max_examples=150, deadline=None)
@given(assignments(), st.randoms(use_true_random=False))
def test_verify_is_order_insensitive(data, rnd):
    n, blocks = data
    a = make_assignment(n, n, blocks, "external", declared_capacity=n)
    shuffled = [rnd.sample(b, len(b)) for b in blocks]
    rnd.shuffle(shuffled)
    b = make_assignment(n, n, shuffled, "external", declared_capacity=n)
    ra, rb = verify(a), verify(b)
    assert ra.uncovered == rb.uncovered
    assert ra.multiplicity == rb.multiplicity
    assert ra.covered_count == rb.covered_count


@settings(max_examples=150, deadline=None)
@given(assignments())
def test_covered_count_bounded_by_pair_sum(data):
    n, blocks = data
    a = make_assignment(n, n, blocks, "external", declared_capacity=n)
    rep = verify(a)
    total = sum(pairs_of(r) for r in a.referees)
    assert rep.covered_count + len(rep.uncovered) == rep.total_pairs
    assert rep.covered_count <= total
    assert (rep.covered_count == total) == all(c <= 1 for c in rep.multiplicity.values())


def test_verify_matches_brute_force():
    from helpers import covers_all_pairs

    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(2, 8)
        blocks = [rng.sample(range(1, n + 1), rng.randint(0, n)) for _ in range(rng.randint(0, 10))]
        a = make_assignment(n, n, blocks, "external", declared_capacity=n)
        assert verify(a).complete == covers_all_pairs(n, blocks)

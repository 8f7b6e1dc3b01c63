import pytest

from helpers import covers_all_pairs, naive_min_cover
from paircover.bounds import lower_bound_strengthened
from paircover.constructions import applicable_method, assign_auto
from paircover.core import verify
from paircover.oracle import max_pairs_partition3, max_pairs_partition5, min_cover_exact


@pytest.mark.parametrize("n,k,m", [(4, 2, 6), (5, 2, 10), (6, 2, 15), (6, 3, 6), (7, 3, 7), (5, 5, 1), (8, 8, 1)])
def test_known_minima(n, k, m):
    res = min_cover_exact(n, k)
    assert res.exhausted and res.minimum == m
    rep = verify(res.witness)
    assert rep.complete and rep.max_load <= k
    assert len(res.witness) == m


@pytest.mark.parametrize("n,k", [(4, 3), (5, 3), (5, 4), (6, 3), (6, 4), (7, 3)])
def test_matches_naive_enumeration(n, k):
    assert min_cover_exact(n, k).minimum == naive_min_cover(n, k, 8)


def test_oracle_respects_lower_bounds_and_constructions():
    for n in range(2, 9):
        for k in range(2, n + 1):
            res = min_cover_exact(n, k)
            assert res.exhausted
            assert res.minimum >= lower_bound_strengthened(n, k).strengthened
            assert covers_all_pairs(n, res.witness.proposal_sets())
            if applicable_method(n, k) is not None:
                a = assign_auto(n, k)
                if a.declared_capacity <= k:
                    assert len(a) >= res.minimum


def test_oracle_deterministic():
    a, b = min_cover_exact(7, 3), min_cover_exact(7, 3)
    assert a.witness == b.witness and a.nodes_explored == b.nodes_explored


def test_referee_limit_returns_best_known():
    res = min_cover_exact(7, 3, referee_limit=6)
    assert not res.exhausted
    assert res.proven_lower == 7
    assert verify(res.witness).complete


def test_node_limit():
    res = min_cover_exact(9, 4, node_limit=50)
    assert not res.exhausted
    assert verify(res.witness).complete
    assert res.minimum >= 8


def test_partition3_examples():
    r = max_pairs_partition3(9)
    assert r.best_value == 27 and r.argmax == (3, 0, 3, 3)
    assert max_pairs_partition3(10).best_value == 33
    assert max_pairs_partition3(1).best_value == 0


def test_partition5_examples():
    r = max_pairs_partition5(10)
    assert r.best_value == 40 and r.argmax == (2, 0, 2, 2, 2, 2)
    assert max_pairs_partition5(11).best_value == 48
    assert max_pairs_partition5(5).best_value == 10


@pytest.mark.parametrize("k", range(1, 31))
def test_partition_invariants(k):
    r3, r5 = max_pairs_partition3(k), max_pairs_partition5(k)
    assert r3.best_value <= k * k // 3 and r3.argmax[1] == 0
    assert r5.best_value <= 2 * k * k // 5 and r5.argmax[1] == 0
    assert sum(r3.argmax) == k and sum(r5.argmax) == k
    assert min(r3.argmax) >= 0 and min(r5.argmax) >= 0

import random
from itertools import combinations

import pytest
from hypothesis import given

from sak.corpus import SEVEN, seven_vertex_signed, seven_vertex_unsigned
from sak.errors import EmptyGraph
from sak.exact import (
    min_offensive_alliance_branching,
    min_offensive_alliance_bruteforce,
    min_offensive_alliance_unsigned,
    small_alliance_check,
)
from sak.graph import SignedGraph, build_graph, is_alliance_mask, mask_of
from sak.reductions import gen_random_signed

from conftest import signed_graphs


def plain_minimum(G):
    for k in range(1, G.n + 1):
        for c in combinations(range(G.n), k):
            if is_alliance_mask(G, mask_of(c)):
                return k, frozenset(c)


def test_seven_vertex_optimum(seven):
    res = min_offensive_alliance_bruteforce(seven)
    assert res.optimum == 4
    assert {SEVEN[v] for v in res.alliance} == {"v1", "v3", "v4", "v5"}


def test_unsigned_seven_vertex_optimum():
    S = min_offensive_alliance_unsigned(seven_vertex_unsigned())
    assert len(S) == 3 and {SEVEN[v] for v in S} == {"v1", "v2", "v3"}


def test_empty_graph_rejected():
    with pytest.raises(EmptyGraph):
        min_offensive_alliance_bruteforce(SignedGraph(0, (), ()))


def test_budget_gives_none(seven):
    assert min_offensive_alliance_bruteforce(seven, budget=3) is None
    assert min_offensive_alliance_branching(seven, budget=3) is None


def test_disconnected_takes_smaller_component():
    G = build_graph(5, [(0, 1, "+"), (1, 2, "+"), (3, 4, "+")])
    assert min_offensive_alliance_bruteforce(G).optimum == 2


@given(signed_graphs())
def test_pruned_matches_plain_enumeration(G):
    res = min_offensive_alliance_bruteforce(G)
    k, first = plain_minimum(G)
    assert res.optimum == k
    assert res.alliance == first
    assert min_offensive_alliance_bruteforce(G, prune=False).alliance == first


@given(signed_graphs(max_n=10))
def test_branching_matches_bruteforce(G):
    assert min_offensive_alliance_branching(G).optimum == min_offensive_alliance_bruteforce(G).optimum


def test_branching_matches_bruteforce_sparse_larger():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(10, 15)
        G = gen_random_signed(n, rng.uniform(0.05, 0.2), rng.uniform(0.05, 0.25), rng.randrange(10**6))
        assert min_offensive_alliance_branching(G).optimum == min_offensive_alliance_bruteforce(G).optimum


def test_parallel_matches_serial():
    G = gen_random_signed(12, 0.3, 0.3, 5)
    a = min_offensive_alliance_bruteforce(G)
    b = min_offensive_alliance_bruteforce(G, workers=2)
    assert (a.optimum, a.alliance) == (b.optimum, b.alliance)


def test_small_check_all_negative_clique():
    G = build_graph(5, [(u, v, "-") for u in range(5) for v in range(u + 1, 5)])
    assert small_alliance_check(G).size1 == 0


def test_small_check_pair():
    # 0 and 1 share a neighbour with one positive edge; each alone leaves it friendly-supported
    G = build_graph(3, [(0, 2, "-"), (1, 2, "-"), (2, 0, "-"), (0, 1, "+")])
    hit = small_alliance_check(G)
    assert hit.size1 is None and hit.size2 == (0, 1)


@given(signed_graphs(max_n=8))
def test_small_check_matches_enumeration(G):
    hit = small_alliance_check(G)
    singles = [v for v in range(G.n) if is_alliance_mask(G, 1 << v)]
    pairs = [p for p in combinations(range(G.n), 2) if is_alliance_mask(G, mask_of(p))]
    assert hit.size1 == (singles[0] if singles else None)
    if not singles:
        assert hit.size2 == (pairs[0] if pairs else None)

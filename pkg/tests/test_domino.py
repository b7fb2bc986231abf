import itertools
import random

import pytest

from sak.corpus import (
    SEVEN,
    random_domino_instance,
    signed_caterpillar,
    signed_cycle,
    signed_path,
)
from sak.domino import (
    INF,
    TYPE1,
    TYPE2,
    TYPE3,
    DominoDecomposition,
    compatible,
    dp_solve,
    dp_tables,
    formative,
    path_decomposition,
    single_bag,
    tree_decomposition_of_tree,
    validate_domino,
    vertex_type,
)
from sak.errors import EdgeUncovered, InvalidDecomposition, NotConnectedTrace, NotCover, NotDomino, NotInBag
from sak.exact import min_offensive_alliance_bruteforce
from sak.graph import attacked, build_graph, is_alliance_mask, iter_bits, mask_of


def path_graph(n, sign):
    return build_graph(n, [(i, i + 1, sign) for i in range(n - 1)])


def test_path_decomposition_valid():
    assert validate_domino(path_graph(4, "+"), path_decomposition(4)) == 1


def test_third_bag_not_domino():
    D = DominoDecomposition({0: (0, 1), 1: (1, 2), 2: (2, 3), 3: (1,)}, ((0, 1), (1, 2), (2, 3)), 0)
    with pytest.raises(NotDomino):
        validate_domino(path_graph(4, "+"), D)


def test_missing_edge():
    G = build_graph(3, [(0, 1, "+"), (1, 2, "+"), (0, 2, "+")])
    D = DominoDecomposition({0: (0, 1), 1: (1, 2)}, ((0, 1),), 0)
    with pytest.raises(EdgeUncovered):
        validate_domino(G, D)


def test_uncovered_vertex_and_broken_trace():
    with pytest.raises(NotCover):
        validate_domino(path_graph(3, "+"), DominoDecomposition({0: (0, 1)}, (), 0))
    G = build_graph(3, [])
    D = DominoDecomposition({0: (0,), 1: (1,), 2: (0, 2)}, ((0, 1), (1, 2)), 0)
    with pytest.raises(NotConnectedTrace):
        validate_domino(G, D)


def test_bad_tree():
    with pytest.raises(InvalidDecomposition):
        DominoDecomposition({0: (0,), 1: (1,)}, (), 0)


def test_vertex_types():
    D = path_decomposition(4)  # bags 0:{0,1} 1:{1,2} 2:{2,3}, root 0
    assert vertex_type(D, 0, 1) == TYPE1
    assert vertex_type(D, 2, 2) == TYPE2
    assert vertex_type(D, 0, 0) == TYPE3
    with pytest.raises(NotInBag):
        vertex_type(D, 0, 3)


def test_negative_p3():
    assert dp_solve(path_graph(3, "-"), path_decomposition(3)).optimum == 1


def test_positive_p4_only_whole():
    assert dp_solve(path_graph(4, "+"), path_decomposition(4)).optimum == 4


def test_seven_vertex_example(seven):
    D = DominoDecomposition({0: (0, 1, 2, 3, 4), 1: (3, 4, 5, 6)}, ((0, 1),), 0)
    assert validate_domino(seven, D) == 4
    res = dp_solve(seven, D)
    assert res.optimum == 4 and res.witness.accepted


def test_compatible_and_formative_predicates():
    D = path_decomposition(4)
    G = path_graph(4, "-")
    # disagreement on shared vertex 1
    assert not compatible(G, D, 0, mask_of([1]), [0])
    # leaf with a single vertex: vertex 3 attacks its only neighbour 2, which lies in the parent bag
    assert compatible(G, D, 2, mask_of([3]), [])
    assert formative(G, D, 2, mask_of([3]), [])


def test_type3_superiority_failure():
    # bag {0,1,2,3}: vertex 0 has one negative neighbour in S and one positive outside
    G = build_graph(4, [(0, 1, "-"), (0, 2, "+"), (1, 3, "+")])
    D = single_bag(4)
    s = mask_of([1, 3])
    assert not attacked(G, 0, s)
    assert not compatible(G, D, 0, s, [])


def test_table_soundness_small():
    rng = random.Random(5)
    for _ in range(15):
        G, D = random_domino_instance(rng, rng.randint(2, 4), rng.randint(3, 9))
        table = dp_tables(G, D)
        for t in D.order:
            Vt = 0
            stack = [t]
            while stack:
                u = stack.pop()
                Vt |= D.bags[u]
                stack.extend(D.children[u])
            X, P = D.bags[t], D.parent_bag(t)
            check = Vt & ~P
            best = {}
            verts = list(iter_bits(Vt))
            for r in range(1, len(verts) + 1):
                for c in itertools.combinations(verts, r):
                    s = mask_of(c)
                    nb = 0
                    for v in c:
                        nb |= G.pos[v] | G.neg[v]
                    if all(attacked(G, v, s) for v in iter_bits(nb & ~s & check)):
                        A = s & X
                        if A:
                            best[A] = min(best.get(A, INF), r)
            for A, cost in table.cost[t].items():
                assert cost == best.get(A, INF)


@pytest.mark.parametrize("family", ["path", "cycle", "caterpillar", "random"])
def test_dp_matches_bruteforce(family):
    rng = random.Random({"path": 1, "cycle": 2, "caterpillar": 3, "random": 4}[family])
    for _ in range(25):
        if family == "path":
            G, D = signed_path(rng.randint(1, 12), rng)
        elif family == "cycle":
            G, D = signed_cycle(rng.randint(3, 12), rng)
        elif family == "caterpillar":
            G, D = signed_caterpillar(rng.randint(1, 5), rng)
        else:
            G, D = random_domino_instance(rng, rng.randint(1, 5), rng.randint(1, 11))
        res = dp_solve(G, D)
        assert res.optimum == min_offensive_alliance_bruteforce(G).optimum
        assert is_alliance_mask(G, mask_of(res.alliance))
        assert dp_solve(G, D, naive=True).optimum == res.optimum


def test_dp_on_trees():
    rng = random.Random(8)
    for _ in range(20):
        n = rng.randint(1, 12)
        edges = []
        kids = {0: 0}
        for v in range(1, n):
            p = rng.choice([u for u in range(v) if kids.get(u, 0) < 3])
            kids[p] = kids.get(p, 0) + 1
            edges.append((p, v))
        G = build_graph(n, [(u, v, rng.choice("+-")) for u, v in edges])
        D = tree_decomposition_of_tree(n, edges)
        assert validate_domino(G, D) <= 3
        assert dp_solve(G, D).optimum == min_offensive_alliance_bruteforce(G).optimum


def test_root_fold_never_exceeds_smallest_component():
    rng = random.Random(9)
    for _ in range(20):
        G, D = random_domino_instance(rng, 3, 8)
        table = dp_tables(G, D)
        assert table.empty[D.root] <= min(c.bit_count() for c in G.components())

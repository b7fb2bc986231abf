"""Named instances and seeded instance families used by tests and demos."""
from __future__ import annotations

import itertools
import random

from .domino import (
    DominoDecomposition,
    caterpillar_decomposition,
    cycle_decomposition,
    path_decomposition,
)
from .graph import SignedGraph, UnsignedGraph, build_graph

SEVEN = tuple(f"v{i}" for i in range(1, 8))

# shared underlying edges of the seven-vertex example, 1-based
_SEVEN_EDGES = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 5), (3, 4), (3, 5), (4, 7), (5, 6), (6, 7)]
_SEVEN_NEG = {(1, 2), (2, 3), (4, 7), (5, 6), (6, 7)}


def seven_vertex_unsigned() -> UnsignedGraph:
    return UnsignedGraph.from_edges(7, [(u - 1, v - 1) for u, v in _SEVEN_EDGES], SEVEN)


def seven_vertex_signed(flip=()) -> SignedGraph:
    """Signed version of the seven-vertex example; ``flip`` lists 1-based pairs whose sign is inverted."""
    flip = {tuple(sorted(p)) for p in flip}
    edges = []
    for u, v in _SEVEN_EDGES:
        neg = ((u, v) in _SEVEN_NEG) != ((u, v) in flip)
        edges.append((u - 1, v - 1, "-" if neg else "+"))
    return build_graph(7, edges, SEVEN)


def idx(labels, *names) -> frozenset[int]:
    return frozenset(labels.index(x) for x in names)


# -- cubic graphs ---------------------------------------------------------------
def k4() -> UnsignedGraph:
    return UnsignedGraph.from_edges(4, list(itertools.combinations(range(4), 2)))


def prism() -> UnsignedGraph:
    return UnsignedGraph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def k33() -> UnsignedGraph:
    return UnsignedGraph.from_edges(6, [(a, b) for a in range(3) for b in range(3, 6)])


def cube() -> UnsignedGraph:
    return UnsignedGraph.from_edges(8, [(u, u ^ b) for u in range(8) for b in (1, 2, 4) if u < u ^ b])


def cubic_graphs() -> dict[str, UnsignedGraph]:
    return {"K4": k4(), "prism": prism(), "K33": k33(), "cube": cube()}


# -- small unsigned graphs and hypergraphs up to isomorphism ----------------------------
def _canon_graph(n, edges):
    return min(
        tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in edges)) for p in itertools.permutations(range(n))
    )


def all_unsigned_graphs(max_n: int) -> list[UnsignedGraph]:
    """One representative per isomorphism class, 1 <= n <= max_n."""
    out = []
    for n in range(1, max_n + 1):
        seen = set()
        pairs = list(itertools.combinations(range(n), 2))
        for r in range(len(pairs) + 1):
            for E in itertools.combinations(pairs, r):
                c = _canon_graph(n, E)
                if c not in seen:
                    seen.add(c)
                    out.append(UnsignedGraph.from_edges(n, E))
    return out


def all_hypergraphs(max_n: int, max_m: int):
    """Sets of distinct non-empty hyperedges up to vertex relabelling."""
    from .reductions import Hypergraph

    out = []
    for n in range(1, max_n + 1):
        subsets = [frozenset(c) for r in range(1, n + 1) for c in itertools.combinations(range(n), r)]
        seen = set()
        for m in range(max_m + 1):
            for E in itertools.combinations(subsets, m):
                c = min(tuple(sorted(tuple(sorted(p[v] for v in e)) for e in E)) for p in itertools.permutations(range(n)))
                if c not in seen:
                    seen.add(c)
                    out.append(Hypergraph(n, E))
    return out


# -- signed families with domino decompositions ----------------------------------------------
def _signs(rng: random.Random, edges, p_neg: float):
    return [(u, v, "-" if rng.random() < p_neg else "+") for u, v in edges]


def signed_path(n: int, rng: random.Random, p_neg: float = 0.5):
    G = build_graph(n, _signs(rng, [(i, i + 1) for i in range(n - 1)], p_neg))
    return G, path_decomposition(n)


def signed_cycle(n: int, rng: random.Random, p_neg: float = 0.5):
    edges = [(i, (i + 1) % n) for i in range(n)] if n >= 3 else [(i, i + 1) for i in range(n - 1)]
    return build_graph(n, _signs(rng, edges, p_neg)), cycle_decomposition(n)


def signed_caterpillar(spine_len: int, rng: random.Random, p_neg: float = 0.5, max_legs: int = 2):
    """Spine 0..s-1 with up to max_legs legs per spine vertex (one on the last, keeping width <= 4)."""
    spine = list(range(spine_len))
    legs: dict[int, list[int]] = {}
    nxt = spine_len
    edges = [(i, i + 1) for i in range(spine_len - 1)]
    for s in spine:
        cap = 1 if s == spine[-1] else max_legs
        for _ in range(rng.randint(0, cap)):
            legs.setdefault(s, []).append(nxt)
            edges.append((s, nxt))
            nxt += 1
    return build_graph(nxt, _signs(rng, edges, p_neg)), caterpillar_decomposition(spine, legs)


def random_domino_instance(rng: random.Random, nodes: int, n: int, p_edge: float = 0.6, p_neg: float = 0.5):
    """Random tree of bags, vertices placed on nodes or tree edges, graph edges only inside bags."""
    tedges = tuple((rng.randrange(i), i) for i in range(1, nodes))
    bags = {t: set() for t in range(nodes)}
    for v in range(n):
        if tedges and rng.random() < 0.4:
            a, b = rng.choice(tedges)
            bags[a].add(v)
            bags[b].add(v)
        else:
            bags[rng.randrange(nodes)].add(v)
    pairs = set()
    for bag in bags.values():
        for u, v in itertools.combinations(sorted(bag), 2):
            if rng.random() < p_edge:
                pairs.add((u, v))
    G = build_graph(n, _signs(rng, sorted(pairs), p_neg))
    return G, DominoDecomposition({t: sorted(b) for t, b in bags.items()}, tedges, rng.randrange(nodes))

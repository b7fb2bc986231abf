"""Hardness reductions onto signed offensive alliance, plus random instance factories.

Each reduction returns a :class:`ReductionInstance` carrying the target
graph, its budget, the named gadget groups and a function that maps a
source solution to the planted target alliance. Gadget vertices get
deterministic labels so the output files are stable:

* ``v@1``, ``v@2``: the two helpers attached to source vertex ``v``
* ``v@s1``, ``v@s2``: the negative pair of the vertex cover gadget
* ``v@p:i``: connector vertices; ``v@M:i:j`` block members
* ``v@c:i`` / ``c:i``: private / shared positive chains
* ``w``, ``p``, ``q``, ``e3@ve``, ``e3@M:j``: hitting set gadgets

All positive-only blocks are larger than the budget, so a small alliance
can neither enter them nor attack across them.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from .errors import BadProbabilities, DegreeTooHigh, EmptyHyperedge, GraphError
from .graph import SignedGraph, UnsignedGraph, build_graph

PER_VERTEX = "per_vertex_gadget"
SHARED = "shared_gadget"


@dataclass(frozen=True)
class Hypergraph:
    """Hypergraph on vertices ``0..n-1``; default labels are ``1..n``."""

    n: int
    edges: tuple[frozenset[int], ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i + 1) for i in range(self.n)))
        object.__setattr__(self, "edges", tuple(frozenset(e) for e in self.edges))
        for e in self.edges:
            if any(not 0 <= v < self.n for v in e):
                raise GraphError(f"hyperedge {sorted(e)} leaves the vertex range")

    def is_hitting_set(self, S) -> bool:
        S = set(S)
        return all(e & S for e in self.edges)


def min_hitting_set(H: Hypergraph) -> frozenset[int] | None:
    """Smallest hitting set by enumeration, or None if some hyperedge is empty."""
    from itertools import combinations

    if any(not e for e in H.edges):
        return None
    for k in range(H.n + 1):
        for combo in combinations(range(H.n), k):
            if H.is_hitting_set(combo):
                return frozenset(combo)
    return None


def min_vertex_cover(G0: UnsignedGraph) -> frozenset[int]:
    from itertools import combinations

    edges = G0.edges()
    for k in range(G0.n + 1):
        for combo in combinations(range(G0.n), k):
            c = set(combo)
            if all(u in c or v in c for u, v in edges):
                return frozenset(combo)
    raise AssertionError("unreachable")


@dataclass
class ReductionInstance:
    graph: SignedGraph
    budget: int
    source: str
    k: int
    groups: dict[str, tuple[int, ...]]
    planted: Callable = field(repr=False)

    def witness(self, solution) -> frozenset[int]:
        """Target alliance built from a source solution (source vertex indices)."""
        return frozenset(self.planted(frozenset(solution)))

    def witness_labels(self, solution) -> list[str]:
        return [self.graph.labels[v] for v in sorted(self.witness(solution))]

    def group_of(self, v: int) -> str:
        for name, members in self.groups.items():
            if v in members:
                return name
        return "source"


class _Builder:
    def __init__(self):
        self.labels: list[str] = []
        self.index: dict[str, int] = {}
        self.edges: list[tuple[int, int, str]] = []
        self.groups: dict[str, list[int]] = {}

    def add(self, label: str, group: str | None = None) -> int:
        i = len(self.labels)
        self.labels.append(label)
        self.index[label] = i
        if group is not None:
            self.groups.setdefault(group, []).append(i)
        return i

    def edge(self, a: str, b: str, sign: str):
        self.edges.append((self.index[a], self.index[b], sign))

    def graph(self) -> SignedGraph:
        return build_graph(len(self.labels), self.edges, self.labels)

    def frozen_groups(self) -> dict[str, tuple[int, ...]]:
        return {k: tuple(v) for k, v in self.groups.items()}


# -- unsigned offensive alliance ----------------------------------------------------------
def reduce_unsigned_oa(G0: UnsignedGraph, k: int) -> ReductionInstance:
    """Signed instance with budget 3k that mirrors ``unsigned alliance of size <= k``.

    Per vertex v with need d(v) = ceil((deg v + 1) / 2) the gadget adds
    helpers v@1, v@2 and, for i < d(v), a connector v@p:i (positive to v,
    negative to both helpers) feeding a positive block of 3k + 1 vertices.
    Source edges become negative. The planted alliance is S plus the
    helpers of S.

    A vertex of degree at most one has need 1 and gets no connectors, which
    leaves its helpers isolated; each isolated helper is then a trivial
    alliance of size 1.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    b = _Builder()
    L = G0.labels
    for v in range(G0.n):
        b.add(L[v])
    block = 3 * k + 1
    for v in range(G0.n):
        x = L[v]
        need = (G0.deg(v) + 2) // 2
        b.add(f"{x}@1", "v_1")
        b.add(f"{x}@2", "v_2")
        for i in range(1, need):
            b.add(f"{x}@p:{i}", "v'_i")
            for j in range(1, block + 1):
                b.add(f"{x}@M:{i}:{j}", "M_v")
    for v in range(G0.n):
        x = L[v]
        for i in range(1, (G0.deg(v) + 2) // 2):
            c = f"{x}@p:{i}"
            b.edge(x, c, "+")
            b.edge(c, f"{x}@M:{i}:1", "+")
            for j in range(3, block + 1):
                b.edge(f"{x}@M:{i}:1", f"{x}@M:{i}:{j}", "+")
                b.edge(f"{x}@M:{i}:2", f"{x}@M:{i}:{j}", "+")
            b.edge(f"{x}@1", c, "-")
            b.edge(f"{x}@2", c, "-")
    for u, v in G0.edges():
        b.edge(L[u], L[v], "-")
    G = b.graph()
    idx = b.index

    def planted(S):
        return {v for v in S} | {idx[f"{L[v]}@{h}"] for v in S for h in (1, 2)}

    return ReductionInstance(G, 3 * k, "unsigned_oa", k, b.frozen_groups(), planted)


# -- vertex cover ---------------------------------------------------------------
def reduce_vertex_cover(G0: UnsignedGraph, k: int, variant: str = PER_VERTEX, budget: int | None = None) -> ReductionInstance:
    """Signed instance for ``vertex cover of size <= k`` on a graph of maximum degree 3.

    Each source vertex v gets positive helpers v@1, v@2, both negative to a
    pair v@s1, v@s2, and the helpers hang on a positive chain of 3k + 1
    vertices (private per vertex, or one shared chain ``c:i``). Source edges
    become negative.

    The planted alliance for a cover S is S plus the negative pairs of S,
    of size 3|S|; the default budget is 3k. Uncovered-side source vertices
    need all three source neighbours in S, so the correspondence relies on
    the source being cubic and connected.
    """
    if G0.max_degree() > 3:
        raise DegreeTooHigh(f"maximum degree {G0.max_degree()} exceeds 3")
    if variant not in (PER_VERTEX, SHARED):
        raise ValueError(f"unknown variant {variant!r}")
    b = _Builder()
    L = G0.labels
    for v in range(G0.n):
        b.add(L[v])
    chain = 3 * k + 1
    if variant == SHARED:
        for i in range(1, chain + 1):
            b.add(f"c:{i}", "chain")
    for v in range(G0.n):
        x = L[v]
        for h in ("s1", "s2"):
            b.add(f"{x}@{h}", "v^" + h[1])
        b.add(f"{x}@1", "v_1")
        b.add(f"{x}@2", "v_2")
        if variant == PER_VERTEX:
            for i in range(1, chain + 1):
                b.add(f"{x}@c:{i}", "chain")
    for v in range(G0.n):
        x = L[v]
        ch = (lambda i: f"c:{i}") if variant == SHARED else (lambda i, x=x: f"{x}@c:{i}")
        b.edge(x, f"{x}@1", "+")
        b.edge(x, f"{x}@2", "+")
        b.edge(f"{x}@1", ch(1), "+")
        b.edge(f"{x}@2", ch(chain), "+")
        if variant == PER_VERTEX:
            for i in range(1, chain):
                b.edge(ch(i), ch(i + 1), "+")
        for h in ("1", "2"):
            for s in ("s1", "s2"):
                b.edge(f"{x}@{h}", f"{x}@{s}", "-")
    if variant == SHARED:
        for i in range(1, chain):
            b.edge(f"c:{i}", f"c:{i + 1}", "+")
    for u, v in G0.edges():
        b.edge(L[u], L[v], "-")
    G = b.graph()
    idx = b.index

    def planted(S):
        return set(S) | {idx[f"{L[v]}@{s}"] for v in S for s in ("s1", "s2")}

    return ReductionInstance(
        G, 3 * k if budget is None else budget, f"vertex_cover/{variant}", k, b.frozen_groups(), planted
    )


# -- hitting set ---------------------------------------------------------------
def reduce_hitting_set(H: Hypergraph, k: int) -> ReductionInstance:
    """Signed instance with budget k + 3 that mirrors ``hitting set of size <= k``.

    A hub w is negative to every source vertex and every hyperedge vertex,
    positive to every helper v@1; p and q are negative to every helper.
    Hyperedge vertex e@ve is negative to its members. Helpers and hyperedge
    vertices each carry a positive block of 5k vertices. The planted
    alliance is the hitting set plus w, p, q.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    for j, e in enumerate(H.edges):
        if not e:
            raise EmptyHyperedge(f"hyperedge e{j + 1} is empty")
    b = _Builder()
    L = H.labels
    for v in range(H.n):
        b.add(L[v])
    for name in ("w", "p", "q"):
        b.add(name, name)
    block = 5 * k
    for v in range(H.n):
        b.add(f"{L[v]}@1", "v_1")
        for j in range(1, block + 1):
            b.add(f"{L[v]}@M:{j}", "M_v")
    for e in range(len(H.edges)):
        b.add(f"e{e + 1}@ve", "v_e")
        for j in range(1, block + 1):
            b.add(f"e{e + 1}@M:{j}", "M_e")

    def blk(head: str, prefix: str):
        b.edge(head, f"{prefix}@M:1", "+")
        for j in range(3, block + 1):
            b.edge(f"{prefix}@M:1", f"{prefix}@M:{j}", "+")
            b.edge(f"{prefix}@M:2", f"{prefix}@M:{j}", "+")

    for v in range(H.n):
        x = L[v]
        b.edge("w", f"{x}@1", "+")
        blk(f"{x}@1", x)
        b.edge("w", x, "-")
        b.edge("p", f"{x}@1", "-")
        b.edge("q", f"{x}@1", "-")
    for j, e in enumerate(H.edges):
        ve = f"e{j + 1}@ve"
        blk(ve, f"e{j + 1}")
        b.edge("w", ve, "-")
        for v in sorted(e):
            b.edge(L[v], ve, "-")
    G = b.graph()
    idx = b.index

    def planted(S):
        return set(S) | {idx["w"], idx["p"], idx["q"]}

    return ReductionInstance(G, k + 3, "hitting_set", k, b.frozen_groups(), planted)


# -- generators ----------------------------------------------------------------
def gen_complete(parts, mode: str = "balanced") -> SignedGraph:
    """Complete graph over consecutive parts: intra-part edges one sign, cross edges the other."""
    sizes = [int(p) for p in parts]
    if not sizes or any(p < 1 for p in sizes):
        raise ValueError("parts must be positive sizes")
    if mode in ("balanced", "bal"):
        inner, cross = "+", "-"
    elif mode in ("anti_balanced", "anti"):
        inner, cross = "-", "+"
    else:
        raise ValueError(f"unknown mode {mode!r}")
    where = [i for i, p in enumerate(sizes) for _ in range(p)]
    n = len(where)
    edges = [(u, v, inner if where[u] == where[v] else cross) for u in range(n) for v in range(u + 1, n)]
    return build_graph(n, edges)


def gen_random_signed(n: int, p_pos: float, p_neg: float, seed: int | None = None) -> SignedGraph:
    """Each pair is positive with probability p_pos, negative with p_neg, else absent."""
    if p_pos < 0 or p_neg < 0 or p_pos + p_neg > 1:
        raise BadProbabilities(f"need p_pos, p_neg >= 0 and p_pos + p_neg <= 1, got {p_pos}, {p_neg}")
    rng = random.Random(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            r = rng.random()
            if r < p_pos:
                edges.append((u, v, "+"))
            elif r < p_pos + p_neg:
                edges.append((u, v, "-"))
    return build_graph(n, edges)


def gen_hypergraph(n: int, m: int, max_edge: int, seed: int | None = None) -> Hypergraph:
    """m non-empty hyperedges of size at most max_edge over n vertices."""
    if n < 1 or max_edge < 1:
        raise ValueError("need n >= 1 and max_edge >= 1")
    rng = random.Random(seed)
    edges = []
    for _ in range(m):
        size = rng.randint(1, min(max_edge, n))
        edges.append(frozenset(rng.sample(range(n), size)))
    return Hypergraph(n, tuple(edges))


def gen_unsigned(n: int, p: float, seed: int | None = None) -> UnsignedGraph:
    rng = random.Random(seed)
    return UnsignedGraph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def unsigned_graph_of(G: SignedGraph) -> UnsignedGraph:
    return UnsignedGraph(G.n, tuple(G.pos[v] | G.neg[v] for v in range(G.n)), G.labels)

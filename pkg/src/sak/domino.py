"""Minimum offensive alliance by dynamic programming over a domino tree decomposition.

In a domino decomposition every vertex lies in at most two bags, and two
bags sharing a vertex are tree-adjacent. A vertex of bag X_t is then of
exactly one type: shared with a child (type 1), shared with the parent
(type 2), or private to X_t (type 3). A private vertex has all its
neighbours inside X_t, and a vertex shared with child t' has all of them in
X_t and X_t', so attack checks are local.

Tables, per node t:

* ``c[t, A]`` for non-empty A inside X_t: the smallest S inside V_t (the
  vertices of the subtree) with S and X_t meeting exactly in A, such that
  every boundary vertex of S outside the parent bag is successfully
  attacked. Global degrees are used, which is exact because those
  vertices have no neighbours outside V_t.
* ``c[t, empty]``: the smallest full alliance inside V_t that avoids the
  parent bag.

Witnesses are rebuilt from stored argmin choices.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .errors import (
    EdgeUncovered,
    EmptyGraph,
    InvalidDecomposition,
    NotConnectedTrace,
    NotCover,
    NotDomino,
    NotInBag,
)
from .exact import SolveResult
from .graph import SignedGraph, is_offensive_alliance, iter_bits, mask_of

INF = math.inf
TYPE1, TYPE2, TYPE3 = "Type1", "Type2", "Type3"


@dataclass(frozen=True)
class DominoDecomposition:
    """Rooted tree of bags. ``bags`` maps node id to a vertex bitmask."""

    bags: dict
    edges: tuple[tuple[int, int], ...]
    root: int
    parent: dict = field(init=False, compare=False)
    children: dict = field(init=False, compare=False)
    order: tuple = field(init=False, compare=False)

    def __post_init__(self):
        bags = {t: (b if isinstance(b, int) else mask_of(b)) for t, b in self.bags.items()}
        object.__setattr__(self, "bags", bags)
        if self.root not in bags:
            raise InvalidDecomposition(f"root {self.root} has no bag")
        adj = {t: [] for t in bags}
        for a, b in self.edges:
            if a not in adj or b not in adj or a == b:
                raise InvalidDecomposition(f"bad tree edge {a}-{b}")
            adj[a].append(b)
            adj[b].append(a)
        if len(self.edges) != len(bags) - 1:
            raise InvalidDecomposition("decomposition tree needs exactly #nodes-1 edges")
        parent, children, order = {self.root: None}, {t: [] for t in bags}, [self.root]
        for t in order:
            for u in sorted(adj[t]):
                if u not in parent:
                    parent[u] = t
                    children[t].append(u)
                    order.append(u)
        if len(order) != len(bags):
            raise InvalidDecomposition("decomposition tree is not connected")
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "children", children)
        object.__setattr__(self, "order", tuple(order))

    @property
    def width(self) -> int:
        return max(b.bit_count() for b in self.bags.values()) - 1

    def parent_bag(self, t: int) -> int:
        p = self.parent[t]
        return 0 if p is None else self.bags[p]


def validate_domino(G: SignedGraph, D: DominoDecomposition) -> int:
    """Check tree decomposition and domino properties; return the width."""
    covered = 0
    homes: dict[int, list[int]] = {v: [] for v in range(G.n)}
    for t, b in D.bags.items():
        if b >> G.n:
            raise NotCover(f"bag {t} names a vertex outside the graph")
        covered |= b
        for v in iter_bits(b):
            homes[v].append(t)
    if covered != G.full:
        missing = next(iter_bits(G.full & ~covered))
        raise NotCover(f"vertex {missing} is in no bag")
    for u in range(G.n):
        for v in iter_bits(G.nbrs(u) & ~((1 << (u + 1)) - 1)):
            if not any((b >> u) & (b >> v) & 1 for b in D.bags.values()):
                raise EdgeUncovered(f"edge {u}-{v} lies in no bag")
    for v, ts in homes.items():
        if len(ts) > 2:
            raise NotDomino(f"vertex {v} is in {len(ts)} bags")
        if len(ts) == 2:
            a, b = ts
            if D.parent[a] != b and D.parent[b] != a:
                raise NotConnectedTrace(f"bags {a} and {b} holding vertex {v} are not adjacent")
    return D.width


def vertex_type(D: DominoDecomposition, t: int, v: int) -> str:
    if not D.bags[t] >> v & 1:
        raise NotInBag(f"vertex {v} not in bag {t}")
    if any(D.bags[c] >> v & 1 for c in D.children[t]):
        return TYPE1
    if D.parent_bag(t) >> v & 1:
        return TYPE2
    return TYPE3


def _attacked_all(G: SignedGraph, check: int, s: int) -> bool:
    """Every vertex of ``check`` outside s with a neighbour in s is attacked by s."""
    pos, neg, dpos = G.pos, G.neg, G._deg_pos
    for v in iter_bits(check & ~s):
        if not (pos[v] | neg[v]) & s:
            continue
        nin = (neg[v] & s).bit_count()
        pin = (pos[v] & s).bit_count()
        if nin < pin or nin < dpos[v] - pin + 1:
            return False
    return True


def _agree(X: int, Y: int, A: int, B: int) -> bool:
    shared = X & Y
    return (A & shared) == (B & shared)


def _child_check(G, D, t, A, c, Ac) -> bool:
    # agreement with child c plus the attack test on the vertices shared with c
    X, Y = D.bags[t], D.bags[c]
    if not _agree(X, Y, A, Ac):
        return False
    return _attacked_all(G, X & Y, A | Ac)


def _own_check(G, D, t, A, exempt_parent: bool) -> bool:
    X = D.bags[t]
    shared_down = 0
    for c in D.children[t]:
        shared_down |= D.bags[c]
    private = X & ~shared_down & ~D.parent_bag(t)
    check = private if exempt_parent else private | (X & D.parent_bag(t))
    return _attacked_all(G, check, A)


def compatible(G: SignedGraph, D: DominoDecomposition, t: int, A: int, child_sets) -> bool:
    """A agrees with every child selection and attacks its type 1 and type 3 boundary vertices."""
    for c, Ac in zip(D.children[t], child_sets):
        if not _child_check(G, D, t, A, c, Ac):
            return False
    return _own_check(G, D, t, A, exempt_parent=True)


def formative(G: SignedGraph, D: DominoDecomposition, t: int, B: int, child_sets) -> bool:
    """Like :func:`compatible`, but boundary vertices in the parent bag are checked too."""
    if not B or B & D.parent_bag(t):
        return False
    for c, Ac in zip(D.children[t], child_sets):
        if not _child_check(G, D, t, B, c, Ac):
            return False
    return _own_check(G, D, t, B, exempt_parent=False)


def _subsets(mask: int):
    """Non-empty submasks of mask."""
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


@dataclass
class DpTable:
    cost: dict  # node -> {A: cost}, A non-empty
    choice: dict  # node -> {A: tuple of child selections (0 = child contributes nothing)}
    empty: dict  # node -> cost of c[t, empty]
    empty_choice: dict  # node -> ("child", c) | ("here", B, child selections) | None


def _best_children(G, D, t, A, table, naive: bool):
    """Minimum of sum(c[child, Ac] - |A & Ac|) over admissible child selections."""
    kids = D.children[t]
    per_child = []
    for c in kids:
        opts = []
        shared = D.bags[t] & D.bags[c]
        if not A & shared and _attacked_all(G, shared, A):
            opts.append((0, 0))
        for Ac, cost in table.cost[c].items():
            if cost == INF:
                continue
            if _child_check(G, D, t, A, c, Ac):
                opts.append((cost - (A & Ac).bit_count(), Ac))
        if not opts:
            return INF, None
        per_child.append(opts)
    if naive:
        best, arg = INF, None
        for combo in itertools.product(*per_child):
            total = sum(x for x, _ in combo)
            if total < best:
                best, arg = total, tuple(a for _, a in combo)
        return best, arg
    # the checks factor per child, so independent minima give the same optimum
    picks = [min(opts, key=lambda o: (o[0], o[1])) for opts in per_child]
    return sum(x for x, _ in picks), tuple(a for _, a in picks)


def dp_tables(G: SignedGraph, D: DominoDecomposition, naive: bool = False) -> DpTable:
    validate_domino(G, D)
    table = DpTable({}, {}, {}, {})
    for t in reversed(D.order):
        X = D.bags[t]
        for v in iter_bits(X):
            if vertex_type(D, t, v) == TYPE3:
                assert G.nbrs(v) & ~X == 0, f"private vertex {v} has a neighbour outside bag {t}"
        costs, choices = {}, {}
        for A in _subsets(X):
            if not _own_check(G, D, t, A, exempt_parent=True):
                costs[A] = INF
                continue
            extra, arg = _best_children(G, D, t, A, table, naive)
            costs[A] = A.bit_count() + extra if extra != INF else INF
            choices[A] = arg
        table.cost[t], table.choice[t] = costs, choices
        best, how = INF, None
        for c in D.children[t]:
            if table.empty[c] < best:
                best, how = table.empty[c], ("child", c)
        for B in _subsets(X & ~D.parent_bag(t)):
            if not _own_check(G, D, t, B, exempt_parent=False):
                continue
            extra, arg = _best_children(G, D, t, B, table, naive)
            if extra == INF:
                continue
            val = B.bit_count() + extra
            if val < best:
                best, how = val, ("here", B, arg)
        table.empty[t], table.empty_choice[t] = best, how
    return table


def _collect(D, table, t, A) -> int:
    s = A
    for c, Ac in zip(D.children[t], table.choice[t][A]):
        if Ac:
            s |= _collect(D, table, c, Ac)
    return s


def reconstruct(D: DominoDecomposition, table: DpTable) -> int:
    t = D.root
    while True:
        how = table.empty_choice[t]
        if how is None:
            raise InvalidDecomposition("no alliance found; decomposition inconsistent with graph")
        if how[0] == "child":
            t = how[1]
            continue
        _, B, arg = how
        s = B
        for c, Ac in zip(D.children[t], arg):
            if Ac:
                s |= _collect(D, table, c, Ac)
        return s


def dp_solve(G: SignedGraph, D: DominoDecomposition, naive: bool = False) -> SolveResult:
    """Exact minimum alliance from the tables; the witness is re-verified."""
    if G.n == 0:
        raise EmptyGraph("graph has no vertices")
    table = dp_tables(G, D, naive)
    s = reconstruct(D, table)
    cert = is_offensive_alliance(G, s)
    assert cert.accepted and s.bit_count() == table.empty[D.root], "DP witness disagrees with table"
    return SolveResult(s.bit_count(), cert, "dp", sum(len(v) for v in table.cost.values()))


# -- canonical decompositions ---------------------------------------------------------
def path_decomposition(n: int) -> DominoDecomposition:
    """Bags {i, i+1} along the path 0-1-...-(n-1)."""
    if n <= 2:
        return DominoDecomposition({0: range(n)}, (), 0)
    bags = {i: (i, i + 1) for i in range(n - 1)}
    return DominoDecomposition(bags, tuple((i, i + 1) for i in range(n - 2)), 0)


def cycle_decomposition(n: int) -> DominoDecomposition:
    """Zig-zag pairs {i, n-1-i}; consecutive pairs share a bag. Width at most 3."""
    pairs = [frozenset({i, n - 1 - i}) for i in range((n + 1) // 2)]
    if len(pairs) <= 1:
        return DominoDecomposition({0: range(n)}, (), 0)
    bags = {i: pairs[i] | pairs[i + 1] for i in range(len(pairs) - 1)}
    return DominoDecomposition(bags, tuple((i, i + 1) for i in range(len(bags) - 1)), 0)


def tree_decomposition_of_tree(n: int, edges, root: int = 0) -> DominoDecomposition:
    """Bag {v} plus the children of v for every non-leaf v of a tree (a lone root keeps {root})."""
    adj = {v: [] for v in range(n)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    parent, order = {root: None}, [root]
    for v in order:
        for u in sorted(adj[v]):
            if u not in parent:
                parent[u] = v
                order.append(u)
    if len(order) != n:
        raise InvalidDecomposition("input is not a connected tree")
    bags = {}
    for v in order:
        kids = [u for u in adj[v] if parent.get(u) == v]
        if kids or v == root:
            bags[v] = (v, *kids)
    tree_edges = tuple((parent[v], v) for v in order if v in bags and parent[v] is not None)
    return DominoDecomposition(bags, tree_edges, root)


def caterpillar_decomposition(spine, legs: dict) -> DominoDecomposition:
    """Bags {s_i, s_i+1} plus the legs of s_i; the last bag also takes the legs of the last spine vertex."""
    spine = list(spine)
    if len(spine) == 1:
        return DominoDecomposition({0: (spine[0], *legs.get(spine[0], ()))}, (), 0)
    bags = {}
    for i in range(len(spine) - 1):
        bag = {spine[i], spine[i + 1], *legs.get(spine[i], ())}
        if i == len(spine) - 2:
            bag |= set(legs.get(spine[i + 1], ()))
        bags[i] = bag
    return DominoDecomposition(bags, tuple((i, i + 1) for i in range(len(bags) - 1)), 0)


def single_bag(n: int) -> DominoDecomposition:
    return DominoDecomposition({0: range(n)}, (), 0)

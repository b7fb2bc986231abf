"""Exact minimum offensive alliance by enumeration, plus small-size fast paths.

:func:`min_offensive_alliance_bruteforce` is the reference oracle every other
solver in the package is checked against.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .errors import EmptyGraph
from .graph import (
    AllianceCertificate,
    SignedGraph,
    UnsignedGraph,
    attackable,
    existence_precondition,
    is_alliance_mask,
    is_offensive_alliance,
    is_unsigned_alliance_mask,
    iter_bits,
    mask_of,
    size_lower_bound,
)


@dataclass(frozen=True)
class SolveResult:
    optimum: int
    witness: AllianceCertificate
    strategy: str
    explored: int = 0

    @property
    def alliance(self) -> frozenset[int]:
        return self.witness.alliance


def _certify(G: SignedGraph, s: int, strategy: str, explored: int) -> SolveResult:
    cert = is_offensive_alliance(G, s)
    assert cert.accepted, "solver produced a set that fails verification"
    return SolveResult(s.bit_count(), cert, strategy, explored)


def _non_attackable(G: SignedGraph) -> int:
    return mask_of(v for v in range(G.n) if not attackable(G, v))


def _scan(G: SignedGraph, candidates, blocked: int, prune: bool):
    """Return (first accepted mask or 0, number examined)."""
    pos, neg = G.pos, G.neg
    explored = 0
    for combo in candidates:
        explored += 1
        s = 0
        nb = 0
        for v in combo:
            s |= 1 << v
            nb |= pos[v] | neg[v]
        nb &= ~s
        if prune and nb & blocked:
            continue
        if is_alliance_mask(G, s):
            return s, explored
    return 0, explored


def _scan_prefix(args):
    G, head, tail, k, blocked, prune = args
    cands = ((head,) + rest for rest in combinations(tail, k - 1))
    return _scan(G, cands, blocked, prune)


def _workers(workers: int | None) -> int:
    if workers is not None:
        return max(1, workers)
    env = os.environ.get("SAK_THREADS")
    return max(1, int(env)) if env else 1


def _search_size(G, verts, k, blocked, prune, pool):
    if pool is None or k < 2:
        return _scan(G, combinations(verts, k), blocked, prune)
    jobs = [(G, verts[i], verts[i + 1:], k, blocked, prune) for i in range(len(verts) - k + 1)]
    explored = 0
    found = 0
    # results come back in prefix order, so the first hit is the lexicographic minimum
    for s, e in pool.map(_scan_prefix, jobs):
        explored += e
        if s and not found:
            found = s
    return found, explored


def min_offensive_alliance_bruteforce(
    G: SignedGraph,
    budget: int | None = None,
    prune: bool = True,
    workers: int | None = None,
) -> SolveResult | None:
    """Smallest non-empty offensive alliance by increasing-size enumeration.

    Each connected component is searched separately; the whole component is
    always a feasible fallback. Subsets of equal size are visited in
    lexicographic order of their sorted index tuples, so the returned witness
    is the lexicographically first minimum alliance.

    With ``prune`` the search starts at the component's minimum positive
    degree plus one, skips components whose degree profile rules out any
    non-trivial alliance, and discards candidates whose boundary contains a
    vertex that can never be attacked.

    Returns ``None`` when ``budget`` is given and no alliance of at most that
    size exists.
    """
    if G.n == 0:
        raise EmptyGraph("graph has no vertices")
    blocked = _non_attackable(G) if prune else 0
    n_workers = _workers(workers)
    pool = ProcessPoolExecutor(n_workers) if n_workers > 1 else None
    best: tuple[int, tuple[int, ...]] | None = None
    explored = 0
    try:
        for comp in G.components():
            verts = list(iter_bits(comp))
            m = len(verts)
            cap = m if budget is None else min(m, budget)
            if best is not None:
                cap = min(cap, best[0])
            if prune and not existence_precondition(G, comp):
                explored += 1
                if m <= cap:
                    cand = (m, tuple(verts))
                    best = cand if best is None or cand < best else best
                continue
            lo = size_lower_bound(G, comp) if prune else 1
            for k in range(lo, cap + 1):
                s, e = _search_size(G, verts, k, blocked, prune, pool)
                explored += e
                if s:
                    cand = (k, tuple(iter_bits(s)))
                    best = cand if best is None or cand < best else best
                    break
    finally:
        if pool is not None:
            pool.shutdown()
    if best is None:
        return None
    return _certify(G, mask_of(best[1]), "brute", explored)


class SmallAlliances(NamedTuple):
    size1: int | None
    size2: tuple[int, int] | None


def small_alliance_check(G: SignedGraph) -> SmallAlliances:
    """Degree characterisation of alliances of size one and two.

    ``size1`` is the lowest vertex whose neighbours all have positive degree
    zero. ``size2`` is only looked for when no such vertex exists: the
    lexicographically first pair whose private neighbours have positive
    degree zero and whose common neighbours have positive degree at most one.
    """
    zero = mask_of(v for v in range(G.n) if G.deg_pos(v) == 0)
    at_most_one = mask_of(v for v in range(G.n) if G.deg_pos(v) <= 1)
    for v in range(G.n):
        if G.nbrs(v) & ~zero == 0:
            return SmallAlliances(v, None)
    for v in range(G.n):
        for u in range(v + 1, G.n):
            nv = G.nbrs(v) & ~(1 << u)
            nu = G.nbrs(u) & ~(1 << v)
            if (nv ^ nu) & ~zero == 0 and (nv & nu) & ~at_most_one == 0:
                return SmallAlliances(None, (v, u))
    return SmallAlliances(None, None)


def min_offensive_alliance_branching(G: SignedGraph, budget: int | None = None) -> SolveResult | None:
    """Exact minimum alliance by bounded branching on unattacked boundary vertices.

    Any alliance containing the current set S must, for each boundary vertex
    u that S fails to attack, either contain u or contain a further
    neighbour of u. Branching over those options (with earlier options
    excluded from later branches) never loses an optimal alliance, and the
    depth is bounded by the budget rather than by n. Suited to large sparse
    gadget graphs where plain enumeration is hopeless.
    """
    if G.n == 0:
        raise EmptyGraph("graph has no vertices")
    pos, neg, dpos = G.pos, G.neg, G._deg_pos
    n = G.n
    blocked = _non_attackable(G)
    limit = n if budget is None else min(budget, n)
    state = {"best": 0, "size": limit + 1, "nodes": 0}

    def unattacked(s: int, nb: int):
        # returns (vertex, options) for the most constrained failing boundary vertex
        pick = None
        for v in iter_bits(nb):
            nin = (neg[v] & s).bit_count()
            pin = (pos[v] & s).bit_count()
            if nin >= pin and nin > dpos[v] - pin:
                continue
            if blocked >> v & 1:
                return v, True
            opts = ((pos[v] | neg[v]) & ~s).bit_count() + 1
            if pick is None or opts < pick[1]:
                pick = (v, opts)
        return (pick[0], False) if pick else None

    def rec(s: int, nb: int, size: int, forbidden: int):
        state["nodes"] += 1
        hit = unattacked(s, nb)
        if hit is None:
            if size < state["size"]:
                state["size"], state["best"] = size, s
            return
        if size + 1 >= state["size"]:
            return
        u, forced = hit
        options = [u] if forced else [u] + list(iter_bits((pos[u] | neg[u]) & ~s))
        excluded = forbidden
        for x in options:
            if excluded >> x & 1:
                continue
            t = s | 1 << x
            rec(t, (nb | pos[x] | neg[x]) & ~t, size + 1, excluded)
            excluded |= 1 << x

    forbidden = 0
    for v in range(n):
        if 1 > state["size"]:
            break
        rec(1 << v, (pos[v] | neg[v]), 1, forbidden)
        forbidden |= 1 << v
    if state["size"] > limit:
        return None
    return _certify(G, state["best"], "branch", state["nodes"])


def min_offensive_alliance_unsigned(G0: UnsignedGraph, budget: int | None = None) -> frozenset[int] | None:
    """Lexicographically first minimum offensive alliance of an unsigned graph, by enumeration."""
    if G0.n == 0:
        raise EmptyGraph("graph has no vertices")
    cap = G0.n if budget is None else min(budget, G0.n)
    for k in range(1, cap + 1):
        for combo in combinations(range(G0.n), k):
            s = mask_of(combo)
            if is_unsigned_alliance_mask(G0, s):
                return frozenset(combo)
    return None

"""Closed forms for complete signed graphs that are k-balanced or k-anti-balanced."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateSelection, NotAntiBalanced, NotBalanced, SinglePart
from .graph import SignedGraph, iter_bits, mask_of

BALANCED = "balanced"
ANTI_BALANCED = "anti_balanced"
OTHER_COMPLETE = "other_complete"
NOT_COMPLETE = "not_complete"

Parts = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class CompleteClassification:
    """Outcome of :func:`classify_complete`.

    ``parts`` belongs to the primary ``kind``. A graph can be both balanced
    and anti-balanced (all-negative or all-positive complete graphs); the
    secondary partition is kept in ``balanced_parts`` / ``anti_parts``.
    """

    kind: str
    parts: Parts = ()
    balanced_parts: Parts | None = None
    anti_parts: Parts | None = None

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def also_balanced_k(self) -> int | None:
        if self.kind != BALANCED and self.balanced_parts is not None:
            return len(self.balanced_parts)
        return None

    @property
    def also_anti_balanced_k(self) -> int | None:
        if self.kind != ANTI_BALANCED and self.anti_parts is not None:
            return len(self.anti_parts)
        return None

    @property
    def n(self) -> int:
        return sum(len(p) for p in self.parts)


def _sorted_parts(comps: list[int]) -> Parts:
    parts = [tuple(iter_bits(c)) for c in comps]
    parts.sort(key=lambda p: (-len(p), p[0]))
    return tuple(parts)


def _pure_partition(G: SignedGraph, same: tuple[int, ...], other: tuple[int, ...]) -> Parts | None:
    """Components of the ``same``-sign graph if none contains an ``other``-sign edge."""
    comps = []
    rest = G.full
    while rest:
        v = (rest & -rest).bit_length() - 1
        seen = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= same[u]
            frontier = nxt & ~seen
            seen |= frontier
        for u in iter_bits(seen):
            if other[u] & seen:
                return None
        comps.append(seen)
        rest &= ~seen
    return _sorted_parts(comps)


def classify_complete(G: SignedGraph) -> CompleteClassification:
    full = G.full
    for v in range(G.n):
        if (G.pos[v] | G.neg[v]) != full & ~(1 << v):
            return CompleteClassification(NOT_COMPLETE)
    bal = _pure_partition(G, G.pos, G.neg)
    anti = _pure_partition(G, G.neg, G.pos)
    if anti is not None and not G.pos_edges():
        # all-negative: the anti-balanced formula is the informative one
        return CompleteClassification(ANTI_BALANCED, anti, bal, anti)
    if bal is not None:
        return CompleteClassification(BALANCED, bal, bal, anti)
    if anti is not None:
        return CompleteClassification(ANTI_BALANCED, anti, bal, anti)
    return CompleteClassification(OTHER_COMPLETE)


def _parts_of(cls, attr: str, err):
    if isinstance(cls, CompleteClassification):
        parts = getattr(cls, attr)
        if parts is None:
            raise err(f"graph classified as {cls.kind}")
        return parts
    return tuple(tuple(p) for p in cls)


def aso_balanced(cls) -> tuple[int, frozenset[int]]:
    """Optimum and witness for a k-balanced complete graph: the largest part.

    Accepts a :class:`CompleteClassification` or the part list itself
    (largest part first).
    """
    parts = _parts_of(cls, "balanced_parts", NotBalanced)
    return len(parts[0]), frozenset(parts[0])


def is_min_balanced_multipart(parts, S) -> bool:
    """Decide whether S, spread over at least two parts, is a minimum alliance.

    Holds iff |S| equals the largest part size and is at least twice the
    largest intersection of S with a part that S does not exhaust.
    """
    parts = _parts_of(parts, "balanced_parts", NotBalanced)
    s = S if isinstance(S, int) else mask_of(S)
    pieces = []
    for p in parts:
        pm = mask_of(p)
        if s & pm:
            pieces.append(((s & pm).bit_count(), (pm & ~s) != 0))
    if len(pieces) < 2:
        raise SinglePart("S must meet at least two parts")
    open_sizes = [size for size, unfinished in pieces if unfinished]
    if not open_sizes:
        raise DegenerateSelection("S swallows every part it touches")
    size = s.bit_count()
    return size == len(parts[0]) and size >= 2 * max(open_sizes)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def aso_anti_balanced(cls) -> tuple[int, frozenset[int], str]:
    """Optimum, witness and sub-case tag for a k-anti-balanced complete graph.

    Sub-cases are tried in the order two-part (``"i"``), dominant part
    (``"ii"``), whole vertex set (``"iii"``); the first two can both apply and
    the two-part value is the right one there. Witnesses take the
    lowest-indexed vertices of each part. ``"ii"`` with a single part is the
    all-negative clique, where any vertex alone is an alliance.
    """
    parts = _parts_of(cls, "anti_parts", NotAntiBalanced)
    n = sum(len(p) for p in parts)
    v1 = len(parts[0])
    if len(parts) == 2 and len(parts[1]) >= _ceil_div(n + 1, 3):
        half = _ceil_div(v1 + 1, 2)
        if half <= len(parts[1]):
            return 2 * half, frozenset(parts[0][:half] + parts[1][:half]), "i"
        return _anti_fallback(parts)
    if 2 * v1 >= n:
        rest = n - v1
        if rest == 0:
            return 1, frozenset(parts[0][:1]), "ii"
        others = tuple(v for p in parts[1:] for v in p)
        return max(rest + 1, 2 * rest), frozenset(parts[0][:rest] + others), "ii"
    return n, frozenset(v for p in parts for v in p), "iii"


def _anti_fallback(parts: Parts) -> tuple[int, frozenset[int], str]:
    # two-part witness does not fit into the smaller part; settle it by enumeration
    from .exact import min_offensive_alliance_bruteforce
    from .graph import build_graph

    n = sum(len(p) for p in parts)
    where = {v: i for i, p in enumerate(parts) for v in p}
    edges = [(u, v, "-" if where[u] == where[v] else "+") for u in range(n) for v in range(u + 1, n)]
    res = min_offensive_alliance_bruteforce(build_graph(n, edges))
    return res.optimum, res.alliance, "brute"

"""Signed graphs, degree accounting and the offensive-alliance predicate.

Vertex sets are Python ints used as bit-vectors over dense indices
``0..n-1``; every public function that takes a vertex set also accepts any
iterable of indices.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import ConflictingSign, EmptySet, GraphError, SelfLoop

HOSTILITY = "hostility"
SUPERIORITY = "superiority"


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _as_mask(n: int, S) -> int:
    if isinstance(S, int):
        if S < 0 or S >> n:
            raise GraphError(f"vertex mask {S:#x} out of range for n={n}")
        return S
    m = 0
    for v in S:
        if not 0 <= v < n:
            raise GraphError(f"vertex {v} out of range for n={n}")
        m |= 1 << v
    return m


@dataclass(frozen=True)
class SignedGraph:
    """Immutable signed graph on vertices ``0..n-1``.

    ``pos[v]`` and ``neg[v]`` are bit masks of the positive and negative
    neighbours of ``v``.
    """

    n: int
    pos: tuple[int, ...]
    neg: tuple[int, ...]
    labels: tuple[str, ...] = ()
    _deg_pos: tuple[int, ...] = field(init=False, repr=False, compare=False)
    _deg_neg: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.pos) != self.n or len(self.neg) != self.n:
            raise GraphError("adjacency length does not match n")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(self.n)))
        elif len(self.labels) != self.n or len(set(self.labels)) != self.n:
            raise GraphError("labels must be n distinct names")
        for v in range(self.n):
            p, q = self.pos[v], self.neg[v]
            if (p | q) >> v & 1:
                raise SelfLoop(f"self-loop at vertex {v}")
            if p & q:
                u = next(iter_bits(p & q))
                raise ConflictingSign(f"pair {{{v},{u}}} carries both signs")
            for u in iter_bits(p):
                if not self.pos[u] >> v & 1:
                    raise GraphError("positive adjacency not symmetric")
            for u in iter_bits(q):
                if not self.neg[u] >> v & 1:
                    raise GraphError("negative adjacency not symmetric")
        object.__setattr__(self, "_deg_pos", tuple(m.bit_count() for m in self.pos))
        object.__setattr__(self, "_deg_neg", tuple(m.bit_count() for m in self.neg))

    # -- basic accessors -------------------------------------------------
    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def mask(self, S) -> int:
        return _as_mask(self.n, S)

    def nbrs(self, v: int) -> int:
        return self.pos[v] | self.neg[v]

    def deg_pos(self, v: int) -> int:
        return self._deg_pos[v]

    def deg_neg(self, v: int) -> int:
        return self._deg_neg[v]

    def deg(self, v: int) -> int:
        return self._deg_pos[v] + self._deg_neg[v]

    def pos_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.pos[u]) if u < v]

    def neg_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.neg[u]) if u < v]

    def neighborhood(self, S) -> int:
        """N(S): union of open neighbourhoods of the vertices of S."""
        out = 0
        for v in iter_bits(self.mask(S)):
            out |= self.pos[v] | self.neg[v]
        return out

    # -- degree extremes ---------------------------------------------------
    def min_pos_degree(self, within: int | None = None) -> int:
        vs = range(self.n) if within is None else iter_bits(within)
        return min(self._deg_pos[v] for v in vs)

    def max_neg_degree(self, within: int | None = None) -> int:
        vs = range(self.n) if within is None else iter_bits(within)
        return max(self._deg_neg[v] for v in vs)

    # -- connectivity on the underlying graph ------------------------------
    def component_of(self, v: int, within: int | None = None) -> int:
        allowed = self.full if within is None else within
        seen = 1 << v
        frontier = seen
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= (self.pos[u] | self.neg[u]) & allowed
            frontier = nxt & ~seen
            seen |= frontier
        return seen

    def components(self, within: int | None = None) -> list[int]:
        """Connected components of the underlying graph, ordered by lowest vertex."""
        rest = self.full if within is None else within
        comps = []
        while rest:
            v = (rest & -rest).bit_length() - 1
            c = self.component_of(v, rest)
            comps.append(c)
            rest &= ~c
        return comps

    def is_connected(self, within: int | None = None) -> bool:
        return len(self.components(within)) <= 1

    def induced(self, S) -> SignedGraph:
        """Subgraph induced by S, re-indexed densely in increasing order."""
        keep = list(iter_bits(self.mask(S)))
        index = {v: i for i, v in enumerate(keep)}
        pos = tuple(mask_of(index[u] for u in iter_bits(self.pos[v]) if u in index) for v in keep)
        neg = tuple(mask_of(index[u] for u in iter_bits(self.neg[v]) if u in index) for v in keep)
        return SignedGraph(len(keep), pos, neg, tuple(self.labels[v] for v in keep))

    def relabel(self, labels: Sequence[str]) -> SignedGraph:
        return SignedGraph(self.n, self.pos, self.neg, tuple(labels))

    def index_of(self, label: str) -> int:
        return self.labels.index(label)


def build_graph(n: int, edges: Iterable[tuple[int, int, str]], labels: Sequence[str] = ()) -> SignedGraph:
    """Build a signed graph from ``(u, v, sign)`` triples, sign in ``{'+', '-'}``.

    Repeated identical edges are harmless; the same pair with both signs
    raises :class:`ConflictingSign`.
    """
    pos = [0] * n
    neg = [0] * n
    for u, v, sign in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        if sign in ("+", 1, "pos"):
            if neg[u] >> v & 1:
                raise ConflictingSign(f"pair {{{u},{v}}} given both signs")
            pos[u] |= 1 << v
            pos[v] |= 1 << u
        elif sign in ("-", "−", -1, "neg"):
            if pos[u] >> v & 1:
                raise ConflictingSign(f"pair {{{u},{v}}} given both signs")
            neg[u] |= 1 << v
            neg[v] |= 1 << u
        else:
            raise GraphError(f"unknown sign {sign!r}")
    return SignedGraph(n, tuple(pos), tuple(neg), tuple(labels))


class DegreeProfile(NamedTuple):
    pos_in: int
    neg_in: int
    pos_out: int
    neg_out: int


def degree_profile(G: SignedGraph, v: int, S) -> DegreeProfile:
    s = G.mask(S)
    pin = (G.pos[v] & s).bit_count()
    nin = (G.neg[v] & s).bit_count()
    return DegreeProfile(pin, nin, G.deg_pos(v) - pin, G.deg_neg(v) - nin)


def boundary(G: SignedGraph, S) -> int:
    """∂S = N(S) \\ S, as a mask."""
    s = G.mask(S)
    return G.neighborhood(s) & ~s


def attacked(G: SignedGraph, v: int, s: int) -> bool:
    """Whether v (outside the mask s) is successfully attacked by s."""
    nin = (G.neg[v] & s).bit_count()
    pin = (G.pos[v] & s).bit_count()
    return nin >= pin and nin >= G.deg_pos(v) - pin + 1


class Violation(NamedTuple):
    vertex: int
    condition: str
    profile: DegreeProfile


@dataclass(frozen=True)
class AllianceCertificate:
    alliance: frozenset[int]
    boundary: frozenset[int]
    violations: tuple[Violation, ...]

    @property
    def accepted(self) -> bool:
        return not self.violations

    @property
    def verdict(self) -> str:
        return "accepted" if self.accepted else "rejected"

    def __bool__(self) -> bool:
        return self.accepted


def is_offensive_alliance(G: SignedGraph, S) -> AllianceCertificate:
    """Check both offensive conditions at every boundary vertex of S.

    All violations are collected; a vertex failing both conditions appears
    twice, once per condition.
    """
    s = G.mask(S)
    if not s:
        raise EmptySet("an offensive alliance must be non-empty")
    bd = boundary(G, s)
    violations = []
    for v in iter_bits(bd):
        prof = degree_profile(G, v, s)
        if prof.neg_in < prof.pos_in:
            violations.append(Violation(v, HOSTILITY, prof))
        if prof.neg_in < prof.pos_out + 1:
            violations.append(Violation(v, SUPERIORITY, prof))
    return AllianceCertificate(frozenset(iter_bits(s)), frozenset(iter_bits(bd)), tuple(violations))


def is_alliance_mask(G: SignedGraph, s: int) -> bool:
    """Fast boolean form of :func:`is_offensive_alliance` for a non-empty mask."""
    nb = 0
    for v in iter_bits(s):
        nb |= G.pos[v] | G.neg[v]
    nb &= ~s
    pos, neg, dp = G.pos, G.neg, G._deg_pos
    while nb:
        low = nb & -nb
        v = low.bit_length() - 1
        nb ^= low
        nin = (neg[v] & s).bit_count()
        pin = (pos[v] & s).bit_count()
        if nin < pin or nin <= dp[v] - pin:
            return False
    return True


# -- unsigned graphs ----------------------------------------------------------
@dataclass(frozen=True)
class UnsignedGraph:
    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(self.n)))
        for v in range(self.n):
            if self.adj[v] >> v & 1:
                raise SelfLoop(f"self-loop at vertex {v}")
            for u in iter_bits(self.adj[v]):
                if not self.adj[u] >> v & 1:
                    raise GraphError("adjacency not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] = ()) -> UnsignedGraph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), tuple(labels))

    def deg(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u]) if u < v]

    def max_degree(self) -> int:
        return max((self.deg(v) for v in range(self.n)), default=0)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = frontier = 1
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= self.adj[u]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1


def is_offensive_alliance_unsigned(G0: UnsignedGraph, S) -> AllianceCertificate:
    """Classical offensive alliance: every attacked outsider has a strict majority of its neighbours in S."""
    s = _as_mask(G0.n, S)
    if not s:
        raise EmptySet("an offensive alliance must be non-empty")
    bd = 0
    for v in iter_bits(s):
        bd |= G0.adj[v]
    bd &= ~s
    violations = []
    for u in iter_bits(bd):
        d_in = (G0.adj[u] & s).bit_count()
        d_out = G0.deg(u) - d_in
        if d_in < d_out + 1:
            violations.append(Violation(u, SUPERIORITY, DegreeProfile(0, d_in, 0, d_out)))
    return AllianceCertificate(frozenset(iter_bits(s)), frozenset(iter_bits(bd)), tuple(violations))


def is_unsigned_alliance_mask(G0: UnsignedGraph, s: int) -> bool:
    nb = 0
    for v in iter_bits(s):
        nb |= G0.adj[v]
    for u in iter_bits(nb & ~s):
        d_in = (G0.adj[u] & s).bit_count()
        if 2 * d_in < G0.deg(u) + 1:
            return False
    return True


# -- bounds ---------------------------------------------------------------------
def attackable(G: SignedGraph, v: int) -> bool:
    """Necessary condition for v to lie on the boundary of any offensive alliance."""
    return G.deg_neg(v) >= (G.deg_pos(v) + 2) // 2


def existence_precondition(G: SignedGraph, component: int | None = None) -> bool:
    """Degree test that every connected graph with a non-trivial alliance passes.

    ``component`` is a mask of one connected component; by default the whole
    graph, which must then be connected.
    """
    comp = G.full if component is None else component
    return G.max_neg_degree(comp) >= (G.min_pos_degree(comp) + 2) // 2


def size_lower_bound(G: SignedGraph, component: int | None = None) -> int:
    """Minimum positive degree plus one: a floor on every alliance inside the component."""
    comp = G.full if component is None else component
    return G.min_pos_degree(comp) + 1

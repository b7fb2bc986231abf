"""Text and JSON formats for graphs, hypergraphs, decompositions and vertex sets.

Signed graph text format::

    c optional comment
    p sg <n> <m+> <m->
    v <label_0> ... <label_n-1>      (optional; default labels are 0..n-1)
    <u> <v> +|-

Unsigned graphs use ``p ug <n> <m>`` and two-token edge lines; hypergraphs
use ``p hs <n> <m>`` and ``e <v1> <v2> ...`` lines (default labels 1..n).
Decompositions use ``td <#nodes> <width+1> <n>``, ``b <id> <v...>`` bag
lines, ``<id> <id>`` tree edges and ``r <id>`` for the root. Endpoints are
always written as labels.
"""
from __future__ import annotations

import json

from .domino import DominoDecomposition
from .errors import GraphError, ParseError, UnknownLabel
from .graph import SignedGraph, UnsignedGraph, build_graph, iter_bits
from .reductions import Hypergraph

SCHEMA = 1


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith(("c ", "#")) or line == "c":
            continue
        yield no, line.split()


def _resolver(labels):
    index = {lab: i for i, lab in enumerate(labels)}

    def find(tok: str, no: int) -> int:
        try:
            return index[tok]
        except KeyError:
            raise UnknownLabel(f"line {no}: unknown vertex {tok!r}") from None

    return find


def _int(tok: str, no: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"line {no}: expected an integer, got {tok!r}") from None


def _default_labels(n: int, start: int = 0) -> tuple[str, ...]:
    return tuple(str(i + start) for i in range(n))


def _header(text: str, kind: str, width: int):
    it = _lines(text)
    for no, tok in it:
        if tok[0] != "p":
            raise ParseError(f"line {no}: expected 'p {kind}' header first")
        if len(tok) != width or tok[1] != kind:
            raise ParseError(f"line {no}: malformed header, expected 'p {kind}' with {width - 2} counts")
        return [_int(t, no) for t in tok[2:]], it
    raise ParseError("empty input")


def _labels_line(it, n: int, default):
    """Consume an optional ``v`` line; returns (labels, first pending line or None)."""
    for no, tok in it:
        if tok[0] == "v":
            if len(tok) - 1 != n or len(set(tok[1:])) != n:
                raise ParseError(f"line {no}: 'v' line must list {n} distinct labels")
            return tuple(tok[1:]), None
        return default, (no, tok)
    return default, None


def _rest(pending, it):
    if pending is not None:
        yield pending
    yield from it


# -- signed graphs ----------------------------------------------------------------
def parse_signed_text(text: str) -> SignedGraph:
    (n, mp, mn), it = _header(text, "sg", 5)
    labels, pending = _labels_line(it, n, _default_labels(n))
    find = _resolver(labels)
    edges = []
    for no, tok in _rest(pending, it):
        if len(tok) != 3 or tok[2] not in ("+", "-"):
            raise ParseError(f"line {no}: expected '<u> <v> +|-'")
        edges.append((find(tok[0], no), find(tok[1], no), tok[2]))
    try:
        G = build_graph(n, edges, labels)
    except GraphError as e:
        raise ParseError(str(e)) from e
    if (len(G.pos_edges()), len(G.neg_edges())) != (mp, mn):
        raise ParseError(f"header announces {mp}+/{mn}- edges, found {len(G.pos_edges())}+/{len(G.neg_edges())}-")
    return G


def _is_default(labels, start=0) -> bool:
    return tuple(labels) == _default_labels(len(labels), start)


def format_signed_text(G: SignedGraph) -> str:
    L = G.labels
    pe, ne = G.pos_edges(), G.neg_edges()
    out = [f"p sg {G.n} {len(pe)} {len(ne)}"]
    if not _is_default(L):
        out.append("v " + " ".join(L))
    edges = sorted([(u, v, "+") for u, v in pe] + [(u, v, "-") for u, v in ne])
    out += [f"{L[u]} {L[v]} {s}" for u, v, s in edges]
    return "\n".join(out) + "\n"


def signed_to_dict(G: SignedGraph) -> dict:
    L = G.labels
    return {
        "schema": SCHEMA,
        "n": G.n,
        "labels": list(L),
        "pos": [[L[u], L[v]] for u, v in G.pos_edges()],
        "neg": [[L[u], L[v]] for u, v in G.neg_edges()],
    }


def signed_from_dict(d: dict) -> SignedGraph:
    try:
        n = int(d["n"])
        labels = tuple(str(x) for x in d.get("labels") or _default_labels(n))
        find = _resolver(labels)
        edges = [(find(str(u), 0), find(str(v), 0), s) for key, s in (("pos", "+"), ("neg", "-")) for u, v in d.get(key, [])]
        return build_graph(n, edges, labels)
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, UnknownLabel):
            raise
        raise ParseError(f"bad graph JSON: {e}") from e


def format_signed_json(G: SignedGraph) -> str:
    return json.dumps(signed_to_dict(G), indent=1) + "\n"


def parse_signed(text: str) -> SignedGraph:
    """Signed graph from either format, chosen by the first character."""
    if text.lstrip().startswith("{"):
        try:
            return signed_from_dict(json.loads(text))
        except json.JSONDecodeError as e:
            raise ParseError(f"invalid JSON: {e}") from e
    return parse_signed_text(text)


# -- unsigned graphs -----------------------------------------------------------------
def parse_unsigned_text(text: str) -> UnsignedGraph:
    (n, m), it = _header(text, "ug", 4)
    labels, pending = _labels_line(it, n, _default_labels(n))
    find = _resolver(labels)
    edges = []
    for no, tok in _rest(pending, it):
        if len(tok) != 2:
            raise ParseError(f"line {no}: expected '<u> <v>'")
        edges.append((find(tok[0], no), find(tok[1], no)))
    try:
        G0 = UnsignedGraph.from_edges(n, edges, labels)
    except GraphError as e:
        raise ParseError(str(e)) from e
    if len(G0.edges()) != m:
        raise ParseError(f"header announces {m} edges, found {len(G0.edges())}")
    return G0


def format_unsigned_text(G0: UnsignedGraph) -> str:
    L = G0.labels
    out = [f"p ug {G0.n} {len(G0.edges())}"]
    if not _is_default(L):
        out.append("v " + " ".join(L))
    out += [f"{L[u]} {L[v]}" for u, v in G0.edges()]
    return "\n".join(out) + "\n"


# -- hypergraphs -------------------------------------------------------------------------
def parse_hypergraph_text(text: str) -> Hypergraph:
    (n, m), it = _header(text, "hs", 4)
    labels, pending = _labels_line(it, n, _default_labels(n, 1))
    find = _resolver(labels)
    edges = []
    for no, tok in _rest(pending, it):
        if tok[0] != "e":
            raise ParseError(f"line {no}: expected 'e <v1> <v2> ...'")
        edges.append(frozenset(find(t, no) for t in tok[1:]))
    if len(edges) != m:
        raise ParseError(f"header announces {m} hyperedges, found {len(edges)}")
    return Hypergraph(n, tuple(edges), labels)


def format_hypergraph_text(H: Hypergraph) -> str:
    out = [f"p hs {H.n} {len(H.edges)}"]
    if not _is_default(H.labels, 1):
        out.append("v " + " ".join(H.labels))
    out += ["e " + " ".join(H.labels[v] for v in sorted(e)) if e else "e" for e in H.edges]
    return "\n".join(out) + "\n"


# -- decompositions -----------------------------------------------------------------------
def parse_decomposition(text: str, G: SignedGraph) -> DominoDecomposition:
    find = _resolver(G.labels)
    header = None
    bags, edges, root = {}, [], None
    for no, tok in _lines(text):
        if tok[0] == "td":
            if header is not None or len(tok) != 4:
                raise ParseError(f"line {no}: malformed 'td' header")
            header = [_int(t, no) for t in tok[1:]]
        elif header is None:
            raise ParseError(f"line {no}: 'td' header must come first")
        elif tok[0] == "b":
            if len(tok) < 2:
                raise ParseError(f"line {no}: bag line needs an id")
            t = _int(tok[1], no)
            if t in bags:
                raise ParseError(f"line {no}: bag {t} given twice")
            bags[t] = frozenset(find(x, no) for x in tok[2:])
        elif tok[0] == "r":
            if len(tok) != 2:
                raise ParseError(f"line {no}: expected 'r <id>'")
            root = _int(tok[1], no)
        elif len(tok) == 2:
            edges.append((_int(tok[0], no), _int(tok[1], no)))
        else:
            raise ParseError(f"line {no}: unrecognised line")
    if header is None:
        raise ParseError("missing 'td' header")
    nodes, size, n = header
    if len(bags) != nodes:
        raise ParseError(f"header announces {nodes} bags, found {len(bags)}")
    if n != G.n:
        raise ParseError(f"decomposition is for {n} vertices, graph has {G.n}")
    if bags and max(len(b) for b in bags.values()) != size:
        raise ParseError(f"header announces largest bag {size}, found {max(len(b) for b in bags.values())}")
    if root is None:
        root = min(bags) if bags else 0
    return DominoDecomposition(bags, tuple(edges), root)


def format_decomposition(D: DominoDecomposition, G: SignedGraph) -> str:
    L = G.labels
    out = [f"td {len(D.bags)} {D.width + 1} {G.n}"]
    for t in sorted(D.bags):
        out.append(" ".join(["b", str(t)] + [L[v] for v in iter_bits(D.bags[t])]))
    out += [f"{a} {b}" for a, b in D.edges]
    out.append(f"r {D.root}")
    return "\n".join(out) + "\n"


# -- vertex sets ---------------------------------------------------------------------------
def parse_set(text: str, labels) -> frozenset[int]:
    find = _resolver(labels)
    out = set()
    for no, tok in _lines(text):
        for t in tok:
            out.add(find(t, no))
    return frozenset(out)


def format_set(S, labels) -> str:
    return " ".join(labels[v] for v in sorted(S)) + "\n"

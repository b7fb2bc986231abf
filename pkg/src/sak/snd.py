"""Signed neighbourhood diversity and the integer program over its classes.

The program has three integer variables per class (number of class
members in the alliance, whether the class carries boundary vertices,
whether the class is swallowed whole) and is solved by a small exact
branch-and-bound with interval propagation. Everything is integer
arithmetic.
"""
from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field

from .complete import ANTI_BALANCED, BALANCED, classify_complete
from .errors import Infeasible, InternalInconsistency, InvalidCertificate, VerificationFailed
from .graph import SignedGraph, is_offensive_alliance, iter_bits, mask_of

POS_CLIQUE, NEG_CLIQUE, INDEPENDENT = "P", "N", "I"


def _related(G: SignedGraph, u: int, v: int) -> bool:
    bu, bv = 1 << u, 1 << v
    return (G.pos[u] & ~bv) == (G.pos[v] & ~bu) and (G.neg[u] & ~bv) == (G.neg[v] & ~bu)


def _pair_sign(G: SignedGraph, u: int, v: int) -> str | None:
    if G.pos[u] >> v & 1:
        return "+"
    if G.neg[u] >> v & 1:
        return "-"
    return None


@dataclass(frozen=True)
class SndPartition:
    classes: tuple[tuple[int, ...], ...]
    kinds: tuple[str, ...]
    inter_sign: tuple[tuple[str | None, ...], ...]
    n: int

    @property
    def k(self) -> int:
        return len(self.classes)

    @property
    def z(self) -> tuple[int, ...]:
        return tuple(int(kd == POS_CLIQUE) for kd in self.kinds)

    def pos_classes(self, i: int) -> list[int]:
        """Classes wholly inside N+(C_i); contains i itself for a positive clique."""
        return [j for j in range(self.k) if self._sign(i, j) == "+"]

    def neg_classes(self, i: int) -> list[int]:
        return [j for j in range(self.k) if self._sign(i, j) == "-"]

    def _sign(self, i: int, j: int) -> str | None:
        if i == j:
            return {POS_CLIQUE: "+", NEG_CLIQUE: "-"}.get(self.kinds[i])
        return self.inter_sign[i][j]


def snd_partition(G: SignedGraph) -> SndPartition:
    """Coarsest partition whose classes share signed neighbourhoods (twins up to each other)."""
    classes: list[list[int]] = []
    for v in range(G.n):
        for c in classes:
            if _related(G, v, c[0]):
                c.append(v)
                break
        else:
            classes.append([v])
    kinds = []
    for c in classes:
        for u, v in itertools.combinations(c, 2):
            if not _related(G, u, v):
                raise InternalInconsistency(f"twin relation not transitive on {c}")
        if len(c) == 1:
            kinds.append(INDEPENDENT)
            continue
        signs = {_pair_sign(G, u, v) for u, v in itertools.combinations(c, 2)}
        if len(signs) != 1:
            raise InternalInconsistency(f"class {c} is neither clique nor independent")
        kinds.append({"+": POS_CLIQUE, "-": NEG_CLIQUE, None: INDEPENDENT}[signs.pop()])
    k = len(classes)
    inter = [[None] * k for _ in range(k)]
    for i, j in itertools.combinations(range(k), 2):
        signs = {_pair_sign(G, u, v) for u in classes[i] for v in classes[j]}
        if len(signs) != 1:
            raise InternalInconsistency(f"classes {i},{j} joined by mixed signs")
        inter[i][j] = inter[j][i] = signs.pop()
    return SndPartition(
        tuple(tuple(c) for c in classes), tuple(kinds), tuple(tuple(r) for r in inter), G.n
    )


# -- integer program -----------------------------------------------------------
@dataclass(frozen=True)
class Row:
    """Linear row ``sum(coef * var) >= rhs``."""

    coeffs: tuple[tuple[int, int], ...]
    rhs: int
    name: str = ""

    def value(self, assignment) -> int:
        return sum(c * assignment[j] for j, c in self.coeffs)

    def holds(self, assignment) -> bool:
        return self.value(assignment) >= self.rhs


def _row(terms, rhs: int, name: str) -> Row:
    acc: dict[int, int] = {}
    for j, c in terms:
        acc[j] = acc.get(j, 0) + c
    return Row(tuple((j, c) for j, c in sorted(acc.items()) if c), rhs, name)


@dataclass
class IlpModel:
    names: list[str]
    lo: list[int]
    hi: list[int]
    rows: list[Row]
    objective: dict[int, int]
    branch_order: list[int] = field(default_factory=list)

    @property
    def num_vars(self) -> int:
        return len(self.names)

    def to_lp(self) -> str:
        """LP-style text dump for eyeballing a model."""

        def expr(terms):
            out = []
            for j, c in terms:
                sign = "-" if c < 0 else "+"
                mag = "" if abs(c) == 1 else f"{abs(c)} "
                out.append(f"{sign} {mag}{self.names[j]}")
            text = " ".join(out)
            return text[2:] if text.startswith("+ ") else text

        lines = ["Minimize", f" obj: {expr(sorted(self.objective.items()))}", "Subject To"]
        for r in self.rows:
            lines.append(f" {r.name}: {expr(r.coeffs)} >= {r.rhs}")
        lines.append("Bounds")
        for name, a, b in zip(self.names, self.lo, self.hi):
            lines.append(f" {a} <= {name} <= {b}")
        lines.append("General")
        lines.append(" " + " ".join(self.names))
        lines.append("End")
        return "\n".join(lines) + "\n"


def x_var(i: int) -> int:
    return 3 * i


def w_var(i: int) -> int:
    return 3 * i + 1


def y_var(i: int) -> int:
    return 3 * i + 2


def build_oa_ilp(part: SndPartition) -> IlpModel:
    """Integer program whose optimum is the minimum offensive alliance size.

    Per class i with size c_i, closed sign-neighbourhood classes N+_i / N-_i
    and z_i = 1 for positive cliques, with M = 2|V|:

    * hostility:   sum_{N-} x - sum_{N+} x             >= -M (1 - w_i + y_i)
    * superiority: sum_{N-} x - sum_{N+} (c_j - x_j)   >= 1 - z_i - M (1 - w_i + y_i)
    * w_i = 1 exactly when some neighbouring class (the class itself too for
      cliques) contributes to S, via ``T <= |V| w_i <= |V| T``
    * y_i = 1 exactly when x_i = c_i, via ``c_i y_i <= x_i`` and
      ``y_i >= x_i - c_i + 1``
    * sum x >= 1
    """
    V = part.n
    big = 2 * V
    names, lo, hi, rows = [], [], [], []
    for i, c in enumerate(part.classes):
        names += [f"x{i}", f"w{i}", f"y{i}"]
        lo += [0, 0, 0]
        hi += [len(c), 1, 1]
    z = part.z
    for i, c in enumerate(part.classes):
        npos, nneg = part.pos_classes(i), part.neg_classes(i)
        relax = [(w_var(i), -big), (y_var(i), big)]
        rows.append(_row(
            [(x_var(j), 1) for j in nneg] + [(x_var(j), -1) for j in npos] + relax,
            -big, f"hostility_{i}",
        ))
        rows.append(_row(
            [(x_var(j), 1) for j in nneg] + [(x_var(j), 1) for j in npos] + relax,
            sum(len(part.classes[j]) for j in npos) + 1 - z[i] - big, f"superiority_{i}",
        ))
        near = set(npos) | set(nneg)
        if part.kinds[i] != INDEPENDENT:
            near.add(i)
        near_terms = [(x_var(j), 1) for j in sorted(near)]
        rows.append(_row([(w_var(i), V)] + [(j, -a) for j, a in near_terms], 0, f"touch_hi_{i}"))
        rows.append(_row([(j, V * a) for j, a in near_terms] + [(w_var(i), -V)], 0, f"touch_lo_{i}"))
        rows.append(_row([(x_var(i), 1), (y_var(i), -len(c))], 0, f"whole_hi_{i}"))
        rows.append(_row([(y_var(i), 1), (x_var(i), -1)], 1 - len(c), f"whole_lo_{i}"))
    rows.append(_row([(x_var(i), 1) for i in range(part.k)], 1, "nonempty"))
    by_size = sorted(range(part.k), key=lambda i: (-len(part.classes[i]), i))
    order = [v for i in by_size for v in (w_var(i), y_var(i))] + [x_var(i) for i in by_size]
    objective = {x_var(i): 1 for i in range(part.k)}
    return IlpModel(names, lo, hi, rows, objective, order)


@dataclass(frozen=True)
class IlpSolution:
    values: tuple[int, ...]
    objective: int
    nodes: int

    def x(self, i: int) -> int:
        return self.values[x_var(i)]

    def w(self, i: int) -> int:
        return self.values[w_var(i)]

    def y(self, i: int) -> int:
        return self.values[y_var(i)]


def _propagate(rows, lo, hi) -> bool:
    """Tighten integer bounds to a fixpoint; False on infeasibility."""
    changed = True
    while changed:
        changed = False
        for r in rows:
            maxact = 0
            for j, c in r.coeffs:
                maxact += c * (hi[j] if c > 0 else lo[j])
            if maxact < r.rhs:
                return False
            slack = maxact - r.rhs
            for j, c in r.coeffs:
                if c > 0:
                    # c * v_j must stay >= c * hi_j - slack
                    need = hi[j] - slack // c
                    if need > lo[j]:
                        lo[j] = need
                        changed = True
                else:
                    cap = lo[j] + slack // (-c)
                    if cap < hi[j]:
                        hi[j] = cap
                        changed = True
                if lo[j] > hi[j]:
                    return False
    return True


def solve_ilp(model: IlpModel) -> IlpSolution:
    """Best-first branch-and-bound, bounding with the objective at the variable lower bounds.

    Raises :class:`Infeasible` when no integer point satisfies the rows.
    """
    obj = model.objective
    order = model.branch_order or list(range(model.num_vars))
    counter = itertools.count()

    def bound(lo, hi):
        return sum(c * (lo[j] if c >= 0 else hi[j]) for j, c in obj.items())

    lo, hi = list(model.lo), list(model.hi)
    nodes = 0
    best = None
    best_val = None
    if _propagate(model.rows, lo, hi):
        heap = [(bound(lo, hi), 0, next(counter), lo, hi)]
    else:
        heap = []
    while heap:
        b, negdepth, _, lo, hi = heapq.heappop(heap)
        nodes += 1
        if best_val is not None and b >= best_val:
            break
        free = next((j for j in order if lo[j] < hi[j]), None)
        if free is None:
            if all(r.holds(lo) for r in model.rows):
                best, best_val = tuple(lo), b
            continue
        mid = (lo[free] + hi[free]) // 2
        for a, z in ((lo[free], mid), (mid + 1, hi[free])):
            clo, chi = list(lo), list(hi)
            clo[free], chi[free] = a, z
            if _propagate(model.rows, clo, chi):
                cb = bound(clo, chi)
                if best_val is None or cb < best_val:
                    heapq.heappush(heap, (cb, negdepth - 1, next(counter), clo, chi))
    if best is None:
        raise Infeasible("no integer point satisfies every row")
    return IlpSolution(best, best_val, nodes)


def decode_solution(G: SignedGraph, part: SndPartition, sol: IlpSolution) -> frozenset[int]:
    """Take the lowest-indexed x_i members of every class and verify the result."""
    chosen = []
    for i, c in enumerate(part.classes):
        chosen.extend(c[: sol.x(i)])
    if not chosen:
        raise VerificationFailed("decoded alliance is empty")
    cert = is_offensive_alliance(G, chosen)
    if not cert.accepted:
        raise VerificationFailed(f"decoded set {sorted(chosen)} is not an offensive alliance: {cert.violations}")
    return cert.alliance


def solve_snd(G: SignedGraph):
    """Partition, build, solve and decode in one go; returns a SolveResult."""
    from .exact import SolveResult

    part = snd_partition(G)
    sol = solve_ilp(build_oa_ilp(part))
    S = decode_solution(G, part, sol)
    return SolveResult(len(S), is_offensive_alliance(G, S), "ilp", sol.nodes)


# -- structural upper bounds ------------------------------------------------------
@dataclass(frozen=True)
class SndBoundReport:
    certificate: str
    size: int
    k: int
    bound: int
    measured: int

    @property
    def holds(self) -> bool:
        return self.measured <= self.bound


def snd_upper_bounds(G: SignedGraph, vertex_cover=None, deletion_set=None) -> list[SndBoundReport]:
    """Validate structural certificates and compare the bounds they imply with the measured snd.

    ``vertex_cover`` must touch every edge and implies ``3^|C| + |C|``.
    ``deletion_set`` D must leave a complete k-balanced or k-anti-balanced
    graph and implies ``k * 3^|D| + |D|``.
    """
    measured = snd_partition(G).k
    reports = []
    if vertex_cover is not None:
        cover = G.mask(vertex_cover)
        for u in range(G.n):
            if not cover >> u & 1 and G.nbrs(u) & ~cover:
                raise InvalidCertificate(f"edge at vertex {u} not covered")
        size = cover.bit_count()
        reports.append(SndBoundReport("vertex_cover", size, 1, 3**size + size, measured))
    if deletion_set is not None:
        d = G.mask(deletion_set)
        rest = G.full & ~d
        if not rest:
            raise InvalidCertificate("deletion set removes every vertex")
        cls = classify_complete(G.induced(rest))
        if cls.kind not in (BALANCED, ANTI_BALANCED):
            raise InvalidCertificate(f"remainder is {cls.kind}")
        size = d.bit_count()
        k = cls.k
        reports.append(SndBoundReport(f"distance_to_{cls.kind}", size, k, k * 3**size + size, measured))
    for r in reports:
        assert r.holds, f"measured snd {r.measured} exceeds {r.certificate} bound {r.bound}"
    return reports

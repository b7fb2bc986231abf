import itertools
import random

import pytest
from hypothesis import given

from sak.errors import Infeasible, InvalidCertificate, VerificationFailed
from sak.exact import min_offensive_alliance_bruteforce
from sak.graph import UnsignedGraph, build_graph, is_offensive_alliance
from sak.reductions import gen_complete, gen_random_signed
from sak.snd import (
    INDEPENDENT,
    NEG_CLIQUE,
    POS_CLIQUE,
    IlpModel,
    IlpSolution,
    Row,
    build_oa_ilp,
    decode_solution,
    snd_partition,
    snd_upper_bounds,
    solve_ilp,
    solve_snd,
    w_var,
    x_var,
    y_var,
)

from conftest import signed_graphs


def related(G, u, v):
    bu, bv = 1 << u, 1 << v
    return (G.pos[u] & ~bv) == (G.pos[v] & ~bu) and (G.neg[u] & ~bv) == (G.neg[v] & ~bu)


def coarsest_by_merging(G):
    """Union classes while some pair is related; independent of the partition code."""
    cls = [{v} for v in range(G.n)]
    merged = True
    while merged:
        merged = False
        for a, b in itertools.combinations(range(len(cls)), 2):
            if all(related(G, u, v) for u in cls[a] for v in cls[b]):
                cls[a] |= cls.pop(b)
                merged = True
                break
    return len(cls)


def test_positive_k4_one_class():
    part = snd_partition(gen_complete([4]))
    assert part.k == 1 and part.kinds == (POS_CLIQUE,)


def test_balanced_3_2():
    part = snd_partition(gen_complete([3, 2]))
    assert part.k == 2 and part.kinds == (POS_CLIQUE, POS_CLIQUE)
    assert part.inter_sign[0][1] == part.inter_sign[1][0] == "-"


def test_seven_vertex_snd_matches_merge_oracle(seven):
    assert snd_partition(seven).k == coarsest_by_merging(seven) <= 7


@given(signed_graphs(max_n=9))
def test_partition_invariants(G):
    part = snd_partition(G)
    assert sorted(v for c in part.classes for v in c) == list(range(G.n))
    for c in part.classes:
        for u, v in itertools.combinations(c, 2):
            assert related(G, u, v)
    # no two classes can be merged
    for a, b in itertools.combinations(range(part.k), 2):
        assert not all(related(G, u, v) for u in part.classes[a] for v in part.classes[b])
    assert part.k == coarsest_by_merging(G)
    for i in range(part.k):
        for j in range(part.k):
            assert part.inter_sign[i][j] == part.inter_sign[j][i]


def enumerate_optimum(model):
    best = None
    for vals in itertools.product(*(range(a, b + 1) for a, b in zip(model.lo, model.hi))):
        if all(r.holds(vals) for r in model.rows):
            obj = sum(c * vals[j] for j, c in model.objective.items())
            best = obj if best is None else min(best, obj)
    return best


def test_negative_triangle_model():
    model = build_oa_ilp(snd_partition(gen_complete([3], "anti")))
    assert model.num_vars == 3
    assert enumerate_optimum(model) == 1 == solve_ilp(model).objective


def test_positive_triangle_model():
    sol = solve_ilp(build_oa_ilp(snd_partition(gen_complete([3]))))
    assert sol.objective == 3 and sol.y(0) == 1


def test_balanced_3_3_model():
    assert solve_ilp(build_oa_ilp(snd_partition(gen_complete([3, 3])))).objective == 3


def test_seven_vertex_model(seven):
    part = snd_partition(seven)
    sol = solve_ilp(build_oa_ilp(part))
    assert sol.objective == 4
    S = decode_solution(seven, part, sol)
    assert len(S) == 4 and is_offensive_alliance(seven, S).accepted


def test_infeasible_model():
    model = IlpModel(["a"], [0], [0], [Row(((0, 1),), 1, "r")], {0: 1})
    with pytest.raises(Infeasible):
        solve_ilp(model)


def test_decode_whole_classes_and_single_vertex():
    G = gen_complete([5], "anti")
    part = snd_partition(G)
    assert decode_solution(G, part, IlpSolution((1, 1, 0), 1, 0)) == frozenset({0})
    assert decode_solution(G, part, IlpSolution((5, 0, 1), 5, 0)) == frozenset(range(5))


def test_decode_rejects_bad_solution():
    G = build_graph(3, [(0, 1, "+"), (1, 2, "+")])
    part = snd_partition(G)
    x = [0] * (3 * part.k)
    x[x_var(part.classes.index((1,)))] = 1
    with pytest.raises(VerificationFailed):
        decode_solution(G, part, IlpSolution(tuple(x), 1, 0))


def test_relaxation_never_beats_enumeration():
    rng = random.Random(3)
    checked = 0
    while checked < 25:
        G = gen_random_signed(rng.randint(2, 8), 0.3, 0.4, rng.randrange(10**6))
        model = build_oa_ilp(snd_partition(G))
        if model.num_vars > 12:
            continue
        assert solve_ilp(model).objective == enumerate_optimum(model)
        checked += 1


@given(signed_graphs(max_n=10))
def test_ilp_matches_bruteforce_and_links(G):
    part = snd_partition(G)
    sol = solve_ilp(build_oa_ilp(part))
    assert sol.objective == min_offensive_alliance_bruteforce(G).optimum
    for i, c in enumerate(part.classes):
        assert (sol.y(i) == 1) == (sol.x(i) == len(c))
        near = set(part.pos_classes(i)) | set(part.neg_classes(i))
        if part.kinds[i] != INDEPENDENT:
            near.add(i)
        assert (sol.w(i) == 0) == (sum(sol.x(j) for j in near) == 0)
    assert solve_snd(G).optimum == sol.objective


def test_lp_dump_lists_every_row():
    model = build_oa_ilp(snd_partition(gen_complete([2, 2])))
    text = model.to_lp()
    assert text.startswith("Minimize") and text.rstrip().endswith("End")
    assert sum(1 for line in text.splitlines() if ">=" in line) == len(model.rows)


def test_bounds_examples():
    [r] = snd_upper_bounds(build_graph(1, []), vertex_cover=[])
    assert (r.bound, r.measured) == (1, 1)
    [r] = snd_upper_bounds(gen_complete([3, 2]), deletion_set=[])
    assert (r.bound, r.measured) == (2, 2)
    star = build_graph(5, [(0, v, "+") for v in range(1, 5)])
    [r] = snd_upper_bounds(star, vertex_cover=[0])
    assert (r.bound, r.measured) == (4, 2)


def test_bounds_reject_bad_certificates():
    with pytest.raises(InvalidCertificate):
        snd_upper_bounds(build_graph(3, [(0, 1, "+"), (1, 2, "-")]), vertex_cover=[0])
    with pytest.raises(InvalidCertificate):
        snd_upper_bounds(build_graph(3, [(0, 1, "+")]), deletion_set=[])


def test_distance_bound_after_deletion():
    G = gen_complete([3, 2], "anti")
    extra = build_graph(6, [(u, v, s) for u in range(5) for v in iter_nbrs(G, u) if u < v for s in [sign(G, u, v)]] + [(5, 0, "+"), (5, 3, "-")])
    [r] = snd_upper_bounds(extra, deletion_set=[5])
    assert r.holds and r.k == 2 and r.bound == 2 * 3 + 1


def iter_nbrs(G, u):
    return [v for v in range(G.n) if (G.pos[u] | G.neg[u]) >> v & 1]


def sign(G, u, v):
    return "+" if G.pos[u] >> v & 1 else "-"

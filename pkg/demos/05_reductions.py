"""
Hardness gadgets you can run
============================

Each reduction builds a signed graph and a budget. A source solution maps
to a planted alliance, and the instance answer matches the source answer.
"""
from sak import Hypergraph, min_offensive_alliance_branching, reduce_hitting_set, reduce_vertex_cover
from sak.corpus import k4
from sak.graph import is_offensive_alliance
from sak.reductions import PER_VERTEX, SHARED, min_hitting_set, min_vertex_cover

H = Hypergraph(4, (frozenset({0, 1}), frozenset({1, 2}), frozenset({2, 3})))
best = min_hitting_set(H)
print("hitting set optimum:", sorted(H.labels[v] for v in best))
for k in (1, 2):
    inst = reduce_hitting_set(H, k)
    res = min_offensive_alliance_branching(inst.graph, inst.budget)
    print(f"  k={k}: |V'|={inst.graph.n}, budget={inst.budget}, alliance found: {res is not None}")
inst = reduce_hitting_set(H, len(best))
print("  planted:", inst.witness_labels(best), is_offensive_alliance(inst.graph, inst.witness(best)).verdict)

G0 = k4()
cover = min_vertex_cover(G0)
for variant in (PER_VERTEX, SHARED):
    inst = reduce_vertex_cover(G0, len(cover), variant)
    ok = is_offensive_alliance(inst.graph, inst.witness(cover)).verdict
    print(f"vertex cover of K4, {variant}: |V'|={inst.graph.n}, budget={inst.budget}, planted {ok}")

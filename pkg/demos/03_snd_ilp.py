"""
Few vertex types: the integer program
=====================================

Vertices with identical signed neighbourhoods are grouped into classes.
The optimum is then the solution of a small integer program whose size
depends on the number of classes, not on n.
"""
from sak import build_oa_ilp, decode_solution, gen_complete, min_offensive_alliance_bruteforce, snd_partition, solve_ilp

# a blown-up complete graph: many vertices, few classes
G = gen_complete((4, 5, 6), "balanced")
part = snd_partition(G)
print(f"n = {G.n}, classes = {part.k}, kinds = {part.kinds}")

model = build_oa_ilp(part)
print(model.to_lp())

sol = solve_ilp(model)
S = decode_solution(G, part, sol)
print("ILP optimum", sol.objective, "after", sol.nodes, "nodes; alliance", sorted(S))
print("exhaustive search:", min_offensive_alliance_bruteforce(G).optimum)

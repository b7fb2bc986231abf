"""
Dynamic programming over a domino decomposition
===============================================

Every vertex sits in at most two adjacent bags. Paths, cycles and
caterpillars all have narrow decompositions of this kind.
"""
import random

from sak import dp_solve, min_offensive_alliance_bruteforce, validate_domino
from sak.corpus import signed_caterpillar, signed_cycle, signed_path

rng = random.Random(4)
for name, (G, D) in [
    ("path", signed_path(12, rng)),
    ("cycle", signed_cycle(14, rng)),
    ("caterpillar", signed_caterpillar(5, rng)),
]:
    width = validate_domino(G, D)
    dp = dp_solve(G, D)
    ref = min_offensive_alliance_bruteforce(G)
    print(f"{name:<12} n={G.n:<3} bags={len(D.bags):<3} width={width}  dp={dp.optimum}  search={ref.optimum}")

"""
Closed forms on complete signed graphs
======================================

Balanced and anti-balanced complete graphs have optimum sizes that depend
only on the part sizes. We compare them to exhaustive search.
"""
from sak import aso_anti_balanced, aso_balanced, classify_complete, gen_complete, min_offensive_alliance_bruteforce

for parts in [(3,), (1, 1, 1), (2, 3), (1, 2, 4), (2, 2, 2, 1)]:
    for mode in ("balanced", "anti"):
        G = gen_complete(parts, mode)
        cls = classify_complete(G)
        if mode == "balanced":
            value, S = aso_balanced(cls)
            case = ""
        else:
            value, S, case = aso_anti_balanced(cls)
        ref = min_offensive_alliance_bruteforce(G).optimum
        print(f"{str(parts):<14} {mode:<9} closed={value:<3} search={ref:<3} {case}")

"""
Checking alliances on the seven-vertex example
==============================================

The same underlying graph, first without signs and then with signs.
A set that is optimal in one setting can be rejected in the other.
"""
from sak import is_offensive_alliance, is_offensive_alliance_unsigned, min_offensive_alliance_bruteforce
from sak.corpus import SEVEN, idx, seven_vertex_signed, seven_vertex_unsigned
from sak.exact import min_offensive_alliance_unsigned


def show(cert, labels):
    names = "{" + ",".join(labels[v] for v in sorted(cert.alliance)) + "}"
    print(f"  {names:<16} {cert.verdict}")
    for v in cert.violations:
        print(f"      {labels[v.vertex]} fails {v.condition}: {v.profile}")


G0 = seven_vertex_unsigned()
print("unsigned optimum:", sorted(SEVEN[v] for v in min_offensive_alliance_unsigned(G0)))
for names in (("v1", "v2", "v3"), ("v1", "v3", "v4", "v5")):
    show(is_offensive_alliance_unsigned(G0, idx(SEVEN, *names)), SEVEN)

G = seven_vertex_signed()
res = min_offensive_alliance_bruteforce(G)
print("\nsigned optimum:", res.optimum, sorted(SEVEN[v] for v in res.alliance))
for names in (("v1", "v3", "v4", "v5"), ("v1", "v2", "v3"), ("v1", "v3", "v4", "v6")):
    show(is_offensive_alliance(G, idx(SEVEN, *names)), SEVEN)

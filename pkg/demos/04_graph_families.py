"""
Graph families
==============

Generators return the graph, optional lists and predicted coloring, and a set
of claims that can be checked with the solver.
"""

from uklc.constructions import FAMILIES, check_claims, find_induced_k4, gen_figure1_chain, gen_gadget, gen_Hn
from uklc.graph import average_degree, is_k_regular

print(sorted(FAMILIES))

# gadgets: k+1 glued circulants whose k-lists force one coloring
for k, n in [(2, 2), (2, 3), (3, 2)]:
    inst = gen_gadget(k, n)
    print(k, n, inst.graph.n, average_degree(inst.graph),
          [c["status"] for c in check_claims(inst)])

# H_n is 4-regular and contains K4s with one outside neighbour per vertex
H = gen_Hn(2)
print(is_k_regular(H.graph, 4), find_induced_k4(H.graph))

# the planar chain starts out UNVERIFIED; the solver settles it
chain = gen_figure1_chain(3)
print(chain.claims, check_claims(chain))

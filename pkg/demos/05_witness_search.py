"""
Searching for uniquely colorable list assignments
=================================================

The search runs over list assignments up to renaming of colours and prunes
branches whose prefix already has two colorings for every boundary pattern.
Results are tri-state: found, exhausted, or out of budget.
"""

from uklc.constructions import gen_complement_c6, gen_complete, gen_diamond, gen_Hn
from uklc.search import SearchBudget, find_witness, iter_canonical_assignments

# 2-lists over 3 colours on two vertices, one representative per relabelling
print(list(iter_canonical_assignments(2, 2, 3)))

for name, inst in [("diamond", gen_diamond()), ("K4", gen_complete(4)),
                   ("complement of C6", gen_complement_c6())]:
    res = find_witness(inst.graph, 2)
    print(name, res.status.value, "t =", res.t, "definitive:", res.definitive)
    if res.lists is not None:
        print("  lists", res.lists, "coloring", res.coloring)

# k = 3 negatives only cover the colours searched
print(find_witness(gen_complete(4).graph, 3).to_json())

# a tiny node budget is reported as such, never as a negative
print(find_witness(gen_Hn(1).graph, 2, SearchBudget(node_budget=50)).status)

# same answer with worker processes
print(find_witness(gen_Hn(1).graph, 2, jobs=2).lists == find_witness(gen_Hn(1).graph, 2).lists)

"""
The directing procedure
=======================

Starting from a proper coloring, edges get oriented by two local rules.  On a
uniquely colorable instance no edge ends up directed both ways and every
vertex keeps an escape edge towards each alternative colour.  When that fails
the orientation points at a second coloring.
"""

from uklc.constructions import gen_gadget
from uklc.directing import (
    bidirectional_edges,
    extract_alternate_coloring,
    flow_report,
    lemma2_violations,
    run_directing,
)
from uklc.graph import build_graph
from uklc.solver import ListAssignment

# a uniquely 2-list colorable gadget
inst = gen_gadget(2, 2)
G, L, c = inst.graph, inst.lists, inst.predicted_coloring
state = run_directing(G, L, c)
print("passes:", state.iterations, "converged:", state.converged)
print("both ways:", bidirectional_edges(state))
print("deficits:", lemma2_violations(state, G, L, c))

# in/out flow balances and every vertex has non-negative slack
report = flow_report(state, G, L, c, k=2)
print("slack:", report.slack, "net inflow:", report.net_inflow)

# a path with identical lists: the middle vertex sees both ends pointing at it,
# so it could take their colour if they swapped theirs
P3 = build_graph(3, [(0, 1), (1, 2)])
L3 = ListAssignment.uniform(3, [1, 2])
c3 = (1, 2, 1)
state = run_directing(P3, L3, c3)
deficit = lemma2_violations(state, P3, L3, c3)[0]
print("deficit", deficit, "->", extract_alternate_coloring(P3, L3, c3, state, deficit))

# the audits are necessary conditions only: C4 with lists {1, 2} has two
# colorings yet the procedure directs nothing
C4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
L4 = ListAssignment.uniform(4, [1, 2])
state = run_directing(C4, L4, (1, 2, 1, 2))
print(state.marks, lemma2_violations(state, C4, L4, (1, 2, 1, 2)))

"""
Counting and list-size audits
=============================

Regular graphs with k-lists either have no coloring or many; lists of varying
size need enough degree to pin a coloring; at the boundary every colour class
balances.
"""

import random

from uklc.certify import audit_theorem5, tight_equality_audit, varying_lists_necessary
from uklc.constructions import gen_complete
from uklc.graph import build_graph
from uklc.solver import ListAssignment

rng = random.Random(0)
K6 = gen_complete(6).graph
for _ in range(5):
    L = ListAssignment(rng.sample(range(1, 8), 5) for _ in range(6))
    print(audit_theorem5(K6, L).to_json())

# sum of d(v) - 2(|L(v)| - 1) below zero: no unique coloring possible
P3 = build_graph(3, [(0, 1), (1, 2)])
print(varying_lists_necessary(P3, ListAssignment([[1, 2], [1, 2, 3], [1, 2]])))

# an edge with lists {1} and {1, 2} sits exactly on the boundary
edge = build_graph(2, [(0, 1)])
print(tight_equality_audit(edge, ListAssignment([[1], [1, 2]]), (1, 2)))

"""
m-numbers
=========

m(G) is the least k with property M(k).  Certificates give upper bounds,
witnesses give lower bounds; when they meet the value is determined.
"""

from uklc.constructions import (
    gen_complement_c6,
    gen_complete,
    gen_complete_bipartite,
    gen_cycle,
    gen_petersen,
)
from uklc.search import conjecture_scan, m_number_bounds

for name, inst in [("K4", gen_complete(4)), ("K3,3", gen_complete_bipartite(3, 3)),
                   ("C5", gen_cycle(5)), ("complement of C6", gen_complement_c6()),
                   ("Petersen", gen_petersen())]:
    b = m_number_bounds(inst.graph)
    print(f"{name:18s} {b.m_lower} <= m <= {b.m_upper}  ({b.upper_source})")

# graphs of average degree exactly 2k - 2 are the open boundary case
print(conjecture_scan(2, [gen_cycle(n).graph for n in range(3, 11)]).to_json())

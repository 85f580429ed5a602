"""
Proper list colorings
=====================

A list assignment gives every vertex its own set of allowed colours.  The
solver enumerates proper colorings in a fixed order and decides whether
exactly one exists.
"""

from uklc.graph import build_graph
from uklc.solver import ListAssignment, count_colorings, enumerate_colorings, uniqueness

# a triangle with a pendant vertex
G = build_graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])

# the same two colours everywhere: a triangle cannot be coloured
L = ListAssignment.uniform(4, [1, 2])
print(uniqueness(G, L).verdict)

# three colours: six colorings of the triangle, two choices for the pendant
L = ListAssignment.uniform(4, [1, 2, 3])
print(count_colorings(G, L))

# tighter lists force a single coloring
L = ListAssignment([[1], [1, 2], [2, 3], [2, 3]])
u = uniqueness(G, L)
print(u.verdict, u.coloring)

# enumeration stops at the cap and says whether it saw everything
found, exhausted = enumerate_colorings(G, ListAssignment.uniform(4, [1, 2, 3]), cap=5)
print(len(found), exhausted)

"""
The small-graph catalog
=======================

Every graph on up to six vertices, one per isomorphism class.  Edge sets are
bitmasks; numpy takes the minimum over all vertex permutations at once.
"""

from uklc.catalog import canonical_masks, graphs
from uklc.certify import certify_block_m2
from uklc.search import find_witness

print([len(canonical_masks(n)) for n in range(1, 7)])
print([len(graphs(n, connected=True)) for n in range(1, 7)])

# connected 5-vertex graphs that are uniquely 2-list colorable
for G in graphs(5, connected=True):
    if certify_block_m2(G) is None:
        print(G.edges, find_witness(G, 2).lists)

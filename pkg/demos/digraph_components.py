"""Superpose k configurations into a coloured digraph and sort its components.

Isolated vertices that sit in two B-sets are Type 1, a single cycle of one
permutation is Type 2, and everything else is Type 3.  A Type 3 component
shrinks to a reduced core once the vertices that belong to only one
permutation are spliced out.  expand_type3 puts them back.
"""

from charlier_gf.configs import (
    CharlierConfig,
    DigraphTuple,
    classify,
    component_weight,
    components,
    dump_digraph,
    expand_type3,
    extract_insertions,
    multilinear_ring,
    reduce_type3,
    superpose,
    tuple_weight,
)

n12 = {5, 8, 9, 11, 14, 16, 17}
n13 = {1, 2, 6, 12, 15}
n23 = {3, 4, 7, 10, 13, 18}
tup = DigraphTuple.from_blocks(
    3,
    {(1, 2): n12, (1, 3): n13, (2, 3): n23},
    [
        CharlierConfig.from_cycles(n12 | n13, [(9, 16, 15), (1, 12, 11, 8)]),
        CharlierConfig.from_cycles(n12 | n23, [(5, 17, 8, 11), (3, 10, 7, 4, 18)]),
        CharlierConfig.from_cycles(n13 | n23, [(6, 13), (1, 10, 7, 18, 4)]),
    ],
)
ring = multilinear_ring(3)
graph = superpose(tup)

product = ring.one()
for comp in components(graph):
    w = component_weight(comp, ring)
    product = product * w
    print(f"{classify(comp)!s:12s} vertices={sorted(comp.vertices)}  weight={w}")
assert product == tuple_weight(tup, ring)
print("product of component weights equals the tuple weight")

big = max(components(graph), key=lambda c: len(c.vertices))
core = reduce_type3(big)
print()
print(f"largest component has {len(big.vertices)} vertices, its reduced core has {len(core.vertices)}:")
print(dump_digraph(core))
assert expand_type3(core, extract_insertions(big)) == big
print("expanding the core with the spliced-out vertices restores the component")

"""Effect of the merge exponent: trade hierarchy depth for edge fan-out.

With merge exponent m, hierarchy edges are emitted only every m-th
partition level, so each step merges 2^m bins into one. Larger m gives
shorter hop paths (fewer hierarchy levels to climb) at the same O(N) edge
budget. The diameter over tree edges alone is bounded by 2(ceil(k/m)+1).

Run:  python demos/02_level_skipping.py
"""

import numpy as np

from treewire import RewireParams, build_partition_tree, emit_tree_edges, hop_diameter

rng = np.random.default_rng(23)
n = 2048
points = rng.random((n, 2))
levels = 11  # 2^11 = 2048 singleton leaf bins

tree = build_partition_tree(points, levels=levels)
print(f"{n} random nodes, {levels} split levels\n")
print(f"{'m':>3} {'merged bins':>12} {'tree edges':>11} {'diameter':>9} {'bound':>6}")
for m in (1, 2, 3, 4):
    edge_set = emit_tree_edges(tree, points, RewireParams(levels, m))
    diameter = hop_diameter(edge_set.edges, n)
    bound = 2 * (int(np.ceil(levels / m)) + 1)
    print(f"{m:>3} {2 ** m:>12} {len(edge_set):>11} {diameter:>9} {bound:>6}")

print("\nreference settings from irregular-mesh experiments:")
print("  dense meshes (~16-30K nodes): 10 splits, 8 bins merged per step (m=3)")
print("  small meshes: 4 splits, adjacent levels connected directly (m=1)")
for k, m in [(10, 3), (4, 1)]:
    params = RewireParams(k, m)
    tree_k = build_partition_tree(points, levels=k)
    edge_set = emit_tree_edges(tree_k, points, params)
    print(f"  k={k}, m={m}: {len(edge_set)} tree edges on this cloud, "
          f"diameter {hop_diameter(edge_set.edges, n)}")

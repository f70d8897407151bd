"""Walk through hierarchical tree-edge rewiring on a small irregular cloud.

The construction has three steps: recursively split the nodes into
balanced bins at the median of the highest-variance axis, pick each bin's
center node (closest to the bin's coordinate mean), then connect centers
across levels plus a star inside every leaf bin. The added edges give any
pair of nodes a short path through the hierarchy.

Run:  python demos/01_tree_rewiring.py
"""

import numpy as np

from treewire import (
    LeafBin,
    Mesh,
    RewireParams,
    build_partition_tree,
    center_node,
    delaunay_triangulate,
    emit_tree_edges,
    hop_diameter,
    rewire,
)

rng = np.random.default_rng(11)

# an irregular cloud: a dense blob plus a sparse ring around it
blob = rng.normal(0.0, 0.12, size=(120, 2))
angles = rng.uniform(0, 2 * np.pi, size=60)
ring = np.stack([np.cos(angles), np.sin(angles)], axis=1)
ring += rng.normal(0.0, 0.03, size=ring.shape)
points = np.concatenate([blob, ring])
n = len(points)
print(f"cloud: {n} nodes, dense center + sparse ring")

# mesh the cloud the way irregular PDE meshes are built
tri = delaunay_triangulate(points)
mesh = Mesh(points, tri.edges())
print(f"mesh:  {mesh.n_edges} Delaunay edges, "
      f"hop diameter {hop_diameter(mesh.edges, n)}")

# 1. the partition tree
levels = 4
tree = build_partition_tree(points, levels=levels)


def describe(node, depth, path):
    pad = "  " * depth
    if isinstance(node, LeafBin):
        print(f"{pad}{path or 'root'}: leaf bin, {node.nodes.size} nodes, "
              f"center {center_node(node.nodes, points)}")
    else:
        axis = "xy"[node.dimension]
        print(f"{pad}{path or 'root'}: split {axis} at {node.value:+.3f}, "
              f"{node.nodes.size} nodes, center {center_node(node.nodes, points)}")
        if depth < 2:  # keep the printout short
            describe(node.lo, depth + 1, path + "L")
            describe(node.hi, depth + 1, path + "H")


print("\npartition tree (top levels):")
describe(tree.root, 0, "")

# 2. tree edges alone already connect everything with few hops
tree_edges = emit_tree_edges(tree, points, RewireParams(levels, 1))
print(f"\ntree edges only: {len(tree_edges)} edges "
      f"(bound 3N = {3 * n}), diameter "
      f"{hop_diameter(tree_edges.edges, n)} "
      f"(bound 2(k+1) = {2 * (levels + 1)})")

# 3. the full rewiring: original mesh edges plus tree edges
tagged = rewire(mesh, RewireParams(levels, 1))
n_tree = int(tagged.tree_mask.sum())
print(f"rewired mesh: {len(tagged)} edges total, {n_tree} tagged TREE, "
      f"diameter {hop_diameter(tagged.edges, n)}")

# displacement attributes let a message-passing network tell the long
# tree edges from short mesh edges
lengths = np.linalg.norm(tagged.attributes, axis=1)
print(f"edge lengths: mesh median {np.median(lengths[tagged.mesh_mask]):.3f}, "
      f"tree median {np.median(lengths[tagged.tree_mask]):.3f}")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, axes = plt.subplots(1, 2, figsize=(11, 5.5), sharex=True, sharey=True)
    for ax, mask, title in [
        (axes[0], tagged.mesh_mask, "mesh edges"),
        (axes[1], tagged.tree_mask, "added tree edges"),
    ]:
        for u, v in tagged.edges[mask]:
            ax.plot(points[[u, v], 0], points[[u, v], 1],
                    color="steelblue", lw=0.6, alpha=0.7)
        ax.scatter(points[:, 0], points[:, 1], s=6, color="black", zorder=3)
        ax.set_title(title)
        ax.set_aspect("equal")
    fig.tight_layout()
    fig.savefig("demo_tree_rewiring.png", dpi=130)
    print("\nwrote demo_tree_rewiring.png")
except ImportError:
    pass

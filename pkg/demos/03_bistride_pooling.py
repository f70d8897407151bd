"""Bi-stride pooling: coarsen a mesh graph by keeping every second BFS front.

Each stage enhances the adjacency with 2-hop edges (boolean A + A^2), runs
a BFS from a geometric seed, and keeps the nodes on even fronts. The
enhancement is what guarantees the kept nodes stay connected. Stacking
stages yields a pyramid whose node count shrinks roughly geometrically.

Run:  python demos/03_bistride_pooling.py
"""

import numpy as np

from treewire import bfs_fronts, build_pyramid, default_seeds, enhance_adjacency


def grid(side):
    idx = lambda r, c: r * side + c
    edges = [(idx(r, c), idx(r, c + 1)) for r in range(side) for c in range(side - 1)]
    edges += [(idx(r, c), idx(r + 1, c)) for r in range(side - 1) for c in range(side)]
    pos = np.array([[r, c] for r in range(side) for c in range(side)], float)
    return pos, np.asarray(edges, dtype=np.int64)


positions, edges = grid(16)
n = len(positions)

# one stage by hand: enhancement, fronts, parity
seeds = default_seeds(edges, n, positions)
fronts = bfs_fronts(edges, n, seeds)
enhanced = enhance_adjacency(edges, n)
print(f"16x16 grid: {n} nodes, {len(edges)} edges")
print(f"seed (component center): {seeds.tolist()}")
print(f"2-hop enhancement: {len(edges)} -> {len(enhanced)} edges")
print(f"front histogram: {np.bincount(fronts).tolist()}")
print(f"even-front nodes kept: {int((fronts % 2 == 0).sum())}")

# the full pyramid
pyramid = build_pyramid(edges, positions, stages=5)
print("\npyramid:")
for i, stage in enumerate(pyramid.stages, 1):
    degrees = np.bincount(stage.coarse_edges.ravel(), minlength=stage.n_coarse) \
        if stage.n_coarse else np.zeros(0, int)
    isolated = int((degrees == 0).sum()) if stage.n_coarse > 1 else 0
    print(f"  stage {i}: {stage.n_fine:>4} -> {stage.n_coarse:>4} nodes, "
          f"{len(stage.coarse_edges):>5} coarse edges, isolated {isolated}")

# every fine node knows its nearest kept node, for feature scatter/gather
stage1 = pyramid.stages[0]
sample = [(f, int(stage1.kept_nodes[stage1.fine_to_coarse[f]]))
          for f in range(0, n, 37)]
print(f"\nfine -> nearest-kept samples (stage 1): {sample}")

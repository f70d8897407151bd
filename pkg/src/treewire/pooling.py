"""Bi-stride multiscale pooling: the graph-structural half.

Coarsening keeps the nodes on every second BFS front (front 0 = seeds)
after enhancing the adjacency with 2-hop connections (boolean A + A^2,
diagonal removed). The enhancement guarantees that adjacent fronts two
apart share an edge, so pooling a connected graph never strands a kept
node. No feature aggregation happens here; the output is structure only.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from .model import as_edges, as_positions
from .rewire import center_node

__all__ = [
    "PoolStage",
    "Pyramid",
    "bfs_fronts",
    "build_pyramid",
    "enhance_adjacency",
    "pool_stage",
]


@dataclass(frozen=True)
class PoolStage:
    """One coarsening step of the pooling pyramid.

    kept_nodes: fine indices of the coarse level (even BFS fronts), ascending.
    coarse_edges: (E, 2) unordered pairs over re-indexed kept nodes.
    fine_to_coarse: coarse index of each fine node's nearest kept node
        (hop distance on the enhanced graph, ties to the lowest fine index).
    fronts: BFS front index of every fine node on the input graph.
    """

    kept_nodes: np.ndarray
    coarse_edges: np.ndarray
    fine_to_coarse: np.ndarray
    fronts: np.ndarray

    @property
    def front_parity(self) -> np.ndarray:
        return (self.fronts % 2).astype(np.uint8)

    @property
    def n_fine(self) -> int:
        return self.fronts.shape[0]

    @property
    def n_coarse(self) -> int:
        return self.kept_nodes.shape[0]


@dataclass(frozen=True)
class Pyramid:
    """Ordered pooling stages; node count strictly decreases per stage."""

    stages: tuple[PoolStage, ...]

    def __len__(self) -> int:
        return len(self.stages)


def _adjacency(edges: np.ndarray, n_nodes: int) -> sp.csr_matrix:
    if edges.shape[0] == 0:
        return sp.csr_matrix((n_nodes, n_nodes), dtype=np.int64)
    data = np.ones(2 * edges.shape[0], dtype=np.int64)
    rows = np.concatenate([edges[:, 0], edges[:, 1]])
    cols = np.concatenate([edges[:, 1], edges[:, 0]])
    a = sp.coo_matrix((data, (rows, cols)), shape=(n_nodes, n_nodes), dtype=np.int64)
    a.sum_duplicates()
    return a.tocsr()


def _pairs(adj: sp.spmatrix) -> np.ndarray:
    """Upper-triangle edge pairs of a symmetric boolean adjacency, sorted."""
    coo = sp.triu(adj, k=1).tocoo()
    if coo.nnz == 0:
        return np.empty((0, 2), dtype=np.int64)
    pairs = np.stack([coo.row.astype(np.int64), coo.col.astype(np.int64)], axis=1)
    return pairs[np.lexsort((pairs[:, 1], pairs[:, 0]))]


def bfs_fronts(edges, n_nodes: int, seeds) -> np.ndarray:
    """Hop distance of every node from the nearest seed (seeds get front 0).

    Raises if any node is unreachable from every seed.
    """
    edges = as_edges(edges)
    seeds = np.unique(np.asarray(seeds, dtype=np.int64).ravel())
    if seeds.size == 0:
        raise ValueError("seeds must be non-empty")
    if seeds.min() < 0 or seeds.max() >= n_nodes:
        raise ValueError("seed index out of range")
    adj = _adjacency(edges, n_nodes)
    fronts = np.full(n_nodes, -1, dtype=np.int64)
    frontier = np.zeros(n_nodes, dtype=bool)
    frontier[seeds] = True
    level = 0
    while frontier.any():
        fronts[frontier] = level
        reached = (adj @ frontier.astype(np.int64)) > 0
        frontier = reached & (fronts == -1)
        level += 1
    uncovered = np.flatnonzero(fronts == -1)
    if uncovered.size:
        raise ValueError(f"uncovered component: node {uncovered[0]} unreachable from seeds")
    return fronts


def enhance_adjacency(edges, n_nodes: int) -> np.ndarray:
    """Add an edge between every pair of nodes at hop distance two.

    Equivalent to boolean A + A^2 with the diagonal removed. Returns the
    enhanced undirected edge list, canonically sorted.
    """
    edges = as_edges(edges)
    adj = _adjacency(edges, n_nodes)
    two_hop = adj @ adj
    enhanced = ((adj + two_hop) > 0).tolil()
    enhanced.setdiag(False)
    return _pairs(enhanced.tocsr())


def default_seeds(edges, n_nodes: int, positions) -> np.ndarray:
    """One seed per connected component: the component's center node.

    Geometry-aware and deterministic; pooling results depend on the seed
    choice, so the policy is fixed here rather than left to callers.
    """
    from .metrics import connected_components

    positions = as_positions(positions)
    comp_ids, count = connected_components(edges, n_nodes)
    return np.sort([
        center_node(np.flatnonzero(comp_ids == c), positions) for c in range(count)
    ]).astype(np.int64)


def _nearest_kept(adj: sp.csr_matrix, kept: np.ndarray, fronts_to_kept: np.ndarray) -> np.ndarray:
    """Owner of each node: nearest kept node, ties to the lowest fine index."""
    n = adj.shape[0]
    owner = np.full(n, n, dtype=np.int64)  # sentinel above any real index
    owner[kept] = kept
    src, dst = adj.nonzero()
    max_level = int(fronts_to_kept.max(initial=0))
    for level in range(1, max_level + 1):
        step = (fronts_to_kept[src] == level - 1) & (fronts_to_kept[dst] == level)
        np.minimum.at(owner, dst[step], owner[src[step]])
    return owner


def pool_stage(edges, positions, seeds=None) -> PoolStage:
    """One bi-stride coarsening step.

    Fronts are computed on the input graph; the 2-hop enhanced graph
    supplies the coarse adjacency between kept (even-front) nodes. With a
    connected enhanced graph and at least two kept nodes, every kept node
    keeps a neighbor: a node at front 2f has an original-graph path of two
    hops to some node at front 2f-2, which the enhancement turns into an
    edge.
    """
    positions = as_positions(positions)
    edges = as_edges(edges)
    n = positions.shape[0]
    if seeds is None:
        seeds = default_seeds(edges, n, positions)

    fronts = bfs_fronts(edges, n, seeds)
    enhanced = enhance_adjacency(edges, n)
    kept = np.flatnonzero(fronts % 2 == 0).astype(np.int64)

    coarse_of = np.full(n, -1, dtype=np.int64)
    coarse_of[kept] = np.arange(kept.size)

    both_kept = (coarse_of[enhanced[:, 0]] >= 0) & (coarse_of[enhanced[:, 1]] >= 0)
    coarse_edges = coarse_of[enhanced[both_kept]]
    coarse_edges = np.sort(coarse_edges, axis=1)
    if coarse_edges.shape[0]:
        coarse_edges = coarse_edges[np.lexsort((coarse_edges[:, 1], coarse_edges[:, 0]))]

    enhanced_adj = _adjacency(enhanced, n)
    dist_to_kept = bfs_fronts(enhanced, n, kept)
    owner = _nearest_kept(enhanced_adj, kept, dist_to_kept)
    return PoolStage(kept, coarse_edges, coarse_of[owner], fronts)


def build_pyramid(edges, positions, stages: int) -> Pyramid:
    """Iterate pool_stage up to ``stages`` times or until one node remains.

    A stage that would not shrink the graph (possible only when every
    component is a single node) terminates the pyramid without being added,
    except for the trivial single-node input which yields one stage.
    """
    if stages < 1:
        raise ValueError(f"stages must be >= 1, got {stages}")
    positions = as_positions(positions)
    edges = as_edges(edges)
    built: list[PoolStage] = []
    for _ in range(stages):
        stage = pool_stage(edges, positions, seeds=None)
        if stage.n_coarse == stage.n_fine and stage.n_fine > 1:
            break
        built.append(stage)
        if stage.n_coarse <= 1:
            break
        positions = positions[stage.kept_nodes]
        edges = stage.coarse_edges
    return Pyramid(tuple(built))

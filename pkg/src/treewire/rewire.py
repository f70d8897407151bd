"""Hierarchical tree-edge rewiring for mesh graphs.

Nodes are split recursively into balanced bins by cutting at the median of
the highest-variance coordinate axis. Each bin is represented by its center
node (the node closest to the bin's coordinate mean). Edges are then added
between center nodes across levels of the resulting binary partition tree,
plus a star from every leaf bin's center to the other nodes of that bin.
Supplementing a mesh graph with these edges bounds the hop distance between
any two nodes by a small multiple of the tree depth while adding only
O(N) edges.

The level spacing of the hierarchy edges is controlled by a merge exponent
m: only every m-th partition level emits edges, so each step merges 2^m
bins into one and the hierarchy gets shallower but denser per step.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import EdgeTag, Mesh, TaggedEdgeSet, as_positions, validate_mesh

__all__ = [
    "LeafBin",
    "PartitionTree",
    "RewireParams",
    "Split",
    "build_partition_tree",
    "center_node",
    "edge_attributes",
    "emit_tree_edges",
    "rewire",
    "split_bin",
]


@dataclass(frozen=True)
class RewireParams:
    """Rewiring hyperparameters.

    levels: number k of recursive median splits (tree depth).
    merge_exponent: level spacing m of hierarchy-edge emission; each step
        merges 2^m bins. m = 1 connects adjacent levels directly.
    """

    levels: int
    merge_exponent: int = 1

    def __post_init__(self):
        if self.levels < 1:
            raise ValueError(f"levels must be >= 1, got {self.levels}")
        if self.merge_exponent < 1:
            raise ValueError(f"merge_exponent must be >= 1, got {self.merge_exponent}")


@dataclass(frozen=True)
class LeafBin:
    """Terminal bin of the partition tree (ascending node indices)."""

    nodes: np.ndarray


@dataclass(frozen=True)
class Split:
    """Internal tree node: a median cut of ``nodes`` along one axis.

    ``lo`` holds the nodes below the cut rank, ``hi`` the nodes at or above
    it; their sizes differ by at most one.
    """

    dimension: int
    value: float
    lo: "Split | LeafBin"
    hi: "Split | LeafBin"
    nodes: np.ndarray


@dataclass(frozen=True)
class PartitionTree:
    """Binary space partition of node indices, ``levels`` splits deep.

    Paths terminate early only when a bin reaches size 1.
    """

    root: Split | LeafBin
    levels: int


def split_bin(bin_nodes, positions) -> tuple[int, float, np.ndarray, np.ndarray]:
    """Split a bin in half at the median of its highest-variance axis.

    The split is rank-based: nodes are stably ordered by (coordinate,
    node index) along the chosen axis and cut so the upper bin receives
    ceil(n/2) nodes. This reproduces a plain median split for distinct
    coordinates and stays balanced under duplicates. Ties in the variance
    comparison resolve to the lowest axis index.

    Returns (dimension, median coordinate, lower bin, upper bin); the bins
    are ascending index arrays.
    """
    positions = np.asarray(positions)
    nodes = np.sort(np.asarray(bin_nodes, dtype=np.int64).ravel())
    if nodes.size < 2:
        raise ValueError(f"unsplittable bin of size {nodes.size}")
    coords = positions[nodes]
    dim = int(np.argmax(coords.var(axis=0)))
    axis = coords[:, dim]
    order = np.argsort(axis, kind="stable")
    cut = nodes.size // 2
    lo = np.sort(nodes[order[:cut]])
    hi = np.sort(nodes[order[cut:]])
    return dim, float(np.median(axis)), lo, hi


def center_node(bin_nodes, positions) -> int:
    """The node of a bin closest to the bin's coordinate mean.

    Ties break to the lowest node index.
    """
    positions = np.asarray(positions)
    nodes = np.sort(np.asarray(bin_nodes, dtype=np.int64).ravel())
    if nodes.size == 0:
        raise ValueError("empty bin")
    if nodes.size <= 2:
        # 1 node: trivially the center. 2 nodes: both are exactly
        # equidistant from the midpoint, so the tie-break applies; deciding
        # by computed float distances would depend on rounding.
        return int(nodes[0])
    coords = positions[nodes]
    d2 = ((coords - coords.mean(axis=0)) ** 2).sum(axis=1)
    return int(nodes[np.argmin(d2)])


def build_partition_tree(positions, levels: int) -> PartitionTree:
    """Apply split_bin recursively ``levels`` times, starting from all nodes.

    Bins of size 1 stop splitting early, so for N < 2^levels the tree is
    ragged. Deterministic for fixed input.
    """
    positions = as_positions(positions)
    if levels < 1:
        raise ValueError(f"levels must be >= 1, got {levels}")
    if positions.shape[0] < 1:
        raise ValueError("at least one node required")

    def build(nodes: np.ndarray, depth: int):
        if depth == levels or nodes.size < 2:
            return LeafBin(nodes)
        dim, value, lo, hi = split_bin(nodes, positions)
        return Split(dim, value, build(lo, depth + 1), build(hi, depth + 1), nodes)

    return PartitionTree(build(np.arange(positions.shape[0], dtype=np.int64), 0), levels)


def _selected_levels(levels: int, merge_exponent: int) -> list[int]:
    # Emission levels 0, m, 2m, ...; when m does not divide k the deepest
    # step spans the remaining k mod m levels.
    sel = list(range(0, levels + 1, merge_exponent))
    if sel[-1] != levels:
        sel.append(levels)
    return sel


def emit_tree_edges(tree: PartitionTree, positions, params: RewireParams) -> TaggedEdgeSet:
    """Emit the hierarchy edges of a partition tree as a TREE-tagged edge set.

    Two groups of undirected edges are produced:

    * leaf stars: every node of each leaf bin connects to that bin's
      center node (singleton bins emit nothing);
    * level merges: for consecutive selected levels (spacing m), the
      center node of each bin connects to the center nodes of its
      descendant bins at the next selected level. Paths that end early at
      a size-1 bin contribute that leaf instead of deeper descendants.

    Self-pairs are dropped, duplicates removed, and the result is sorted
    canonically by (u, v).
    """
    positions = as_positions(positions)

    centers: dict[int, int] = {}

    def center(node) -> int:
        c = centers.get(id(node))
        if c is None:
            c = center_node(node.nodes, positions)
            centers[id(node)] = c
        return c

    by_depth: dict[int, list] = {}

    def walk(node, depth):
        by_depth.setdefault(depth, []).append(node)
        if isinstance(node, Split):
            walk(node.lo, depth + 1)
            walk(node.hi, depth + 1)

    walk(tree.root, 0)

    chunks: list[np.ndarray] = []

    # leaf stars
    for depth_nodes in by_depth.values():
        for node in depth_nodes:
            if isinstance(node, LeafBin) and node.nodes.size > 1:
                c = center(node)
                others = node.nodes[node.nodes != c]
                star = np.empty((others.size, 2), dtype=np.int64)
                star[:, 0] = np.minimum(others, c)
                star[:, 1] = np.maximum(others, c)
                chunks.append(star)

    # hierarchy merges between selected levels
    def descendants(node, depth, target):
        if depth == target or isinstance(node, LeafBin):
            yield node
            return
        yield from descendants(node.lo, depth + 1, target)
        yield from descendants(node.hi, depth + 1, target)

    sel = _selected_levels(tree.levels, params.merge_exponent)
    for a, b in zip(sel, sel[1:]):
        for parent in by_depth.get(a, ()):
            if isinstance(parent, LeafBin):
                continue
            cp = center(parent)
            pairs = [(min(cp, cc), max(cp, cc))
                     for child in descendants(parent, a, b)
                     if (cc := center(child)) != cp]
            if pairs:
                chunks.append(np.asarray(pairs, dtype=np.int64))

    if chunks:
        edges = np.unique(np.concatenate(chunks, axis=0), axis=0)
    else:
        edges = np.empty((0, 2), dtype=np.int64)
    return TaggedEdgeSet(edges, np.full(edges.shape[0], int(EdgeTag.TREE), np.uint8))


def edge_attributes(edge_set: TaggedEdgeSet, positions) -> TaggedEdgeSet:
    """Fill relative-displacement attributes: positions[v] - positions[u].

    The same formula applies to MESH and TREE edges, so added tree edges
    are distinguishable downstream only by displacement magnitude and tag.
    """
    positions = as_positions(positions)
    attr = positions[edge_set.edges[:, 1]] - positions[edge_set.edges[:, 0]]
    return TaggedEdgeSet(edge_set.edges, edge_set.tags, attr)


def rewire(mesh: Mesh, params: RewireParams) -> TaggedEdgeSet:
    """Supplement a mesh's edges with hierarchical tree edges.

    Returns the union of the original edges (tagged MESH) and the emitted
    tree edges (tagged TREE), with displacement attributes filled for every
    edge. A tree edge that coincides with an existing mesh pair is dropped;
    the MESH tag wins.
    """
    violations = validate_mesh(mesh)
    if violations:
        raise ValueError(f"invalid mesh: {violations[0]}")

    tree = build_partition_tree(mesh.positions, params.levels)
    tree_set = emit_tree_edges(tree, mesh.positions, params)

    mesh_edges = np.sort(mesh.edges, axis=1) if mesh.n_edges else mesh.edges
    tree_edges = tree_set.edges
    if mesh_edges.shape[0] and tree_edges.shape[0]:
        # drop TREE duplicates of existing MESH pairs
        n = mesh.n_nodes
        mesh_keys = mesh_edges[:, 0] * n + mesh_edges[:, 1]
        tree_keys = tree_edges[:, 0] * n + tree_edges[:, 1]
        tree_edges = tree_edges[~np.isin(tree_keys, mesh_keys)]

    edges = np.concatenate([mesh_edges, tree_edges], axis=0)
    tags = np.concatenate([
        np.full(mesh_edges.shape[0], int(EdgeTag.MESH), np.uint8),
        np.full(tree_edges.shape[0], int(EdgeTag.TREE), np.uint8),
    ])
    order = np.lexsort((tags, edges[:, 1], edges[:, 0]))
    combined = TaggedEdgeSet(edges[order], tags[order])
    return edge_attributes(combined, mesh.positions)

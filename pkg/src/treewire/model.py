"""Core data model: meshes, tagged edge sets, and graph reports.

All containers are immutable after construction (the backing numpy arrays
are marked read-only), so they can be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum

import numpy as np

__all__ = [
    "EdgeTag",
    "GraphReport",
    "Mesh",
    "TaggedEdgeSet",
    "UNREACHABLE",
    "validate_mesh",
]

#: Hop-diameter marker for graphs with more than one connected component.
UNREACHABLE = "unreachable"


class EdgeTag(IntEnum):
    """Origin of an edge: part of the input mesh, or an added tree edge."""

    MESH = 0
    TREE = 1


def _freeze(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


def as_positions(positions) -> np.ndarray:
    """Coerce to a read-only (N, D) float64 position array."""
    p = np.ascontiguousarray(positions, dtype=np.float64)
    if p.ndim == 1:
        p = p.reshape(-1, 1)
    if p.ndim != 2:
        raise ValueError(f"positions must be a 2-d array, got shape {p.shape}")
    return _freeze(p)


def as_edges(edges) -> np.ndarray:
    """Coerce to a read-only (E, 2) int64 edge array."""
    e = np.ascontiguousarray(edges, dtype=np.int64)
    if e.size == 0:
        e = e.reshape(0, 2)
    if e.ndim != 2 or e.shape[1] != 2:
        raise ValueError(f"edges must have shape (E, 2), got {e.shape}")
    return _freeze(e)


@dataclass(frozen=True)
class Mesh:
    """Node positions plus an undirected edge list.

    ``positions`` is (N, D) float64; ``edges`` is (E, 2) int64 holding
    unordered node-index pairs. Construction only coerces shapes; semantic
    invariants are checked by :func:`validate_mesh` so that invalid data
    can be represented and reported.
    """

    positions: np.ndarray
    edges: np.ndarray = field(default_factory=lambda: np.empty((0, 2), np.int64))

    def __post_init__(self):
        object.__setattr__(self, "positions", as_positions(self.positions))
        object.__setattr__(self, "edges", as_edges(self.edges))

    @property
    def n_nodes(self) -> int:
        return self.positions.shape[0]

    @property
    def dim(self) -> int:
        return self.positions.shape[1]

    @property
    def n_edges(self) -> int:
        return self.edges.shape[0]


@dataclass(frozen=True)
class TaggedEdgeSet:
    """Undirected edges carrying an origin tag and optional displacement attributes.

    Edges are stored canonically: each pair normalized to u < v and the list
    sorted by (u, v, tag). ``attributes``, when present, holds the relative
    displacement positions[v] - positions[u] for the stored orientation.
    """

    edges: np.ndarray                       # (E, 2) int64, u < v
    tags: np.ndarray                        # (E,)   uint8, EdgeTag values
    attributes: np.ndarray | None = None    # (E, D) float64

    def __post_init__(self):
        edges = as_edges(self.edges)
        tags = np.ascontiguousarray(self.tags, dtype=np.uint8)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "tags", _freeze(tags))
        if tags.shape != (edges.shape[0],):
            raise ValueError("tags length must equal edge count")
        if np.any(edges[:, 0] >= edges[:, 1]):
            raise ValueError("edges must be normalized to u < v (self-loops forbidden)")
        if edges.shape[0] > 1:
            key = np.lexsort((tags, edges[:, 1], edges[:, 0]))
            if np.any(key != np.arange(edges.shape[0])):
                raise ValueError("edges must be sorted by (u, v, tag)")
            same = np.all(np.diff(edges, axis=0) == 0, axis=1) & (np.diff(tags) == 0)
            if np.any(same):
                raise ValueError("duplicate (pair, tag) entries")
        if self.attributes is not None:
            attr = np.ascontiguousarray(self.attributes, dtype=np.float64)
            if attr.shape[0] != edges.shape[0]:
                raise ValueError("attribute count must equal edge count")
            object.__setattr__(self, "attributes", _freeze(attr))

    def __len__(self) -> int:
        return self.edges.shape[0]

    @property
    def tree_mask(self) -> np.ndarray:
        return self.tags == int(EdgeTag.TREE)

    @property
    def mesh_mask(self) -> np.ndarray:
        return self.tags == int(EdgeTag.MESH)

    def tree_edges(self) -> np.ndarray:
        """The (E_tree, 2) subset of edges tagged TREE."""
        return self.edges[self.tree_mask]

    def mesh_edges(self) -> np.ndarray:
        """The (E_mesh, 2) subset of edges tagged MESH."""
        return self.edges[self.mesh_mask]


@dataclass(frozen=True)
class GraphReport:
    """Connectivity, diameter, and degree diagnostics for one graph."""

    component_count: int
    component_ids: np.ndarray               # (N,) int64
    hop_diameter: int | str                 # UNREACHABLE when disconnected
    degree_histogram: dict[int, int]        # degree -> node count
    isolated_nodes: np.ndarray              # (I,) int64, degree-0 nodes

    def __post_init__(self):
        object.__setattr__(
            self, "component_ids",
            _freeze(np.ascontiguousarray(self.component_ids, dtype=np.int64)))
        object.__setattr__(
            self, "isolated_nodes",
            _freeze(np.ascontiguousarray(self.isolated_nodes, dtype=np.int64)))
        if (self.component_count > 1) != (self.hop_diameter == UNREACHABLE):
            raise ValueError("hop_diameter must be UNREACHABLE iff component_count > 1")


def validate_mesh(mesh: Mesh) -> list[str]:
    """Check every Mesh invariant; return a list of violations (empty = OK).

    Violations are data, not failures: an invalid mesh is reported, never
    raised. The check is side-effect free and idempotent.
    """
    violations: list[str] = []
    n, d = mesh.positions.shape
    if n < 1:
        violations.append("mesh has no nodes")
    if d < 1:
        violations.append("positions have no coordinate axes")
    bad = np.flatnonzero(~np.isfinite(mesh.positions).all(axis=1))
    violations.extend(f"non-finite coordinate at node {i}" for i in bad)

    edges = mesh.edges
    for e, (u, v) in enumerate(edges):
        if not (0 <= u < n and 0 <= v < n):
            violations.append(f"edge index out of range at edge {e}: ({u}, {v})")
        elif u == v:
            violations.append(f"self-loop at edge {e}")
    if edges.shape[0] > 1:
        norm = np.sort(edges, axis=1)
        _, first, counts = np.unique(norm, axis=0, return_index=True, return_counts=True)
        for i, c in zip(first, counts):
            if c > 1:
                u, v = norm[i]
                violations.append(f"duplicate unordered pair ({u}, {v})")
    return violations

"""Graph diagnostics: connectivity, hop diameter, degrees, node density.

These quantify what rewiring changes. The diameter routines work in hops
(unweighted shortest paths); the density estimator evaluates a Gaussian
kernel-density estimate of node positions on a regular grid, the standard
way to visualize where an irregular mesh concentrates resolution.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
import scipy.sparse.csgraph as csgraph

from .model import GraphReport, UNREACHABLE, as_edges, as_positions

__all__ = [
    "DensityGrid",
    "connected_components",
    "degree_report",
    "density_kde",
    "graph_report",
    "hop_diameter",
]

_BFS_CHUNK = 1024  # sources per all-pairs BFS block, bounds memory


def _csr(edges: np.ndarray, n_nodes: int) -> sp.csr_matrix:
    edges = as_edges(edges)
    if edges.shape[0] == 0:
        return sp.csr_matrix((n_nodes, n_nodes), dtype=np.int8)
    rows = np.concatenate([edges[:, 0], edges[:, 1]])
    cols = np.concatenate([edges[:, 1], edges[:, 0]])
    data = np.ones(rows.size, dtype=np.int8)
    return sp.coo_matrix((data, (rows, cols)), shape=(n_nodes, n_nodes)).tocsr()


def connected_components(edges, n_nodes: int) -> tuple[np.ndarray, int]:
    """Component id per node (0-based) and the number of components."""
    count, ids = csgraph.connected_components(_csr(edges, n_nodes), directed=False)
    return ids.astype(np.int64), int(count)


def hop_diameter(edges, n_nodes: int, samples: int | None = None) -> int | str:
    """Largest shortest-path hop count between any two nodes.

    With ``samples=None`` the exact diameter is computed by BFS from every
    node. Otherwise BFS runs from ``samples`` evenly strided source indices
    and the result is a lower bound on the true diameter. Returns
    UNREACHABLE for disconnected graphs (including in sampled mode: any
    source then fails to reach some node).
    """
    if n_nodes < 1:
        raise ValueError("graph must have at least one node")
    adj = _csr(edges, n_nodes)
    if samples is None:
        sources = np.arange(n_nodes)
    else:
        if samples < 1:
            raise ValueError(f"samples must be >= 1, got {samples}")
        stride = max(1, n_nodes // samples)
        sources = np.arange(0, n_nodes, stride)[:samples]
    best = 0
    for start in range(0, sources.size, _BFS_CHUNK):
        chunk = sources[start:start + _BFS_CHUNK]
        dist = csgraph.shortest_path(adj, method="D", unweighted=True,
                                     directed=False, indices=chunk)
        if np.isinf(dist).any():
            return UNREACHABLE
        best = max(best, int(dist.max()))
    return best


def degree_report(edges, n_nodes: int) -> tuple[dict[int, int], np.ndarray]:
    """Exact degree histogram (degree -> node count) and isolated-node list."""
    edges = as_edges(edges)
    degrees = np.bincount(edges.ravel(), minlength=n_nodes)
    histogram = {int(d): int(c) for d, c in enumerate(np.bincount(degrees)) if c > 0}
    return histogram, np.flatnonzero(degrees == 0).astype(np.int64)


def graph_report(edges, n_nodes: int, samples: int | None = None) -> GraphReport:
    """Assemble the full diagnostics bundle for one graph."""
    ids, count = connected_components(edges, n_nodes)
    diameter = hop_diameter(edges, n_nodes, samples=samples) if count == 1 else UNREACHABLE
    histogram, isolated = degree_report(edges, n_nodes)
    return GraphReport(count, ids, diameter, histogram, isolated)


@dataclass(frozen=True)
class DensityGrid:
    """Gaussian KDE of node positions evaluated at the centers of a grid.

    The grid covers the position bounding box padded by three bandwidths
    per axis, so nearly all kernel mass falls inside and the cell-weighted
    sum of ``values`` approximates 1.
    """

    extents: np.ndarray          # (D, 2) padded [lo, hi] per axis
    resolution: tuple[int, ...]  # cells per axis
    bandwidth: np.ndarray        # (D,) kernel width per axis
    values: np.ndarray           # density per cell, shape == resolution

    def __post_init__(self):
        for name in ("extents", "bandwidth", "values"):
            a = np.ascontiguousarray(getattr(self, name), dtype=np.float64)
            a.flags.writeable = False
            object.__setattr__(self, name, a)
        if self.values.shape != tuple(self.resolution):
            raise ValueError("values shape must match resolution")
        if np.any(self.values < 0):
            raise ValueError("densities must be non-negative")

    def axis_centers(self, axis: int) -> np.ndarray:
        lo, hi = self.extents[axis]
        edges = np.linspace(lo, hi, self.resolution[axis] + 1)
        return 0.5 * (edges[:-1] + edges[1:])

    @property
    def cell_volume(self) -> float:
        spans = self.extents[:, 1] - self.extents[:, 0]
        return float(np.prod(spans / np.asarray(self.resolution)))

    def integral(self) -> float:
        """Cell-volume-weighted sum of the density values."""
        return float(self.values.sum() * self.cell_volume)


def _scott_bandwidth(positions: np.ndarray) -> np.ndarray:
    n, d = positions.shape
    if n < 2:
        raise ValueError("bandwidth undefined: need at least 2 nodes for auto bandwidth")
    std = positions.std(axis=0, ddof=1)
    if np.any(std == 0):
        axis = int(np.flatnonzero(std == 0)[0])
        raise ValueError(f"bandwidth undefined: zero variance along axis {axis}")
    return std * n ** (-1.0 / (d + 4))


def density_kde(positions, bandwidth="auto", grid_resolution=64) -> DensityGrid:
    """Gaussian kernel-density estimate of node positions on a grid.

    ``bandwidth`` is a positive scalar (isotropic), a per-axis sequence, or
    "auto" for Scott's rule (per-axis sample standard deviation scaled by
    N^(-1/(D+4))); auto raises on degenerate zero-variance axes.
    ``grid_resolution`` is the cell count per axis (scalar or per-axis),
    at least 2. The kernel factorizes per axis, so the grid is evaluated
    via one outer product per node batch rather than per cell.
    """
    positions = as_positions(positions)
    n, d = positions.shape
    if n < 1:
        raise ValueError("at least one node required")

    if isinstance(bandwidth, str):
        if bandwidth != "auto":
            raise ValueError(f"unknown bandwidth mode {bandwidth!r}")
        h = _scott_bandwidth(positions)
    else:
        h = np.broadcast_to(np.asarray(bandwidth, dtype=np.float64), (d,)).copy()
        if np.any(h <= 0) or not np.all(np.isfinite(h)):
            raise ValueError("bandwidth must be positive and finite")

    resolution = tuple(
        int(r) for r in np.broadcast_to(np.asarray(grid_resolution, dtype=np.int64), (d,)))
    if any(r < 2 for r in resolution):
        raise ValueError("grid resolution must be >= 2 per axis")

    lo = positions.min(axis=0) - 3.0 * h
    hi = positions.max(axis=0) + 3.0 * h
    extents = np.stack([lo, hi], axis=1)

    centers = []
    for axis in range(d):
        edges = np.linspace(lo[axis], hi[axis], resolution[axis] + 1)
        centers.append(0.5 * (edges[:-1] + edges[1:]))

    values = np.zeros(resolution, dtype=np.float64)
    letters = "abcdefghijklmnopqrstuvwxy"[:d]
    subscript = ",".join(f"z{c}" for c in letters) + "->" + letters
    norm = 1.0 / (np.sqrt(2.0 * np.pi) * h)
    for start in range(0, n, 256):
        batch = positions[start:start + 256]
        kernels = [
            norm[axis] * np.exp(-0.5 * ((centers[axis][None, :] - batch[:, axis, None])
                                        / h[axis]) ** 2)
            for axis in range(d)
        ]
        values += np.einsum(subscript, *kernels)
    values /= n
    return DensityGrid(extents, resolution, h, values)

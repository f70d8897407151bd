"""Shared test fixtures and independent oracles.

The oracles here deliberately avoid the library's own code paths: hop
distances come from a dense Floyd-Warshall sweep, two-hop neighborhoods
from a dense boolean matrix product, hull areas from a monotone-chain
scan, and circumcircle checks from the raw determinant. Expected values
asserted in the tests were computed with these.
"""

import numpy as np
import pytest


def floyd_warshall_hops(n_nodes, edges):
    """Dense all-pairs hop distances; np.inf where unreachable."""
    dist = np.full((n_nodes, n_nodes), np.inf)
    np.fill_diagonal(dist, 0.0)
    for u, v in np.asarray(edges, dtype=np.int64).reshape(-1, 2):
        dist[u, v] = dist[v, u] = 1.0
    for k in range(n_nodes):
        dist = np.minimum(dist, dist[:, k, None] + dist[None, k, :])
    return dist


def dense_two_hop(n_nodes, edges):
    """Boolean A + A^2 with the diagonal removed, as a set of pairs."""
    a = np.zeros((n_nodes, n_nodes), dtype=bool)
    for u, v in np.asarray(edges, dtype=np.int64).reshape(-1, 2):
        a[u, v] = a[v, u] = True
    combined = a | (a.astype(np.int64) @ a.astype(np.int64) > 0)
    np.fill_diagonal(combined, False)
    rows, cols = np.nonzero(np.triu(combined))
    return {(int(u), int(v)) for u, v in zip(rows, cols)}


def convex_hull(points):
    """Monotone-chain convex hull, counter-clockwise vertex coordinates."""
    pts = sorted(map(tuple, np.asarray(points, dtype=np.float64)))
    if len(pts) <= 2:
        return np.asarray(pts)

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return np.asarray(lower[:-1] + upper[:-1])


def polygon_area(vertices):
    v = np.asarray(vertices, dtype=np.float64)
    if v.shape[0] < 3:
        return 0.0
    x, y = v[:, 0], v[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))


def triangle_areas(points, triangles):
    p = np.asarray(points, dtype=np.float64)
    t = np.asarray(triangles, dtype=np.int64).reshape(-1, 3)
    a, b, c = p[t[:, 0]], p[t[:, 1]], p[t[:, 2]]
    return 0.5 * ((b[:, 0] - a[:, 0]) * (c[:, 1] - a[:, 1])
                  - (b[:, 1] - a[:, 1]) * (c[:, 0] - a[:, 0]))


def circumcircle_violations(points, triangles, rel_tol=1e-9):
    """Input points strictly inside some triangle's circumcircle.

    Evaluates the raw incircle determinant for every (triangle, point)
    pair with a relative tolerance, independent of the triangulator's
    predicates. Returns a list of (triangle index, point index).
    """
    p = np.asarray(points, dtype=np.float64)
    t = np.asarray(triangles, dtype=np.int64).reshape(-1, 3)
    a, b, c = p[t[:, 0]], p[t[:, 1]], p[t[:, 2]]  # (T, 2) each

    def rel(corner):  # (T, N, 2) corner-minus-query offsets
        return corner[:, None, :] - p[None, :, :]

    ad, bd, cd = rel(a), rel(b), rel(c)
    alift = (ad ** 2).sum(axis=2)
    blift = (bd ** 2).sum(axis=2)
    clift = (cd ** 2).sum(axis=2)
    det = (alift * (bd[..., 0] * cd[..., 1] - bd[..., 1] * cd[..., 0])
           + blift * (cd[..., 0] * ad[..., 1] - cd[..., 1] * ad[..., 0])
           + clift * (ad[..., 0] * bd[..., 1] - ad[..., 1] * bd[..., 0]))
    scale = np.maximum(np.maximum(np.abs(ad).sum(axis=2), np.abs(bd).sum(axis=2)),
                       np.abs(cd).sum(axis=2)) ** 4
    inside = det > rel_tol * scale
    for column, vertex_col in enumerate(t.T):  # a triangle's own vertices don't count
        inside[np.arange(t.shape[0]), vertex_col] = False
    rows, cols = np.nonzero(inside)
    return [(int(ti), int(pi)) for ti, pi in zip(rows, cols)]


def random_mesh(rng, n_nodes=None, dim=2, edge_factor=1.5):
    """Random positions plus a random simple undirected edge list."""
    if n_nodes is None:
        n_nodes = int(rng.integers(1, 40))
    positions = rng.random((n_nodes, dim))
    pairs = set()
    if n_nodes >= 2:
        for _ in range(int(edge_factor * n_nodes)):
            u, v = rng.integers(0, n_nodes, 2)
            if u != v:
                pairs.add((min(int(u), int(v)), max(int(u), int(v))))
    edges = np.asarray(sorted(pairs), dtype=np.int64).reshape(-1, 2)
    return positions, edges


def random_connected_graph(rng, n_nodes, extra_edges=0):
    """Random spanning tree plus optional extra edges (always connected)."""
    pairs = set()
    for v in range(1, n_nodes):
        u = int(rng.integers(0, v))
        pairs.add((u, v))
    for _ in range(extra_edges):
        u, v = rng.integers(0, n_nodes, 2)
        if u != v:
            pairs.add((min(int(u), int(v)), max(int(u), int(v))))
    return np.asarray(sorted(pairs), dtype=np.int64).reshape(-1, 2)


def grid_graph(side):
    """4-neighbor lattice on side x side nodes; positions are (row, col)."""
    idx = lambda r, c: r * side + c
    edges = []
    for r in range(side):
        for c in range(side):
            if c + 1 < side:
                edges.append((idx(r, c), idx(r, c + 1)))
            if r + 1 < side:
                edges.append((idx(r, c), idx(r + 1, c)))
    positions = np.array([[r, c] for r in range(side) for c in range(side)], float)
    return positions, np.asarray(edges, dtype=np.int64)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)

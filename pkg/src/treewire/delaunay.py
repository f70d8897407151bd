"""Incremental Bowyer-Watson Delaunay triangulation of planar point sets.

Points are inserted one at a time in a deterministic pseudo-random order
(sorted by a fixed-seed integer hash of the index). Each insertion removes
every triangle whose circumcircle strictly contains the new point and
re-triangulates the star-shaped cavity. The enclosing super-triangle has
its vertices at infinity and all predicates involving them are evaluated
symbolically (see _predicates), so the finished triangulation of the real
points is exactly Delaunay and always covers their convex hull.

Exactly cocircular point groups admit several valid triangulations; a
normalization pass flips interior edges of cocircular quads toward the
diagonal with the lower minimum node index, making the output independent
of insertion order in those cases.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._predicates import SUPER_DIRS, _INCIRCLE_BOUND, incircle_float, incircle_sign, orient_sign
from .model import as_positions

__all__ = ["Triangulation", "delaunay_triangulate"]

_HASH_SEED = 0x5DEECE66D


def _splitmix64(x: np.ndarray) -> np.ndarray:
    z = (x + np.uint64(0x9E3779B97F4A7C15)).astype(np.uint64)
    z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    return z ^ (z >> np.uint64(31))


def _insertion_order(n: int) -> np.ndarray:
    keys = _splitmix64(np.arange(n, dtype=np.uint64) + np.uint64(_HASH_SEED))
    return np.argsort(keys, kind="stable")


@dataclass(frozen=True)
class Triangulation:
    """Planar positions plus counter-clockwise triangles covering their hull.

    ``triangles`` is (T, 3) in canonical form: each triple rotated so its
    smallest index comes first, rows sorted lexicographically.
    """

    positions: np.ndarray
    triangles: np.ndarray

    def __post_init__(self):
        positions = as_positions(self.positions)
        tris = np.ascontiguousarray(self.triangles, dtype=np.int64)
        if tris.size == 0:
            tris = tris.reshape(0, 3)
        tris.flags.writeable = False
        object.__setattr__(self, "positions", positions)
        object.__setattr__(self, "triangles", tris)
        if positions.shape[1] != 2:
            raise ValueError("triangulation positions must be 2-d")
        for i, j, k in tris:
            if orient_sign(_real(positions, i), _real(positions, j),
                           _real(positions, k)) <= 0:
                raise ValueError(f"triangle ({i}, {j}, {k}) is not counter-clockwise")

    def edges(self) -> np.ndarray:
        """Union of triangle sides as unordered pairs, deduplicated, sorted."""
        t = self.triangles
        if t.shape[0] == 0:
            return np.empty((0, 2), dtype=np.int64)
        sides = np.concatenate([t[:, [0, 1]], t[:, [1, 2]], t[:, [2, 0]]], axis=0)
        return np.unique(np.sort(sides, axis=1), axis=0)


def _real(positions: np.ndarray, i: int):
    return (float(positions[i, 0]), float(positions[i, 1]), 0, 0)


def _symbolic(positions: np.ndarray, i: int):
    if i >= 0:
        return _real(positions, i)
    dx, dy = SUPER_DIRS[i]
    return (0.0, 0.0, dx, dy)


def _check_input(positions: np.ndarray) -> None:
    n, d = positions.shape
    if d != 2:
        raise ValueError(f"delaunay triangulation requires 2-d positions, got {d}-d")
    if not np.all(np.isfinite(positions)):
        raise ValueError("positions must be finite")
    if n < 3:
        raise ValueError(f"no triangulation: need at least 3 points, got {n}")
    _, inverse, counts = np.unique(positions, axis=0, return_inverse=True,
                                   return_counts=True)
    if np.any(counts > 1):
        groups = [
            np.flatnonzero(inverse == g).tolist()
            for g in np.flatnonzero(counts > 1)
        ]
        listing = "; ".join(str(g) for g in sorted(groups))
        raise ValueError(f"duplicate points at indices {listing}")
    base_a, base_b = _real(positions, 0), _real(positions, 1)
    if all(orient_sign(base_a, base_b, _real(positions, k)) == 0
           for k in range(2, n)):
        raise ValueError("no triangulation: all points collinear")


def _bad_triangles(positions: np.ndarray, tris: set, px: float, py: float) -> list:
    """Triangles whose circumcircle strictly contains (px, py)."""
    real = []
    bad = []
    for t in tris:
        if t[0] >= 0 and t[1] >= 0 and t[2] >= 0:
            real.append(t)
        elif incircle_sign(_symbolic(positions, t[0]), _symbolic(positions, t[1]),
                           _symbolic(positions, t[2]), (px, py, 0, 0)) > 0:
            bad.append(t)
    if real:
        arr = np.asarray(real, dtype=np.int64)
        a = positions[arr[:, 0]]
        b = positions[arr[:, 1]]
        c = positions[arr[:, 2]]
        det, permanent = incircle_float(a[:, 0], a[:, 1], b[:, 0], b[:, 1],
                                        c[:, 0], c[:, 1], px, py)
        bound = _INCIRCLE_BOUND * permanent
        for i in np.flatnonzero(det > bound):
            bad.append(real[i])
        for i in np.flatnonzero(np.abs(det) <= bound):
            t = real[i]
            if incircle_sign(_real(positions, t[0]), _real(positions, t[1]),
                             _real(positions, t[2]), (px, py, 0, 0)) > 0:
                bad.append(t)
    return bad


def _insert(positions: np.ndarray, tris: set, p: int) -> None:
    px, py = float(positions[p, 0]), float(positions[p, 1])
    bad = _bad_triangles(positions, tris, px, py)
    sides = set()
    for i, j, k in bad:
        sides.update(((i, j), (j, k), (k, i)))
    tris.difference_update(bad)
    for u, v in sides:
        if (v, u) not in sides:
            tris.add((u, v, p))


def _flip_cocircular(positions: np.ndarray, tris: set) -> None:
    """Resolve cocircular ties toward the diagonal with the lower min index.

    Each accepted flip strictly lowers the flipped diagonal's minimum
    index, so the total flip count is bounded by (interior edges) * n.
    """
    n = positions.shape[0]
    for _ in range(3 * len(tris) * max(n, 2) + 16):
        side_of = {}
        for t in tris:
            i, j, k = t
            side_of[(i, j)] = t
            side_of[(j, k)] = t
            side_of[(k, i)] = t
        flipped = False
        for (u, v) in sorted(side_of):
            t1 = side_of.get((u, v))
            t2 = side_of.get((v, u))
            if t1 is None or t2 is None or t1 not in tris or t2 not in tris:
                continue
            a = next(x for x in t1 if x != u and x != v)
            b = next(x for x in t2 if x != u and x != v)
            if min(a, b) >= min(u, v):
                continue
            if incircle_sign(_real(positions, t1[0]), _real(positions, t1[1]),
                             _real(positions, t1[2]), _real(positions, b)) != 0:
                continue
            # four exactly cocircular points are in convex position: flip
            tris.discard(t1)
            tris.discard(t2)
            tris.add((a, u, b))
            tris.add((b, v, a))
            flipped = True
            break
        if not flipped:
            return
    raise RuntimeError("cocircular normalization did not converge")


def delaunay_triangulate(positions) -> Triangulation:
    """Delaunay triangulation of a 2-d point set.

    Raises for fewer than 3 points, an all-collinear input, or duplicate
    points (listing the offending index groups). The result satisfies the
    strict empty-circumcircle property with exact arithmetic and covers
    the convex hull of the input.
    """
    positions = as_positions(positions)
    _check_input(positions)

    tris: set = {(-1, -2, -3)}
    for p in _insertion_order(positions.shape[0]):
        _insert(positions, tris, int(p))

    real = {t for t in tris if t[0] >= 0 and t[1] >= 0 and t[2] >= 0}
    _flip_cocircular(positions, real)

    canon = []
    for i, j, k in real:
        if i <= j and i <= k:
            canon.append((i, j, k))
        elif j <= i and j <= k:
            canon.append((j, k, i))
        else:
            canon.append((k, i, j))
    canon.sort()
    return Triangulation(positions, np.asarray(canon, dtype=np.int64).reshape(-1, 3))

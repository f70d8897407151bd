"""Text I/O for point clouds, edge lists, and diagnostic reports.

Formats are line-oriented UTF-8 with LF endings and '#' comment lines:

* point cloud -- one node per line, D whitespace-separated decimals;
* edge list   -- "u v [tag]" with 0-based indices, tag M or T optional;
* report      -- a JSON document with a fixed key order and floats
  rendered with 17 significant digits, so serialization is deterministic
  and re-serializing a parsed report is byte-identical.

All readers reject exactly the malformed inputs named in their error
messages (with line numbers); valid data round-trips losslessly.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .metrics import DensityGrid
from .model import EdgeTag, GraphReport, Mesh, TaggedEdgeSet

__all__ = [
    "InputError",
    "read_graph",
    "read_point_cloud",
    "read_report",
    "report_document",
    "write_graph",
    "write_report",
]

_TAG_LETTER = {int(EdgeTag.MESH): "M", int(EdgeTag.TREE): "T"}


class InputError(ValueError):
    """Malformed input data (parse errors carry 1-based line numbers)."""


def _read_text(source) -> str:
    if hasattr(source, "read"):
        return source.read()
    return Path(source).read_text(encoding="utf-8")


def _write_text(sink, text: str) -> int:
    if hasattr(sink, "write"):
        sink.write(text)
    else:
        Path(sink).write_text(text, encoding="utf-8", newline="\n")
    return len(text.encode("utf-8"))


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def read_point_cloud(source) -> np.ndarray:
    """Parse a point-cloud file into an (N, D) position array.

    D is inferred from the first data line; every following line must
    carry the same number of finite decimal coordinates.
    """
    positions: list[list[float]] = []
    dim = None
    for lineno, line in _data_lines(_read_text(source)):
        tokens = line.split()
        if dim is None:
            dim = len(tokens)
        elif len(tokens) != dim:
            raise InputError(f"line {lineno}: expected {dim} coordinates, got {len(tokens)}")
        row = []
        for tok in tokens:
            try:
                value = float(tok)
            except ValueError:
                raise InputError(f"line {lineno}: unparsable coordinate {tok!r}") from None
            if not np.isfinite(value):
                raise InputError(f"line {lineno}: non-finite coordinate {tok!r}")
            row.append(value)
        positions.append(row)
    if not positions:
        raise InputError("empty point cloud")
    return np.asarray(positions, dtype=np.float64)


def read_graph(positions_source, edges_source) -> Mesh:
    """Read a mesh from a point-cloud file plus an edge-list file.

    An optional third tag column is ignored on input. Out-of-range
    indices, self-loops, and duplicate unordered pairs are rejected.
    """
    positions = read_point_cloud(positions_source)
    n = positions.shape[0]
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, line in _data_lines(_read_text(edges_source)):
        tokens = line.split()
        if len(tokens) not in (2, 3):
            raise InputError(f"line {lineno}: expected 'u v [tag]', got {len(tokens)} fields")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise InputError(f"line {lineno}: unparsable edge index") from None
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"line {lineno}: edge index out of range ({u}, {v}) for {n} nodes")
        if u == v:
            raise InputError(f"line {lineno}: self-loop at node {u}")
        pair = (min(u, v), max(u, v))
        if pair in seen:
            raise InputError(f"line {lineno}: duplicate unordered pair ({u}, {v})")
        seen.add(pair)
        edges.append((u, v))
    return Mesh(positions, np.asarray(edges, dtype=np.int64).reshape(-1, 2))


def write_graph(edge_set: TaggedEdgeSet, sink) -> int:
    """Write "u v tag" lines in canonical order; returns the byte count.

    Tags serialize as M (mesh) or T (tree); the output round-trips
    through read_graph, which ignores the tag column.
    """
    lines = [
        f"{u} {v} {_TAG_LETTER[int(t)]}\n"
        for (u, v), t in zip(edge_set.edges, edge_set.tags)
    ]
    return _write_text(sink, "".join(lines))


# ---------------------------------------------------------------------------
# reports

def _fmt(value) -> str:
    if isinstance(value, bool):
        raise TypeError("booleans are not part of the report schema")
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".17g")
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_fmt(v) for v in value) + "]"
    raise TypeError(f"unsupported report value type {type(value)!r}")


def report_document(report) -> str:
    """Deterministic JSON text for a GraphReport, DensityGrid, or parsed dict."""
    if isinstance(report, GraphReport):
        doc = {
            "component_count": report.component_count,
            "component_ids": report.component_ids.tolist(),
            "degree_histogram": [[d, c] for d, c in sorted(report.degree_histogram.items())],
            "hop_diameter": report.hop_diameter,
            "isolated_nodes": report.isolated_nodes.tolist(),
        }
    elif isinstance(report, DensityGrid):
        doc = {
            "bandwidth": report.bandwidth.tolist(),
            "extents": report.extents.tolist(),
            "resolution": list(report.resolution),
            "values": report.values.ravel(order="C").tolist(),
        }
    elif isinstance(report, dict):
        doc = report
    else:
        raise TypeError(f"cannot serialize report of type {type(report)!r}")
    body = ",\n".join(f"  {json.dumps(key)}: {_fmt(value)}" for key, value in doc.items())
    return "{\n" + body + "\n}\n"


def write_report(report, sink) -> int:
    """Serialize a report document to ``sink``; returns the byte count."""
    return _write_text(sink, report_document(report))


def read_report(source) -> dict:
    """Parse a report document back into a plain dict."""
    return json.loads(_read_text(source))

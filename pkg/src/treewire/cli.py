"""Command-line front end for the full preprocessing pipeline.

Every subcommand reads the text formats defined in meshio, accepts '-' as
the output meaning standard output, and produces byte-identical output for
identical inputs (no timestamps, no nondeterminism). Exit codes: 0 success,
1 input or validation error (one-line diagnostic on stderr), 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import contextmanager

import numpy as np

from . import __version__
from .delaunay import delaunay_triangulate
from .meshio import InputError, read_graph, read_point_cloud, write_graph, write_report
from .metrics import density_kde, graph_report
from .model import EdgeTag, TaggedEdgeSet
from .pooling import build_pyramid
from .rewire import RewireParams, rewire

__all__ = ["main", "run"]

_SAMPLED_DEFAULT = 32
_EXACT_DIAMETER_LIMIT = 10_000  # above this, stats defaults to sampled mode
_AUTO = object()  # "flag not given" default (argparse leaves non-string defaults alone)


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _diameter_mode(text: str):
    if text == "exact":
        return None
    if text.startswith("sampled:"):
        return _positive_int(text.split(":", 1)[1])
    raise argparse.ArgumentTypeError(
        f"expected 'exact' or 'sampled:N', got {text!r}")


def _bandwidth(text: str):
    if text == "auto":
        return "auto"
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'auto' or a number, got {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError("bandwidth must be positive")
    return value


@contextmanager
def _sink(path: str):
    if path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as handle:
            yield handle


def _cmd_triangulate(args) -> None:
    positions = read_point_cloud(args.points)
    tri = delaunay_triangulate(positions)
    edges = tri.edges()
    edge_set = TaggedEdgeSet(edges, np.full(edges.shape[0], int(EdgeTag.MESH), np.uint8))
    with _sink(args.output) as sink:
        write_graph(edge_set, sink)


def _cmd_rewire(args) -> None:
    mesh = read_graph(args.points, args.edges)
    tagged = rewire(mesh, RewireParams(args.levels, args.merge_exponent))
    with _sink(args.output) as sink:
        write_graph(tagged, sink)


def _stage_payloads(pyramid):
    for index, stage in enumerate(pyramid.stages, 1):
        edge_text = "".join(f"{u} {v}\n" for u, v in stage.coarse_edges)
        map_text = "".join(
            f"{fine} {coarse} {front}\n"
            for fine, (coarse, front) in enumerate(zip(stage.fine_to_coarse, stage.fronts))
        )
        yield index, edge_text, map_text


def _cmd_pool(args) -> None:
    mesh = read_graph(args.points, args.edges)
    pyramid = build_pyramid(mesh.edges, mesh.positions, args.stages)
    if args.output == "-":
        for _, edge_text, map_text in _stage_payloads(pyramid):
            sys.stdout.write(edge_text)
            sys.stdout.write(map_text)
        return
    for index, edge_text, map_text in _stage_payloads(pyramid):
        with open(f"{args.output}_stage{index}.edges", "w", encoding="utf-8",
                  newline="\n") as handle:
            handle.write(edge_text)
        with open(f"{args.output}_stage{index}.map", "w", encoding="utf-8",
                  newline="\n") as handle:
            handle.write(map_text)


def _cmd_stats(args) -> None:
    mesh = read_graph(args.points, args.edges)
    samples = args.diameter
    if samples is _AUTO:
        samples = None if mesh.n_nodes <= _EXACT_DIAMETER_LIMIT else _SAMPLED_DEFAULT
    report = graph_report(mesh.edges, mesh.n_nodes, samples=samples)
    with _sink(args.output) as sink:
        write_report(report, sink)


def _cmd_density(args) -> None:
    positions = read_point_cloud(args.points)
    grid = density_kde(positions, bandwidth=args.bandwidth, grid_resolution=args.grid)
    with _sink(args.output) as sink:
        write_report(grid, sink)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treewire",
        description="Mesh-graph preprocessing: Delaunay meshing, hierarchical "
                    "tree-edge rewiring, bi-stride pooling, and diagnostics.")
    parser.add_argument("--version", action="version", version=f"treewire {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("triangulate", help="Delaunay-triangulate a 2-d point cloud")
    p.add_argument("points")
    p.add_argument("-o", "--output", default="-", help="edge file or '-' for stdout")
    p.set_defaults(func=_cmd_triangulate)

    p = sub.add_parser("rewire", help="supplement a mesh graph with hierarchical tree edges")
    p.add_argument("points")
    p.add_argument("edges")
    p.add_argument("--levels", type=_positive_int, required=True,
                   help="number of recursive median splits")
    p.add_argument("--merge-exponent", type=_positive_int, default=1,
                   help="merge 2^M bins per hierarchy step (default 1)")
    p.add_argument("-o", "--output", default="-", help="tagged edge file or '-' for stdout")
    p.set_defaults(func=_cmd_rewire)

    p = sub.add_parser("pool", help="build a bi-stride pooling pyramid")
    p.add_argument("points")
    p.add_argument("edges")
    p.add_argument("--stages", type=_positive_int, default=5,
                   help="number of coarsening stages (default 5)")
    p.add_argument("-o", "--output", default="-",
                   help="output prefix; writes <prefix>_stageN.edges and "
                        "<prefix>_stageN.map, or '-' to concatenate to stdout")
    p.set_defaults(func=_cmd_pool)

    p = sub.add_parser("stats", help="connectivity, hop diameter, and degree report")
    p.add_argument("points")
    p.add_argument("edges")
    p.add_argument("--diameter", type=_diameter_mode, default=_AUTO,
                   help="'exact' or 'sampled:N' (default: exact up to "
                        f"{_EXACT_DIAMETER_LIMIT} nodes, else sampled:{_SAMPLED_DEFAULT})")
    p.add_argument("-o", "--output", default="-", help="report file or '-' for stdout")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("density", help="Gaussian kernel-density estimate of node positions")
    p.add_argument("points")
    p.add_argument("--bandwidth", type=_bandwidth, default="auto",
                   help="kernel bandwidth or 'auto' for Scott's rule (default)")
    p.add_argument("--grid", type=_positive_int, default=128,
                   help="grid resolution per axis (default 128)")
    p.add_argument("-o", "--output", default="-", help="report file or '-' for stdout")
    p.set_defaults(func=_cmd_density)

    return parser


def run(argv=None) -> int:
    """Parse and execute one command; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:  # argparse handles usage errors and --version
        return int(exit_.code or 0)
    try:
        args.func(args)
    except (InputError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())

"""treewire: hierarchical tree-edge rewiring and preprocessing for mesh graphs.

The package turns an irregular mesh graph into a message-passing-friendly
one: recursive median binary space partitioning yields a balanced tree of
node bins, and edges between bin center nodes give every pair of nodes a
short hop path while adding only O(N) edges. Alongside the rewiring core
there is bi-stride graph pooling, Delaunay mesh construction from point
clouds, density/connectivity diagnostics, and text-format I/O plus a CLI.
"""

__version__ = "0.1.0"

from .delaunay import Triangulation, delaunay_triangulate
from .meshio import (
    InputError,
    read_graph,
    read_point_cloud,
    read_report,
    report_document,
    write_graph,
    write_report,
)
from .metrics import (
    DensityGrid,
    connected_components,
    degree_report,
    density_kde,
    graph_report,
    hop_diameter,
)
from .model import (
    EdgeTag,
    GraphReport,
    Mesh,
    TaggedEdgeSet,
    UNREACHABLE,
    validate_mesh,
)
from .pooling import (
    PoolStage,
    Pyramid,
    bfs_fronts,
    build_pyramid,
    default_seeds,
    enhance_adjacency,
    pool_stage,
)
from .rewire import (
    LeafBin,
    PartitionTree,
    RewireParams,
    Split,
    build_partition_tree,
    center_node,
    edge_attributes,
    emit_tree_edges,
    rewire,
    split_bin,
)

__all__ = [
    "DensityGrid",
    "EdgeTag",
    "GraphReport",
    "InputError",
    "LeafBin",
    "Mesh",
    "PartitionTree",
    "PoolStage",
    "Pyramid",
    "RewireParams",
    "Split",
    "TaggedEdgeSet",
    "Triangulation",
    "UNREACHABLE",
    "__version__",
    "bfs_fronts",
    "build_partition_tree",
    "build_pyramid",
    "center_node",
    "connected_components",
    "default_seeds",
    "degree_report",
    "delaunay_triangulate",
    "density_kde",
    "edge_attributes",
    "emit_tree_edges",
    "enhance_adjacency",
    "graph_report",
    "hop_diameter",
    "pool_stage",
    "read_graph",
    "read_point_cloud",
    "read_report",
    "report_document",
    "rewire",
    "split_bin",
    "validate_mesh",
    "write_graph",
    "write_report",
]

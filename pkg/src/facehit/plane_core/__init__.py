"""Embedded plane multigraphs: darts, rotations, faces, nesting and PLG I/O."""

from .graph import (
    ROOT,
    Check,
    FaceWalk,
    GlobalFace,
    PlaneMultigraph,
    check_embedding,
    dart_name,
    degree,
    delete_edges,
    delete_vertices,
    disjoint_union,
    from_oriented_faces,
    neighbors,
    orient_triangles,
    restrict,
    trace_faces,
    twin,
)
from .plg import build_graph, dumps, loads, parse, to_dot

__all__ = [
    "ROOT", "Check", "FaceWalk", "GlobalFace", "PlaneMultigraph", "build_graph",
    "check_embedding", "dart_name", "degree", "delete_edges", "delete_vertices",
    "disjoint_union", "dumps", "from_oriented_faces", "loads", "neighbors",
    "orient_triangles", "parse", "restrict", "to_dot", "trace_faces", "twin",
]

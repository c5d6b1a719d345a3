"""Tiles: graphs with ordered left/right boundary tuples of equal width.

Concatenation lays two tiles side by side and joins right boundary to left
boundary position by position; closing a t-fold power additionally joins the
outer boundaries, producing a cyclic graph built from t copies of one tile.
Only simple graphs are supported: any join that would create a loop or a
parallel edge is an error, never silently collapsed.

The closure of Q^t carries a canonical edge decomposition into t pieces in
cyclic order: piece i is copy i of the tile together with the bundle of join
edges leaving it clockwise (the last bundle wraps back to copy 0).  By
construction consecutive window unions are translates of each other, which
makes this the standard positive example for the transitivity checker.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, norm_edge
from .structures import EdgeDecomposition, Piece

__all__ = [
    "Tile",
    "tile_concat",
    "tile_power",
    "tile_close",
    "canonical_periodic_decomposition",
]


@dataclass(frozen=True)
class Tile:
    """A graph with left/right boundary tuples of equal width (repeats allowed)."""

    graph: Graph
    left: tuple[int, ...]
    right: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.left) != len(self.right):
            raise ValueError("left and right boundaries must have equal width")
        for v in (*self.left, *self.right):
            if not 0 <= v < self.graph.n:
                raise ValueError(f"boundary vertex {v} out of range")

    @property
    def width(self) -> int:
        return len(self.left)


def _join(edges: set[tuple[int, int]], u: int, v: int) -> None:
    if u == v:
        raise ValueError(f"join would create a loop at vertex {u}")
    e = norm_edge(u, v)
    if e in edges:
        raise ValueError(f"join would create a parallel edge {e}")
    edges.add(e)


def tile_concat(q1: Tile, q2: Tile) -> Tile:
    """Disjoint union with right(q1) joined to left(q2) position by position."""
    if q1.width != q2.width:
        raise ValueError(f"width mismatch: {q1.width} vs {q2.width}")
    shift = q1.graph.n
    edges = set(q1.graph.edges())
    edges.update(norm_edge(u + shift, v + shift) for u, v in q2.graph.edges())
    for j in range(q1.width):
        _join(edges, q1.right[j], q2.left[j] + shift)
    graph = Graph.from_edges(shift + q2.graph.n, sorted(edges))
    return Tile(
        graph=graph,
        left=q1.left,
        right=tuple(v + shift for v in q2.right),
    )


def tile_power(q: Tile, t: int) -> Tile:
    """t copies of q concatenated in a row, t >= 1."""
    if t < 1:
        raise ValueError("power needs t >= 1")
    out = q
    for _ in range(t - 1):
        out = tile_concat(out, q)
    return out


def _closure_edges(q: Tile, t: int) -> tuple[int, set[tuple[int, int]]]:
    if t < 2:
        raise ValueError("closing needs t >= 2 copies")
    row = tile_power(q, t)
    edges = set(row.graph.edges())
    for j in range(q.width):
        _join(edges, row.left[j], row.right[j])
    return row.graph.n, edges


def tile_close(q: Tile, t: int) -> Graph:
    """Cyclic closure of Q^t: the outer boundaries are joined as well."""
    n, edges = _closure_edges(q, t)
    return Graph.from_edges(n, sorted(edges))


def canonical_periodic_decomposition(q: Tile, t: int) -> tuple[Graph, EdgeDecomposition]:
    """The closure of Q^t plus its decomposition into copy-plus-bundle pieces.

    Piece i (copy offsets i * |V(q)|) holds copy i's internal edges and the
    join bundle from copy i to copy i+1 (mod t); its vertex set is copy i
    plus the bundle endpoints.
    """
    closure = tile_close(q, t)
    n0 = q.graph.n
    pieces = []
    for i in range(t):
        base = i * n0
        nxt = ((i + 1) % t) * n0
        verts = set(range(base, base + n0))
        edges = {norm_edge(u + base, v + base) for u, v in q.graph.edges()}
        for j in range(q.width):
            u = base + q.right[j]
            v = nxt + q.left[j]
            edges.add(norm_edge(u, v))
            verts.add(v)
        pieces.append(Piece(vertices=frozenset(verts), edges=frozenset(edges)))
    return closure, EdgeDecomposition(tuple(pieces))

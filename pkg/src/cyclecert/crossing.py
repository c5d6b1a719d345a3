"""Crossing bookkeeping for abstract drawings, and prefix certificates on it.

A drawing here is combinatorial: a graph plus the multiset of edge pairs
that cross.  Good-drawing rules are enforced by the validator, not the
constructor, so a bad drawing can be built and then reported on: no
crossing may involve an edge outside the graph, pair an edge with itself,
pair edges sharing an endpoint, or repeat (two edges cross at most once).

Splitting the edges into pieces spreads each crossing over the pieces that
own its two edges: 2 to the piece owning both, else 1 and 1.  The doubled
weights always sum to twice the crossing count, so their halves sum to the
crossing count exactly, and running the rotation machinery on the halves
turns a global crossing bound into a per-piece prefix certificate.  For
graphs closed up from t copies of a tile, the canonical period
decomposition makes those halves one number per copy.

The parity screen is the classical closed-curve obstruction: two
vertex-disjoint cycles drawn in the plane must cross an even number of
times, so an odd count between them refutes planarity of the drawing data.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .cyclic_core import Direction, RationalLike, RotationCertificate, as_fraction, find_rotation
from .graphs import Graph, norm_edge
from .structures import EdgeDecomposition, validate_decomposition
from .tiles import Tile, canonical_periodic_decomposition, tile_close

__all__ = [
    "Parity",
    "Violation",
    "AbstractDrawing",
    "validate_drawing",
    "cr_total",
    "cr_between",
    "DoubledWeightList",
    "decomposition_weights",
    "convex_drawing",
    "prefix_cr_certificate",
    "periodic_prefix_certificate",
    "jordan_parity_screen",
]

Edge = tuple[int, int]
CrossingPair = tuple[Edge, Edge]


class Parity(Enum):
    EVEN = "even"
    ODD = "odd"


@dataclass(frozen=True)
class Violation:
    kind: str
    message: str

    def __str__(self) -> str:
        return f"{self.kind}: {self.message}"


def _norm_pair(pair: Sequence[Sequence[int]]) -> CrossingPair:
    (a, b) = pair
    e = norm_edge(int(a[0]), int(a[1]))
    f = norm_edge(int(b[0]), int(b[1]))
    return (e, f) if e <= f else (f, e)


@dataclass(frozen=True)
class AbstractDrawing:
    """A graph and the (normalized, sorted) multiset of crossing edge pairs."""

    graph: Graph
    crossings: tuple[CrossingPair, ...]

    def __init__(self, graph: Graph, crossings: Iterable[Sequence[Sequence[int]]]):
        object.__setattr__(self, "graph", graph)
        object.__setattr__(
            self, "crossings", tuple(sorted(_norm_pair(p) for p in crossings))
        )


def validate_drawing(d: AbstractDrawing) -> list[Violation]:
    """All good-drawing rule violations, empty when the drawing is clean."""
    out = []
    seen: set[CrossingPair] = set()
    for e, f in d.crossings:
        for edge in (e, f):
            if not d.graph.has_edge(*edge):
                out.append(Violation("unknown-edge", f"edge {edge} is not in the graph"))
        if e == f:
            out.append(Violation("self-pair", f"edge {e} paired with itself"))
        elif set(e) & set(f):
            shared = (set(e) & set(f)).pop()
            out.append(
                Violation("adjacent-pair", f"edges {e} and {f} share vertex {shared}")
            )
        if (e, f) in seen:
            out.append(
                Violation("duplicate-pair", f"edges {e} and {f} cross more than once")
            )
        seen.add((e, f))
    return out


def _require_clean(d: AbstractDrawing) -> None:
    problems = validate_drawing(d)
    if problems:
        raise ValueError(f"invalid drawing: {problems[0]}")


def cr_total(d: AbstractDrawing) -> int:
    """Number of crossings in the drawing."""
    return len(d.crossings)


def cr_between(
    d: AbstractDrawing, a_edges: Iterable[Sequence[int]], b_edges: Iterable[Sequence[int]]
) -> int:
    """Crossings with one edge in a_edges and the other in b_edges.

    The two edge sets must be disjoint, otherwise a shared edge would have
    no well-defined side.
    """
    a = {norm_edge(u, v) for u, v in a_edges}
    b = {norm_edge(u, v) for u, v in b_edges}
    if a & b:
        raise ValueError(f"edge sets overlap at {sorted(a & b)[0]}")
    count = 0
    for e, f in d.crossings:
        if (e in a and f in b) or (e in b and f in a):
            count += 1
    return count


@dataclass(frozen=True)
class DoubledWeightList:
    """Per-piece doubled crossing weights; they sum to twice the crossing count."""

    weights: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.weights)

    def total(self) -> int:
        return sum(self.weights)

    def halves(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(w, 2) for w in self.weights)


def decomposition_weights(
    d: AbstractDrawing, decomposition: EdgeDecomposition
) -> DoubledWeightList:
    """Spread each crossing over the owning pieces: 2 if one piece owns both
    edges, else 1 and 1."""
    _require_clean(d)
    validate_decomposition(d.graph, decomposition)
    owner: dict[Edge, int] = {}
    for i, piece in enumerate(decomposition.pieces):
        for u, v in piece.edges:
            owner[norm_edge(u, v)] = i
    weights = [0] * len(decomposition.pieces)
    for e, f in d.crossings:
        pe, pf = owner[e], owner[f]
        if pe == pf:
            weights[pe] += 2
        else:
            weights[pe] += 1
            weights[pf] += 1
    return DoubledWeightList(tuple(weights))


def convex_drawing(g: Graph, order: Optional[Sequence[int]] = None) -> AbstractDrawing:
    """Drawing with vertices on a circle in the given order, edges as chords.

    Two chords cross exactly when their endpoints strictly interleave
    around the circle.
    """
    order = tuple(order) if order is not None else tuple(range(g.n))
    if sorted(order) != list(range(g.n)):
        raise ValueError("order must be a permutation of the vertices")
    pos = {v: i for i, v in enumerate(order)}
    edges = g.edges()
    crossings = []
    for i, (a, b) in enumerate(edges):
        pa, pb = sorted((pos[a], pos[b]))
        for c, dd in edges[i + 1 :]:
            if {a, b} & {c, dd}:
                continue
            inside_c = pa < pos[c] < pb
            inside_d = pa < pos[dd] < pb
            if inside_c != inside_d:
                crossings.append(((a, b), (c, dd)))
    return AbstractDrawing(g, crossings)


def prefix_cr_certificate(
    d: AbstractDrawing,
    decomposition: EdgeDecomposition,
    h: RationalLike,
    direction: Direction = Direction.BELOW,
    epsilon: RationalLike = Fraction(1, 2),
) -> Optional[RotationCertificate]:
    """Rotation certificate on the half-weights against h nudged by epsilon.

    BELOW certifies crossing count <= h (strict against h + eps), ABOVE
    certifies crossing count >= h (strict against h - eps).  For integer h
    and 0 < eps < 1 the nudged bound is never attained, so existence is
    equivalent to the non-strict bound on the total.
    """
    eps = as_fraction(epsilon)
    if not Fraction(0) < eps < Fraction(1):
        raise ValueError("epsilon must satisfy 0 < eps < 1")
    halves = decomposition_weights(d, decomposition).halves()
    hf = as_fraction(h)
    bound = hf + eps if direction is Direction.BELOW else hf - eps
    return find_rotation(halves, bound, direction)


def periodic_prefix_certificate(
    d: AbstractDrawing,
    tile: Tile,
    t: int,
    h: RationalLike,
    epsilon: RationalLike = Fraction(1, 2),
) -> Optional[RotationCertificate]:
    """Certify cr <= h for a drawing of the closed t-fold tiling, one piece
    per copy.

    The drawing's graph must equal the closure of the tile exactly; the
    canonical period decomposition supplies the pieces.
    """
    closed = tile_close(tile, t)
    if d.graph != closed:
        raise ValueError("drawing graph is not the closure of the tile")
    _, decomposition = canonical_periodic_decomposition(tile, t)
    return prefix_cr_certificate(d, decomposition, h, Direction.BELOW, epsilon)


def _check_cycle(g: Graph, edges: Iterable[Sequence[int]], label: str) -> set[int]:
    es = {norm_edge(u, v) for u, v in edges}
    if len(es) < 3:
        raise ValueError(f"{label} needs at least 3 edges to be a cycle")
    deg: dict[int, int] = {}
    for u, v in es:
        if not g.has_edge(u, v):
            raise ValueError(f"{label} uses edge {(u, v)} not in the graph")
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    if any(c != 2 for c in deg.values()):
        bad = next(v for v, c in deg.items() if c != 2)
        raise ValueError(f"{label} is not a cycle: vertex {bad} has degree {deg[bad]}")
    verts = set(deg)
    start = next(iter(verts))
    stack, seen = [start], {start}
    adj: dict[int, list[int]] = {v: [] for v in verts}
    for u, v in es:
        adj[u].append(v)
        adj[v].append(u)
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if seen != verts:
        raise ValueError(f"{label} is not connected")
    return verts


def jordan_parity_screen(
    d: AbstractDrawing,
    cycle_a: Iterable[Sequence[int]],
    cycle_b: Iterable[Sequence[int]],
) -> Parity:
    """Parity of crossings between two vertex-disjoint cycles.

    In any drawing in the plane the count is even; ODD certifies the
    crossing data is not realizable.
    """
    _require_clean(d)
    cycle_a = [tuple(e) for e in cycle_a]
    cycle_b = [tuple(e) for e in cycle_b]
    va = _check_cycle(d.graph, cycle_a, "first cycle")
    vb = _check_cycle(d.graph, cycle_b, "second cycle")
    if va & vb:
        raise ValueError(f"cycles share vertex {sorted(va & vb)[0]}")
    between = cr_between(d, cycle_a, cycle_b)
    return Parity.EVEN if between % 2 == 0 else Parity.ODD

"""Cyclically ordered vertex partitions and edge decompositions, with the
window-isomorphism test for transitivity.

A decomposition (or partition) carries its parts in a fixed cyclic order.
The window w(i, len) is the union of `len` consecutive parts starting at
part i, wrapping modulo the part count t.  The structure is transitive when
for every window length 1..t all t windows are pairwise isomorphic: for
edge decompositions a window is the graph (union of piece vertex sets,
union of piece edge sets); for vertex partitions it is the subgraph induced
on the union of the parts.  Single-part windows are compared too, so a
partition into parts of unequal size can never be transitive, and the
length-t window is the whole graph for every start, which the checker uses
as a free sanity identity.

Pairwise isomorphism of each length class is established by comparing every
window against the first (isomorphism is an equivalence relation), after a
cheap fingerprint screen; the positive answer still always rests on explicit
bijections found by `iso.isomorphic`.

`find_transitive_partition` searches cyclically ordered partitions of the
vertex set into t classes up to rotation and reflection.  Since
single-part windows force equal class sizes, only t dividing |V| can ever
succeed, and the enumeration walks equal-size classes only.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .errors import BudgetExceededError
from .graphs import Graph, norm_edge
from .iso import DEFAULT_ISO_BUDGET, isomorphic

__all__ = [
    "VertexPartition",
    "Piece",
    "EdgeDecomposition",
    "CyclicSymmetry",
    "validate_partition",
    "validate_decomposition",
    "columns_partition",
    "star_decomposition_bipartite",
    "star_decomposition_complete",
    "circulant14_decomposition",
    "is_transitive_partition",
    "is_transitive_decomposition",
    "find_transitive_partition",
    "column_shift_symmetry",
    "cyclic_symmetry_violations",
    "verify_cyclic_symmetry",
]


@dataclass(frozen=True)
class VertexPartition:
    """Vertex classes in cyclic order; must cover 0..n-1 disjointly."""

    parts: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if not self.parts:
            raise ValueError("a partition needs at least one part")
        if any(len(p) == 0 for p in self.parts):
            raise ValueError("empty parts are not allowed")


@dataclass(frozen=True)
class Piece:
    """One piece of an edge decomposition: declared vertices plus edges."""

    vertices: frozenset[int]
    edges: frozenset[tuple[int, int]]


@dataclass(frozen=True)
class EdgeDecomposition:
    """Pieces in cyclic order; their edge sets must partition E(G)."""

    pieces: tuple[Piece, ...]

    def __post_init__(self) -> None:
        if not self.pieces:
            raise ValueError("a decomposition needs at least one piece")


@dataclass(frozen=True)
class CyclicSymmetry:
    """A vertex permutation intended to shift every part onto the next one."""

    sigma: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.sigma) != list(range(len(self.sigma))):
            raise ValueError("sigma must be a permutation of 0..n-1")


def validate_partition(g: Graph, partition: VertexPartition) -> None:
    """Raise ValueError unless the parts cover V(g) disjointly."""
    seen: set[int] = set()
    for part in partition.parts:
        for v in part:
            if not 0 <= v < g.n:
                raise ValueError(f"vertex {v} out of range")
            if v in seen:
                raise ValueError(f"vertex {v} appears in two parts")
            seen.add(v)
    if len(seen) != g.n:
        raise ValueError("parts do not cover every vertex")


def validate_decomposition(g: Graph, decomposition: EdgeDecomposition) -> None:
    """Raise ValueError unless the piece edge sets partition E(g)."""
    seen: set[tuple[int, int]] = set()
    for idx, piece in enumerate(decomposition.pieces):
        for v in piece.vertices:
            if not 0 <= v < g.n:
                raise ValueError(f"piece {idx}: vertex {v} out of range")
        for u, v in piece.edges:
            e = norm_edge(u, v)
            if not g.has_edge(*e):
                raise ValueError(f"piece {idx}: edge {e} is not in the graph")
            if e in seen:
                raise ValueError(f"edge {e} appears in two pieces")
            if u not in piece.vertices or v not in piece.vertices:
                raise ValueError(f"piece {idx}: edge {e} leaves the declared vertex set")
            seen.add(e)
    if len(seen) != g.edge_count:
        raise ValueError("piece edges do not cover every edge")


def columns_partition(m: int, n: int) -> VertexPartition:
    """Columns of the C_m x C_n torus (ids i*n + j): part j holds column j."""
    if m < 3 or n < 3:
        raise ValueError("both cycle factors need at least 3 vertices")
    return VertexPartition(
        tuple(frozenset(i * n + j for i in range(m)) for j in range(n))
    )


def star_decomposition_bipartite(m: int, n: int) -> EdgeDecomposition:
    """K_{m,n} as m stars: piece i is vertex i joined to the whole right side."""
    if m < 1 or n < 1:
        raise ValueError("both sides must be nonempty")
    right = frozenset(range(m, m + n))
    pieces = tuple(
        Piece(vertices=frozenset({i}) | right, edges=frozenset((i, w) for w in right))
        for i in range(m)
    )
    return EdgeDecomposition(pieces)


def star_decomposition_complete(n: int) -> EdgeDecomposition:
    """K_n (odd n >= 3) as n half-stars: piece i joins v_i to the next (n-1)/2.

    Piece i declares vertices v_i..v_{i+(n-1)/2} (mod n) and the edges from
    v_i to each of them.  Even n would cover every edge twice and is
    rejected.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError("this star decomposition needs an odd n >= 3")
    half = (n - 1) // 2
    pieces = []
    for i in range(n):
        verts = frozenset((i + j) % n for j in range(half + 1))
        edges = frozenset(norm_edge(i, (i + j) % n) for j in range(1, half + 1))
        pieces.append(Piece(vertices=verts, edges=edges))
    return EdgeDecomposition(tuple(pieces))


def circulant14_decomposition(k: int) -> EdgeDecomposition:
    """The stride-{1,4} circulant on 4k vertices as 4k two-edge fans.

    Piece i declares vertices {v_i, v_{i+1}, v_{i+4}} and edges
    {v_i v_{i+1}, v_i v_{i+4}} (mod 4k); needs k >= 3 so both stride orbits
    are full and the pieces stay edge-disjoint.
    """
    if k < 3:
        raise ValueError("need k >= 3")
    n = 4 * k
    pieces = []
    for i in range(n):
        verts = frozenset({i, (i + 1) % n, (i + 4) % n})
        edges = frozenset({norm_edge(i, (i + 1) % n), norm_edge(i, (i + 4) % n)})
        pieces.append(Piece(vertices=verts, edges=edges))
    return EdgeDecomposition(tuple(pieces))


def _relabel(vertices: Iterable[int], edges: Iterable[tuple[int, int]]) -> Graph:
    ids = sorted(set(vertices))
    pos = {v: i for i, v in enumerate(ids)}
    return Graph.from_edges(len(ids), sorted(norm_edge(pos[u], pos[v]) for u, v in edges))


def _partition_window(g: Graph, parts: tuple[frozenset[int], ...], start: int, length: int) -> Graph:
    t = len(parts)
    verts: set[int] = set()
    for off in range(length):
        verts |= parts[(start + off) % t]
    edges = [e for e in g.edges() if e[0] in verts and e[1] in verts]
    return _relabel(verts, edges)


def _decomposition_window(pieces: tuple[Piece, ...], start: int, length: int) -> Graph:
    t = len(pieces)
    verts: set[int] = set()
    edges: set[tuple[int, int]] = set()
    for off in range(length):
        piece = pieces[(start + off) % t]
        verts |= piece.vertices
        edges |= {norm_edge(u, v) for u, v in piece.edges}
    return _relabel(verts, edges)


def _fingerprint(g: Graph) -> tuple:
    return (g.n, g.edge_count, tuple(sorted(g.degrees())))


def _windows_all_isomorphic(window_at, t: int, iso_budget: int) -> bool:
    for length in range(1, t + 1):
        windows = [window_at(i, length) for i in range(t)]
        anchor = windows[0]
        fp = _fingerprint(anchor)
        if any(_fingerprint(w) != fp for w in windows[1:]):
            return False
        for w in windows[1:]:
            if w == anchor:
                continue
            if not isomorphic(anchor, w, node_budget=iso_budget):
                return False
    return True


def is_transitive_partition(
    g: Graph, partition: VertexPartition, *, iso_budget: int = DEFAULT_ISO_BUDGET
) -> bool:
    """Window test over induced subgraphs for every length 1..t."""
    validate_partition(g, partition)
    parts = partition.parts
    return _windows_all_isomorphic(
        lambda i, length: _partition_window(g, parts, i, length), len(parts), iso_budget
    )


def is_transitive_decomposition(
    g: Graph, decomposition: EdgeDecomposition, *, iso_budget: int = DEFAULT_ISO_BUDGET
) -> bool:
    """Window test over piece unions for every length 1..t."""
    validate_decomposition(g, decomposition)
    pieces = decomposition.pieces
    return _windows_all_isomorphic(
        lambda i, length: _decomposition_window(pieces, i, length), len(pieces), iso_budget
    )


def find_transitive_partition(
    g: Graph,
    t: int,
    *,
    candidate_budget: int = 1_000_000,
    iso_budget: int = DEFAULT_ISO_BUDGET,
) -> Optional[VertexPartition]:
    """Exhaustive search for a transitive partition into t cyclic classes.

    Candidates are deduplicated up to rotation (vertex 0 pinned to class 0)
    and reflection (class 1 anchored below class t-1).  Meant for small
    graphs; raises BudgetExceededError past candidate_budget candidates.
    Equal class sizes are forced by single-part windows, so t must divide
    |V| for any witness to exist.
    """
    if not 2 <= t <= g.n:
        raise ValueError(f"t must be in 2..{g.n}")
    if g.n % t != 0:
        return None
    size = g.n // t
    budget = candidate_budget
    all_vs = set(range(g.n))

    def class_fingerprint(vs: frozenset[int]) -> tuple:
        sub = [e for e in g.edges() if e[0] in vs and e[1] in vs]
        return _fingerprint(_relabel(vs, sub))

    def extend(chosen: list[frozenset[int]], remaining: set[int]):
        nonlocal budget
        if len(chosen) == t:
            budget -= 1
            if budget < 0:
                raise BudgetExceededError("partition search candidate budget exceeded")
            if t >= 3 and min(chosen[1]) > min(chosen[-1]):
                return None
            candidate = VertexPartition(tuple(chosen))
            if is_transitive_partition(g, candidate, iso_budget=iso_budget):
                return candidate
            return None
        fp0 = class_fingerprint(chosen[0])
        for picked in combinations(sorted(remaining), size):
            cls = frozenset(picked)
            if class_fingerprint(cls) != fp0:
                continue
            found = extend(chosen + [cls], remaining - cls)
            if found is not None:
                return found
        return None

    for rest in combinations(range(1, g.n), size - 1):
        cls0 = frozenset((0,) + rest)
        found = extend([cls0], all_vs - cls0)
        if found is not None:
            return found
    return None


def column_shift_symmetry(m: int, n: int) -> CyclicSymmetry:
    """The torus automorphism (i, j) -> (i, j+1 mod n) on ids i*n + j."""
    if m < 3 or n < 3:
        raise ValueError("both cycle factors need at least 3 vertices")
    return CyclicSymmetry(
        tuple(i * n + (j + 1) % n for i in range(m) for j in range(n))
    )


def cyclic_symmetry_violations(
    g: Graph, partition: VertexPartition, symmetry: CyclicSymmetry
) -> list[str]:
    """All of sigma's failures: non-automorphism edges, then non-shifted parts."""
    validate_partition(g, partition)
    sigma = symmetry.sigma
    if len(sigma) != g.n:
        return [f"permutation length {len(sigma)} does not match {g.n} vertices"]
    out = []
    for u, v in g.edges():
        if not g.has_edge(sigma[u], sigma[v]):
            out.append(
                f"automorphism: edge ({u}, {v}) maps to non-edge ({sigma[u]}, {sigma[v]})"
            )
    t = len(partition.parts)
    for i, part in enumerate(partition.parts):
        image = frozenset(sigma[v] for v in part)
        succ = partition.parts[(i + 1) % t]
        if image != succ:
            out.append(f"shift: part {i} does not map onto part {(i + 1) % t}")
    return out


def verify_cyclic_symmetry(
    g: Graph, partition: VertexPartition, symmetry: CyclicSymmetry
) -> bool:
    """True when sigma is an automorphism carrying every part to the next."""
    return not cyclic_symmetry_violations(g, partition, symmetry)

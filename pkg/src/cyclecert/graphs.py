"""Small immutable simple graphs with bitmask adjacency, plus the generators
used throughout: cycles, cliques, bipartite cliques, torus products of two
cycles, and circulants.

Vertices are always 0..n-1.  Loops and parallel edges are rejected at
construction time; every edge is stored normalized as (u, v) with u < v.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

__all__ = [
    "Graph",
    "norm_edge",
    "cycle",
    "complete",
    "complete_bipartite",
    "cartesian_cycles",
    "circulant",
]


def norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; adj[v] is the neighbor set of v as a bitmask."""

    n: int
    adj: tuple[int, ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        rows = [0] * n
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise ValueError(f"loop at vertex {u} is not allowed")
            e = norm_edge(u, v)
            if e in seen:
                raise ValueError(f"parallel edge {e} is not allowed")
            seen.add(e)
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n=n, adj=tuple(rows))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1)
            v = u + 1
            while row:
                if row & 1:
                    out.append((u, v))
                row >>= 1
                v += 1
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> Iterator[int]:
        row = self.adj[v]
        u = 0
        while row:
            if row & 1:
                yield u
            row >>= 1
            u += 1

    def closed_mask(self, v: int) -> int:
        return self.adj[v] | (1 << v)


def cycle(n: int) -> Graph:
    """The cycle C_n, n >= 3, with edges (i, i+1 mod n)."""
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    """The clique K_n, n >= 1."""
    if n < 1:
        raise ValueError("a complete graph needs at least 1 vertex")
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n}: side U is 0..m-1, side W is m..m+n-1."""
    if m < 1 or n < 1:
        raise ValueError("both sides of a bipartite clique must be nonempty")
    return Graph.from_edges(m + n, ((u, m + w) for u in range(m) for w in range(n)))


def cartesian_cycles(m: int, n: int) -> Graph:
    """The torus product of C_m and C_n; vertex (i, j) has id i*n + j.

    Edges join (i, j)-(i, j+1) and (i, j)-(i+1, j), both indices cyclic.
    Requires m, n >= 3 so that the product stays a simple graph.
    """
    if m < 3 or n < 3:
        raise ValueError("both cycle factors need at least 3 vertices")
    edges = []
    for i in range(m):
        for j in range(n):
            edges.append((i * n + j, i * n + (j + 1) % n))
            edges.append((i * n + j, ((i + 1) % m) * n + j))
    return Graph.from_edges(m * n, edges)


def circulant(n: int, strides: Iterable[int]) -> Graph:
    """Circulant graph on Z_n with edges {i, i+a mod n} for each stride a.

    Strides must be distinct values in 1..n//2; a stride equal to n/2
    contributes each diameter once.
    """
    ss = sorted(set(strides))
    if not ss:
        raise ValueError("at least one stride is required")
    if n < 2:
        raise ValueError("a circulant needs at least 2 vertices")
    for a in ss:
        if not 1 <= a <= n // 2:
            raise ValueError(f"stride {a} out of range 1..{n // 2}")
    edges = set()
    for a in ss:
        for i in range(n):
            edges.add(norm_edge(i, (i + a) % n))
    return Graph.from_edges(n, sorted(edges))

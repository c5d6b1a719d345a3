"""Exact graph isomorphism by color refinement plus backtracking.

Vertices are first partitioned by iterated neighborhood-color refinement
(degree, then multiset of neighbor colors, to a fixed point, with color ids
shared across both graphs).  Backtracking then maps vertices of the first
graph in most-constrained-first order; a candidate image must carry the same
color and reproduce the adjacency pattern against everything already mapped,
which one bitmask comparison checks.

The search counts candidate assignments as nodes and raises
IsomorphismBudgetError past the cap, so "unknown" is never conflated with
"not isomorphic".  Exactness over speed: no hashing shortcuts decide the
positive answer, only an explicit bijection does.
"""

from __future__ import annotations

from collections import Counter

from .errors import IsomorphismBudgetError
from .graphs import Graph

__all__ = ["isomorphic", "DEFAULT_ISO_BUDGET"]

DEFAULT_ISO_BUDGET = 1_000_000


def _refine_colors(g1: Graph, g2: Graph) -> tuple[list[int], list[int]] | None:
    """Joint color refinement; None when the color histograms split apart."""
    c1 = [g1.degree(v) for v in range(g1.n)]
    c2 = [g2.degree(v) for v in range(g2.n)]
    if Counter(c1) != Counter(c2):
        return None
    while True:
        sigs: dict[tuple, int] = {}

        def resign(g: Graph, cols: list[int]) -> list[int]:
            out = []
            for v in range(g.n):
                sig = (cols[v], tuple(sorted(cols[u] for u in g.neighbors(v))))
                out.append(sigs.setdefault(sig, len(sigs)))
            return out

        n1 = resign(g1, c1)
        n2 = resign(g2, c2)
        if Counter(n1) != Counter(n2):
            return None
        if len(set(n1)) == len(set(c1)):
            return n1, n2
        c1, c2 = n1, n2


def isomorphic(g1: Graph, g2: Graph, *, node_budget: int = DEFAULT_ISO_BUDGET) -> bool:
    """Decide whether two graphs are isomorphic (declared vertex sets included).

    Isolated vertices count: graphs of unequal order are never isomorphic.
    Raises IsomorphismBudgetError when the backtracker exceeds node_budget
    candidate placements.
    """
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    if g1.n == 0:
        return True
    refined = _refine_colors(g1, g2)
    if refined is None:
        return False
    c1, c2 = refined
    class_size = Counter(c1)
    # Most-constrained-first: rare colors early, then high degree.
    order = sorted(range(g1.n), key=lambda v: (class_size[c1[v]], -g1.degree(v), v))
    by_color: dict[int, list[int]] = {}
    for w in range(g2.n):
        by_color.setdefault(c2[w], []).append(w)

    image = [-1] * g1.n
    used = 0
    nodes = 0

    def place(depth: int) -> bool:
        nonlocal used, nodes
        if depth == len(order):
            return True
        v = order[depth]
        # Image of v's already-mapped neighborhood, as a bitmask.
        want = 0
        for d in range(depth):
            u = order[d]
            if g1.adj[v] >> u & 1:
                want |= 1 << image[u]
        mapped_imgs = used
        for w in by_color.get(c1[v], ()):
            if used >> w & 1:
                continue
            nodes += 1
            if nodes > node_budget:
                raise IsomorphismBudgetError(
                    f"isomorphism search exceeded {node_budget} nodes"
                )
            if g2.adj[w] & mapped_imgs != want:
                continue
            image[v] = w
            used |= 1 << w
            if place(depth + 1):
                return True
            used &= ~(1 << w)
            image[v] = -1
        return False

    return place(0)

"""Shared test oracles, each implemented straight from the definition and
independent of the library internals: set arithmetic instead of bitmasks,
permutation search instead of refinement, float geometry instead of the
interleaving rule."""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

import pytest

from cyclecert.graphs import Graph


# --- cyclic sums -------------------------------------------------------------


def brute_rotation_exists(xs: list[Fraction], h: Fraction, below: bool) -> int | None:
    """Smallest start k (1-based) with all strict prefix inequalities, by
    trying every rotation and every prefix directly."""
    n = len(xs)
    c = Fraction(h) / n
    for k in range(1, n + 1):
        acc = Fraction(0)
        ok = True
        for j in range(1, n + 1):
            acc += xs[(k - 1 + j - 1) % n]
            if below and not acc < c * j:
                ok = False
                break
            if not below and not acc > c * j:
                ok = False
                break
        if ok:
            return k
    return None


def random_rational_list(rng: random.Random, n: int) -> list[Fraction]:
    return [Fraction(rng.randint(-8, 8), rng.choice([1, 2, 3, 4])) for _ in range(n)]


# --- graphs and domination ---------------------------------------------------


def adj_sets(g: Graph) -> list[set[int]]:
    nbrs: list[set[int]] = [set() for _ in range(g.n)]
    for u, v in g.edges():
        nbrs[u].add(v)
        nbrs[v].add(u)
    return nbrs


def brute_is_dominating(g: Graph, s: set[int]) -> bool:
    nbrs = adj_sets(g)
    return all(v in s or nbrs[v] & s for v in range(g.n))


def brute_is_total_dominating(g: Graph, s: set[int]) -> bool:
    nbrs = adj_sets(g)
    return all(nbrs[v] & s for v in range(g.n))


def brute_has_perfect_matching(g: Graph, s: set[int]) -> bool:
    if len(s) % 2 == 1:
        return False
    nbrs = adj_sets(g)
    rest = sorted(s)

    def rec(remaining: list[int]) -> bool:
        if not remaining:
            return True
        v = remaining[0]
        for w in remaining[1:]:
            if w in nbrs[v]:
                rest2 = [x for x in remaining if x not in (v, w)]
                if rec(rest2):
                    return True
        return False

    return rec(rest)


def brute_is_paired_dominating(g: Graph, s: set[int]) -> bool:
    return brute_is_dominating(g, s) and brute_has_perfect_matching(g, s)


def brute_min_parameter(g: Graph, variant: str) -> int | None:
    """Exhaustive minimum over all subsets, ascending size."""
    check = {
        "dominating": brute_is_dominating,
        "total": brute_is_total_dominating,
        "paired": brute_is_paired_dominating,
    }[variant]
    for k in range(0, g.n + 1):
        for combo in itertools.combinations(range(g.n), k):
            if check(g, set(combo)):
                return k
    return None


def brute_max_minimal_parameter(g: Graph, variant: str) -> int | None:
    """Exhaustive maximum over minimal sets, by definitional removal test."""
    check = {
        "dominating": brute_is_dominating,
        "total": brute_is_total_dominating,
    }[variant]
    best = None
    for k in range(g.n, 0, -1):
        for combo in itertools.combinations(range(g.n), k):
            s = set(combo)
            if not check(g, s):
                continue
            if all(not check(g, s - {v}) for v in s):
                return k
    return best


# --- isomorphism -------------------------------------------------------------


def perm_isomorphic(g1: Graph, g2: Graph) -> bool:
    """All-permutations oracle, n <= 8."""
    if g1.n != g2.n:
        return False
    e2 = set(g2.edges())
    for perm in itertools.permutations(range(g1.n)):
        if all((min(perm[u], perm[v]), max(perm[u], perm[v])) in e2 for u, v in g1.edges()) \
                and len(g1.edges()) == len(e2):
            return True
    return False


# --- random graphs -----------------------------------------------------------


def random_regular_graph(rng: random.Random, n: int, d: int) -> Graph:
    """Configuration model, resampled until simple."""
    assert n * d % 2 == 0
    while True:
        stubs = [v for v in range(n) for _ in range(d)]
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v or (min(u, v), max(u, v)) in edges:
                ok = False
                break
            edges.add((min(u, v), max(u, v)))
        if ok:
            return Graph.from_edges(n, sorted(edges))


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


# --- geometry oracle for convex drawings -------------------------------------


def _segments_cross(p1, p2, p3, p4) -> bool:
    def orient(a, b, c):
        val = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
        if abs(val) < 1e-12:
            return 0
        return 1 if val > 0 else -1

    return (
        orient(p1, p2, p3) != orient(p1, p2, p4)
        and orient(p3, p4, p1) != orient(p3, p4, p2)
        and orient(p1, p2, p3) != 0
        and orient(p1, p2, p4) != 0
        and orient(p3, p4, p1) != 0
        and orient(p3, p4, p2) != 0
    )


def geometry_convex_crossings(g: Graph, order: list[int]) -> set[tuple]:
    """Crossing pairs of a circle drawing, decided with float geometry."""
    n = g.n
    pos = {}
    for idx, v in enumerate(order):
        angle = 2 * math.pi * idx / n
        pos[v] = (math.cos(angle), math.sin(angle))
    edges = g.edges()
    out = set()
    for i, (a, b) in enumerate(edges):
        for c, d in edges[i + 1 :]:
            if {a, b} & {c, d}:
                continue
            if _segments_cross(pos[a], pos[b], pos[c], pos[d]):
                e, f = (a, b), (c, d)
                out.add((e, f) if e <= f else (f, e))
    return out


# --- cycles in graphs --------------------------------------------------------


def simple_cycles_upto(g: Graph, max_len: int) -> list[list[tuple[int, int]]]:
    """Edge lists of all simple cycles with at most max_len vertices."""
    nbrs = adj_sets(g)
    found = set()
    cycles = []

    def walk(path: list[int]) -> None:
        v = path[-1]
        for w in sorted(nbrs[v]):
            if w == path[0] and len(path) >= 3:
                key = frozenset(path)
                canon = tuple(sorted(
                    (min(a, b), max(a, b))
                    for a, b in zip(path, path[1:] + [path[0]])
                ))
                if (key, canon) not in found:
                    found.add((key, canon))
                    cycles.append([
                        (min(a, b), max(a, b))
                        for a, b in zip(path, path[1:] + [path[0]])
                    ])
            elif w not in path and w > path[0] and len(path) < max_len:
                walk(path + [w])

    for v in range(g.n):
        walk([v])
    return cycles


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260819)

"""Exact rotation certificates for strict prefix-sum bounds on cyclic lists.

For a cyclic list x_1..x_n of rationals with total s, a bound h, and the
per-slot average c = h/n, this module produces and checks three kinds of
witness:

* a rotation certificate: a start k whose cyclic prefix sums stay strictly
  below c*j (or strictly above, for the dual direction) for every prefix
  length j in 1..n; one exists exactly when s < h (respectively s > h);

* a per-start witness vector g_1..g_n: for each start i, the least prefix
  length j at which the running sum reaches c*j (at least, or at most for
  the dual goal); the full vector exists exactly when s >= h (resp. s <= h),
  and the greedy block cover built from it tiles one full wrap of the list
  into blocks that each meet the per-slot average;

* an equality certificate: a below-certificate at h + eps paired with an
  above-certificate at h - eps for a rational 0 < eps < 1; the pair exists
  exactly when s = h.

All arithmetic is exact `fractions.Fraction`; there is no float mode.
Indices are 1-based in every public signature and certificate, in the style
of cycle-lemma statements; subscripts wrap modulo n.

`find_rotation` locates a candidate start in O(n) by walking the running
sums of (x_i - c): the slot after the last maximum works for the below
direction (last minimum for above).  The candidate is verified before it is
returned, with the O(n^2) `scan_rotation` as a defensive fallback, so the
existence answer always agrees with the exhaustive scan.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

RationalLike = Union[Fraction, int, str]

__all__ = [
    "Direction",
    "PrefixGoal",
    "CyclicList",
    "BoundSpec",
    "RotationCertificate",
    "EqualityCertificate",
    "Block",
    "BlockCover",
    "as_fraction",
    "cyclic_list",
    "total",
    "scan_rotation",
    "find_rotation",
    "verify_certificate",
    "prefix_condition_all_starts",
    "greedy_block_cover",
    "equality_certificate",
]


class Direction(Enum):
    """Which strict side of the average bound a certificate pins down."""

    BELOW = "below"
    ABOVE = "above"


class PrefixGoal(Enum):
    """Per-start goal: some prefix reaches at least (or at most) the average."""

    GEQ_SOMEWHERE = "geq"
    LEQ_SOMEWHERE = "leq"


def as_fraction(value: RationalLike) -> Fraction:
    """Coerce ints, 'p/q' strings, and Fractions to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"not an exact rational: {value!r}")


@dataclass(frozen=True)
class CyclicList:
    """A nonempty tuple of exact rationals read cyclically with 1-based slots."""

    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.values) == 0:
            raise ValueError("cyclic list must have at least one entry")
        if not all(isinstance(v, Fraction) for v in self.values):
            raise TypeError("cyclic list entries must be Fractions; use cyclic_list()")

    @property
    def n(self) -> int:
        return len(self.values)

    def at(self, i: int) -> Fraction:
        """Entry at 1-based cyclic position i (any integer i is accepted)."""
        return self.values[(i - 1) % len(self.values)]


def cyclic_list(values: Union[CyclicList, Iterable[RationalLike]]) -> CyclicList:
    """Build a CyclicList, coercing entries; idempotent on CyclicList."""
    if isinstance(values, CyclicList):
        return values
    return CyclicList(tuple(as_fraction(v) for v in values))


@dataclass(frozen=True)
class BoundSpec:
    """Equality target h with the strict-window half-width eps, 0 < eps < 1."""

    h: Fraction
    epsilon: Fraction = Fraction(1, 2)

    def __post_init__(self) -> None:
        object.__setattr__(self, "h", as_fraction(self.h))
        object.__setattr__(self, "epsilon", as_fraction(self.epsilon))
        if not Fraction(0) < self.epsilon < Fraction(1):
            raise ValueError("epsilon must satisfy 0 < eps < 1")


@dataclass(frozen=True)
class RotationCertificate:
    """A start k plus the prefix-sum table that witnesses one strict direction.

    prefix_sums[j-1] is the sum of the j entries starting at slot k, wrapping
    cyclically; a verifier recomputes the table and re-checks every strict
    inequality rather than trusting the stored values.
    """

    direction: Direction
    k: int
    prefix_sums: tuple[Fraction, ...]

    @property
    def n(self) -> int:
        return len(self.prefix_sums)


@dataclass(frozen=True)
class EqualityCertificate:
    """Paired below/above certificates that together pin the total exactly."""

    below: RotationCertificate
    above: RotationCertificate

    @property
    def k1(self) -> int:
        return self.below.k

    @property
    def k2(self) -> int:
        return self.above.k


@dataclass(frozen=True)
class Block:
    """One greedy block: 1-based start slot, length, and exact sum."""

    start: int
    length: int
    total: Fraction


@dataclass(frozen=True)
class BlockCover:
    """Greedy blocks tiling at least one full wrap; only the last may wrap."""

    blocks: tuple[Block, ...]

    @property
    def covered_length(self) -> int:
        return sum(b.length for b in self.blocks)


def total(xs: Union[CyclicList, Iterable[RationalLike]]) -> Fraction:
    """Exact sum of the list."""
    return sum(cyclic_list(xs).values, Fraction(0))


def _prefixes_from(cl: CyclicList, k: int) -> tuple[Fraction, ...]:
    out = []
    acc = Fraction(0)
    for j in range(cl.n):
        acc += cl.at(k + j)
        out.append(acc)
    return tuple(out)


def _strict_ok(prefixes: Sequence[Fraction], c: Fraction, direction: Direction) -> bool:
    if direction is Direction.BELOW:
        return all(p < c * j for j, p in enumerate(prefixes, start=1))
    return all(p > c * j for j, p in enumerate(prefixes, start=1))


def _certificate_at(cl: CyclicList, c: Fraction, k: int, direction: Direction) -> Optional[RotationCertificate]:
    prefixes = _prefixes_from(cl, k)
    if _strict_ok(prefixes, c, direction):
        return RotationCertificate(direction=direction, k=k, prefix_sums=prefixes)
    return None


def scan_rotation(
    xs: Union[CyclicList, Iterable[RationalLike]],
    h: RationalLike,
    direction: Direction,
) -> Optional[RotationCertificate]:
    """Exhaustive O(n^2) search; returns the certificate at the smallest k."""
    cl = cyclic_list(xs)
    c = as_fraction(h) / cl.n
    for k in range(1, cl.n + 1):
        cert = _certificate_at(cl, c, k, direction)
        if cert is not None:
            return cert
    return None


def find_rotation(
    xs: Union[CyclicList, Iterable[RationalLike]],
    h: RationalLike,
    direction: Direction,
) -> Optional[RotationCertificate]:
    """O(n) certificate search: start just past the last extreme running sum.

    Existence always agrees with scan_rotation; the returned k may differ.
    The candidate start is verified before being returned, and any surprise
    failure falls back to the exhaustive scan.
    """
    cl = cyclic_list(xs)
    hf = as_fraction(h)
    s = total(cl)
    if direction is Direction.BELOW and not s < hf:
        return None
    if direction is Direction.ABOVE and not s > hf:
        return None
    c = hf / cl.n
    # Running sums S_i of (x_1 - c) .. (x_i - c) for i = 0..n-1, S_0 = 0.
    best_i = 0
    best = Fraction(0)
    run = Fraction(0)
    for i in range(1, cl.n):
        run += cl.at(i) - c
        if direction is Direction.BELOW:
            if run >= best:
                best, best_i = run, i
        else:
            if run <= best:
                best, best_i = run, i
    cert = _certificate_at(cl, c, best_i + 1, direction)
    if cert is not None:
        return cert
    return scan_rotation(cl, hf, direction)


def verify_certificate(
    xs: Union[CyclicList, Iterable[RationalLike]],
    h: RationalLike,
    cert: RotationCertificate,
) -> bool:
    """Recompute the prefix table at cert.k and re-check every inequality.

    A tampered or stale prefix table yields False; a start index outside
    1..n is malformed input and raises instead.
    """
    cl = cyclic_list(xs)
    if not 1 <= cert.k <= cl.n:
        raise ValueError(f"certificate start {cert.k} out of range 1..{cl.n}")
    if len(cert.prefix_sums) != cl.n:
        return False
    prefixes = _prefixes_from(cl, cert.k)
    if tuple(prefixes) != tuple(cert.prefix_sums):
        return False
    return _strict_ok(prefixes, as_fraction(h) / cl.n, cert.direction)


def prefix_condition_all_starts(
    xs: Union[CyclicList, Iterable[RationalLike]],
    h: RationalLike,
    goal: PrefixGoal,
) -> tuple[bool, Optional[tuple[int, ...]]]:
    """Least qualifying prefix length for every start, or (False, None).

    For goal GEQ_SOMEWHERE, entry i is the least j with the j-term sum from
    start i at least c*j; the vector exists for all starts exactly when the
    total is >= h (dually <= h for LEQ_SOMEWHERE).
    """
    cl = cyclic_list(xs)
    c = as_fraction(h) / cl.n
    witnesses = []
    for i in range(1, cl.n + 1):
        acc = Fraction(0)
        hit = 0
        for j in range(1, cl.n + 1):
            acc += cl.at(i + j - 1)
            if goal is PrefixGoal.GEQ_SOMEWHERE:
                if acc >= c * j:
                    hit = j
                    break
            else:
                if acc <= c * j:
                    hit = j
                    break
        if hit == 0:
            return False, None
        witnesses.append(hit)
    return True, tuple(witnesses)


def greedy_block_cover(
    xs: Union[CyclicList, Iterable[RationalLike]],
    c: RationalLike,
    start: int,
) -> BlockCover:
    """Tile one full wrap from `start` into blocks that each meet average c.

    Each block runs from its start for exactly the least prefix length that
    reaches sum >= c * length, then the next block begins where it ended.
    Requires every start to have such a length (i.e. total >= c * n); the
    caller chooses `start` and is expected to hand in a slot where the
    witness vector attains its maximum when the textbook construction is
    wanted, but any slot is tiled faithfully.  With the textbook choice the
    blocks cover each slot exactly once and only the final block wraps past
    slot n; from other starts the cover may overshoot.
    """
    cl = cyclic_list(xs)
    cf = as_fraction(c)
    ok, gs = prefix_condition_all_starts(cl, cf * cl.n, PrefixGoal.GEQ_SOMEWHERE)
    if not ok:
        raise ValueError("no qualifying prefix at some start; total is below c * n")
    if not 1 <= start <= cl.n:
        raise ValueError(f"start {start} out of range 1..{cl.n}")
    assert gs is not None
    blocks = []
    covered = 0
    pos = start
    while covered < cl.n:
        g = gs[pos - 1]
        blk_total = sum((cl.at(pos + off) for off in range(g)), Fraction(0))
        blocks.append(Block(start=pos, length=g, total=blk_total))
        covered += g
        pos = (pos - 1 + g) % cl.n + 1
    return BlockCover(tuple(blocks))


def equality_certificate(
    xs: Union[CyclicList, Iterable[RationalLike]],
    bound: BoundSpec,
) -> Optional[EqualityCertificate]:
    """Certify total == bound.h via below(h + eps) plus above(h - eps)."""
    below = find_rotation(xs, bound.h + bound.epsilon, Direction.BELOW)
    if below is None:
        return None
    above = find_rotation(xs, bound.h - bound.epsilon, Direction.ABOVE)
    if above is None:
        return None
    return EqualityCertificate(below=below, above=above)

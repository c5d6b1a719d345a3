"""On-disk formats: certificate/partition/decomposition/drawing JSON, the
plain-text graph format, and the graph spec mini-language.

Graph text files say "n m" on the first line and one "u v" edge per line,
vertices 0-based.  Graph specs name a family (cycle:n, torus:m:n,
circulant:n:a,b, complete:n, kmn:m:n) or point at a file with @path;
JSON drawings may carry either a spec string or an inline graph object.
Rationals are {"num": p, "den": q} objects so nothing is ever rounded.
All parsers raise ValueError with a line- or field-specific message.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction
from typing import Any, Optional, Union

from .crossing import AbstractDrawing
from .cyclic_core import (
    BoundSpec,
    Direction,
    EqualityCertificate,
    RotationCertificate,
)
from .graphs import Graph, cartesian_cycles, circulant, complete, complete_bipartite, cycle, norm_edge
from .structures import EdgeDecomposition, Piece, VertexPartition

__all__ = [
    "fraction_to_json",
    "fraction_from_json",
    "certificate_to_json",
    "certificate_from_json",
    "equality_to_json",
    "equality_from_json",
    "graph_to_json",
    "graph_from_json",
    "parse_graph_text",
    "emit_graph_text",
    "parse_graph_spec",
    "partition_to_json",
    "partition_from_json",
    "decomposition_to_json",
    "decomposition_from_json",
    "drawing_to_json",
    "drawing_from_json",
    "dump_json",
]


def fraction_to_json(value: Fraction) -> dict[str, int]:
    value = Fraction(value)
    return {"num": value.numerator, "den": value.denominator}


def fraction_from_json(obj: Any) -> Fraction:
    if not isinstance(obj, dict) or set(obj) != {"num", "den"}:
        raise ValueError(f"expected a num/den object, got {obj!r}")
    num, den = obj["num"], obj["den"]
    if not isinstance(num, int) or not isinstance(den, int) or isinstance(num, bool) or isinstance(den, bool):
        raise ValueError(f"num/den must be integers, got {obj!r}")
    if den <= 0:
        raise ValueError(f"den must be positive, got {den}")
    return Fraction(num, den)


def certificate_to_json(cert: RotationCertificate, h: Fraction) -> dict[str, Any]:
    return {
        "direction": cert.direction.value,
        "k": cert.k,
        "n": cert.n,
        "h": fraction_to_json(h),
        "prefix": [fraction_to_json(p) for p in cert.prefix_sums],
    }


def certificate_from_json(doc: Any) -> tuple[RotationCertificate, Fraction]:
    if not isinstance(doc, dict):
        raise ValueError("certificate document must be an object")
    try:
        direction = Direction(doc["direction"])
        k = doc["k"]
        n = doc["n"]
        h = fraction_from_json(doc["h"])
        prefix = tuple(fraction_from_json(p) for p in doc["prefix"])
    except KeyError as missing:
        raise ValueError(f"certificate document lacks field {missing}") from None
    if not isinstance(k, int) or isinstance(k, bool):
        raise ValueError(f"k must be an integer, got {k!r}")
    if not isinstance(n, int) or isinstance(n, bool) or n != len(prefix):
        raise ValueError("n must match the prefix table length")
    return RotationCertificate(direction=direction, k=k, prefix_sums=prefix), h


def equality_to_json(eq: EqualityCertificate, bound: BoundSpec) -> dict[str, Any]:
    return {
        "h": fraction_to_json(bound.h),
        "epsilon": fraction_to_json(bound.epsilon),
        "below": certificate_to_json(eq.below, bound.h + bound.epsilon),
        "above": certificate_to_json(eq.above, bound.h - bound.epsilon),
    }


def equality_from_json(doc: Any) -> tuple[EqualityCertificate, BoundSpec]:
    if not isinstance(doc, dict):
        raise ValueError("equality document must be an object")
    try:
        bound = BoundSpec(
            h=fraction_from_json(doc["h"]), epsilon=fraction_from_json(doc["epsilon"])
        )
        below, below_h = certificate_from_json(doc["below"])
        above, above_h = certificate_from_json(doc["above"])
    except KeyError as missing:
        raise ValueError(f"equality document lacks field {missing}") from None
    if below_h != bound.h + bound.epsilon or above_h != bound.h - bound.epsilon:
        raise ValueError("nudged bounds do not match h and epsilon")
    return EqualityCertificate(below=below, above=above), bound


def graph_to_json(g: Graph) -> dict[str, Any]:
    return {"n": g.n, "edges": [list(e) for e in g.edges()]}


def graph_from_json(obj: Any) -> Graph:
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise ValueError("inline graph must be an object with n and edges")
    return Graph.from_edges(obj["n"], [tuple(e) for e in obj["edges"]])


def parse_graph_text(text: str) -> Graph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty graph file")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"first line must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ValueError(f"first line must be 'n m', got {lines[0]!r}") from None
    if len(lines) - 1 != m:
        raise ValueError(f"header says {m} edges but file has {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        cols = ln.split()
        if len(cols) != 2:
            raise ValueError(f"edge line must be 'u v', got {ln!r}")
        try:
            edges.append((int(cols[0]), int(cols[1])))
        except ValueError:
            raise ValueError(f"edge line must be 'u v', got {ln!r}") from None
    return Graph.from_edges(n, edges)


def emit_graph_text(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def _int_arg(raw: str, spec: str) -> int:
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"bad integer {raw!r} in graph spec {spec!r}") from None


def parse_graph_spec(spec: str, base_dir: Optional[str] = None) -> Graph:
    """Resolve a graph spec string: a named family or @path to a graph file."""
    text = spec.strip()
    if not text:
        raise ValueError("empty graph spec")
    if text.startswith("@"):
        path = text[1:]
        if base_dir is not None and not os.path.isabs(path):
            path = os.path.join(base_dir, path)
        try:
            with open(path, "r", encoding="utf-8") as fh:
                return parse_graph_text(fh.read())
        except OSError as err:
            raise ValueError(f"cannot read graph file {path!r}: {err}") from None
    kind, _, rest = text.partition(":")
    kind = kind.strip().lower()
    args = rest.split(":") if rest else []
    if kind == "cycle" and len(args) == 1:
        return cycle(_int_arg(args[0], spec))
    if kind == "torus" and len(args) == 2:
        return cartesian_cycles(_int_arg(args[0], spec), _int_arg(args[1], spec))
    if kind == "circulant" and len(args) == 2:
        strides = [_int_arg(s, spec) for s in args[1].split(",") if s.strip()]
        return circulant(_int_arg(args[0], spec), strides)
    if kind == "complete" and len(args) == 1:
        return complete(_int_arg(args[0], spec))
    if kind == "kmn" and len(args) == 2:
        return complete_bipartite(_int_arg(args[0], spec), _int_arg(args[1], spec))
    raise ValueError(
        f"unknown graph spec {spec!r}; expected cycle:n, torus:m:n, "
        "circulant:n:a,b, complete:n, kmn:m:n, or @path"
    )


def partition_to_json(p: VertexPartition) -> dict[str, Any]:
    return {"parts": [sorted(part) for part in p.parts]}


def partition_from_json(doc: Any) -> VertexPartition:
    if not isinstance(doc, dict) or "parts" not in doc:
        raise ValueError("partition document must be an object with parts")
    parts = doc["parts"]
    if not isinstance(parts, list) or not all(isinstance(p, list) for p in parts):
        raise ValueError("parts must be a list of vertex lists")
    return VertexPartition(tuple(frozenset(int(v) for v in p) for p in parts))


def decomposition_to_json(d: EdgeDecomposition) -> dict[str, Any]:
    return {
        "pieces": [
            {
                "vertices": sorted(piece.vertices),
                "edges": [list(e) for e in sorted(piece.edges)],
            }
            for piece in d.pieces
        ]
    }


def decomposition_from_json(doc: Any) -> EdgeDecomposition:
    if not isinstance(doc, dict) or "pieces" not in doc:
        raise ValueError("decomposition document must be an object with pieces")
    pieces = []
    for obj in doc["pieces"]:
        if not isinstance(obj, dict) or "vertices" not in obj or "edges" not in obj:
            raise ValueError("each piece needs vertices and edges")
        pieces.append(
            Piece(
                vertices=frozenset(int(v) for v in obj["vertices"]),
                edges=frozenset(norm_edge(int(u), int(v)) for u, v in obj["edges"]),
            )
        )
    return EdgeDecomposition(tuple(pieces))


GraphField = Union[str, dict[str, Any]]


def drawing_to_json(d: AbstractDrawing, graph_field: Optional[GraphField] = None) -> dict[str, Any]:
    """Emit a drawing; the graph is inlined unless a spec string is supplied."""
    field: GraphField = graph_field if graph_field is not None else graph_to_json(d.graph)
    return {
        "surface": "plane",
        "graph": field,
        "crossings": [[list(e), list(f)] for e, f in d.crossings],
    }


def drawing_from_json(doc: Any, base_dir: Optional[str] = None) -> AbstractDrawing:
    if not isinstance(doc, dict) or "graph" not in doc or "crossings" not in doc:
        raise ValueError("drawing document must be an object with graph and crossings")
    surface = doc.get("surface", "plane")
    if surface != "plane":
        raise ValueError(f"unsupported surface {surface!r}")
    field = doc["graph"]
    if isinstance(field, str):
        g = parse_graph_spec(field, base_dir)
    else:
        g = graph_from_json(field)
    crossings = doc["crossings"]
    if not isinstance(crossings, list):
        raise ValueError("crossings must be a list of edge pairs")
    pairs = []
    for item in crossings:
        try:
            (a, b) = item
            pairs.append(((int(a[0]), int(a[1])), (int(b[0]), int(b[1]))))
        except (TypeError, ValueError, IndexError):
            raise ValueError(f"bad crossing entry {item!r}") from None
    return AbstractDrawing(g, pairs)


def dump_json(doc: Any) -> str:
    return json.dumps(doc, indent=2) + "\n"

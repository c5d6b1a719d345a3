"""Command line front end.

Every command prints exactly one JSON document on stdout and exits 0 when
the object was found or the property verified, 1 when it was refuted or no
object exists, 2 on malformed input, 3 when a search blew its budget.
Budgets default to 10^7 nodes and 60 seconds, overridable by the
CYCLECERT_BUDGET_NODES / CYCLECERT_BUDGET_SECONDS environment variables and
per-run flags; the long-running verification commands default higher.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Any, Optional, Sequence

from .crossing import (
    Parity,
    convex_drawing,
    cr_total,
    jordan_parity_screen,
    prefix_cr_certificate,
    validate_drawing,
)
from .cyclic_core import (
    BoundSpec,
    Direction,
    as_fraction,
    equality_certificate,
    find_rotation,
    total,
    verify_certificate,
)
from .domination import (
    SearchBudget,
    Variant,
    decide_parameter_via_prefix,
    max_minimal_parameter,
    min_parameter,
    paired_value_c5,
    prefix_pruned_search,
    rd_prefix_pruned_search,
)
from .errors import BudgetExceededError
from .formats import (
    certificate_from_json,
    certificate_to_json,
    decomposition_from_json,
    drawing_from_json,
    drawing_to_json,
    dump_json,
    emit_graph_text,
    equality_from_json,
    equality_to_json,
    graph_to_json,
    parse_graph_spec,
    partition_from_json,
    partition_to_json,
)
from .graphs import cartesian_cycles, complete, complete_bipartite
from .structures import (
    CyclicSymmetry,
    column_shift_symmetry,
    columns_partition,
    find_transitive_partition,
    is_transitive_decomposition,
    is_transitive_partition,
    star_decomposition_bipartite,
    star_decomposition_complete,
    validate_decomposition,
    validate_partition,
)

__all__ = ["main"]


def _env_int(name: str, fallback: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return fallback
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None


def _env_float(name: str, fallback: float) -> float:
    raw = os.environ.get(name)
    if raw is None:
        return fallback
    try:
        return float(raw)
    except ValueError:
        raise ValueError(f"{name} must be a number, got {raw!r}") from None


def _budget(args: argparse.Namespace, nodes: int = 10_000_000, seconds: float = 60.0) -> SearchBudget:
    n = args.budget_nodes if args.budget_nodes is not None else _env_int("CYCLECERT_BUDGET_NODES", nodes)
    s = args.budget_seconds if args.budget_seconds is not None else _env_float("CYCLECERT_BUDGET_SECONDS", seconds)
    return SearchBudget(max_nodes=n, max_seconds=s)


def _add_budget_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget-nodes", type=int, default=None, help="search node cap")
    p.add_argument("--budget-seconds", type=float, default=None, help="wall clock cap")


def _rational(text: str) -> Fraction:
    return as_fraction(text)


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {text!r}") from None


def _rational_list(text: str) -> list[Fraction]:
    return [as_fraction(tok.strip()) for tok in text.split(",") if tok.strip() != ""]


def _edge_list(text: str) -> list[tuple[int, int]]:
    edges = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        parts = tok.split("-")
        if len(parts) != 2:
            raise ValueError(f"expected edges like 0-1,1-2, got {tok!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return edges


def _load_json(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as err:
        raise ValueError(f"cannot read {path!r}: {err}") from None
    except json.JSONDecodeError as err:
        raise ValueError(f"{path!r} is not valid JSON: {err}") from None


def _graph(args: argparse.Namespace):
    return parse_graph_spec(args.graph, base_dir=os.getcwd())


def _partition_arg(text: str) -> Any:
    """A partition: columns:m:n shorthand or a JSON file path."""
    if text.startswith("columns:"):
        _, m, n = text.split(":")
        return columns_partition(int(m), int(n))
    return partition_from_json(_load_json(text))


def _shift_arg(text: str) -> CyclicSymmetry:
    """A shift map: columns:m:n shorthand or an explicit permutation."""
    if text.startswith("columns:"):
        _, m, n = text.split(":")
        return column_shift_symmetry(int(m), int(n))
    return CyclicSymmetry(tuple(_int_list(text)))


# --- certify ---------------------------------------------------------------


def _cmd_certify_sum(args: argparse.Namespace) -> tuple[Any, int]:
    xs = _rational_list(args.list)
    h = _rational(args.h)
    if args.direction == "equality":
        bound = BoundSpec(h=h, epsilon=_rational(args.epsilon))
        eq = equality_certificate(xs, bound)
        if eq is None:
            return {"found": False, "total": str(total(xs)), "h": str(h)}, 1
        return {"found": True, "equality": equality_to_json(eq, bound)}, 0
    direction = Direction(args.direction)
    cert = find_rotation(xs, h, direction)
    if cert is None:
        return {"found": False, "total": str(total(xs)), "h": str(h)}, 1
    return {"found": True, "certificate": certificate_to_json(cert, h)}, 0


def _cmd_certify_verify(args: argparse.Namespace) -> tuple[Any, int]:
    xs = _rational_list(args.list)
    doc = _load_json(args.certificate)
    # accept the wrapper that `certify sum` emits, so output pipes back in
    if isinstance(doc, dict) and "certificate" in doc:
        doc = doc["certificate"]
    elif isinstance(doc, dict) and "equality" in doc:
        doc = doc["equality"]
    if isinstance(doc, dict) and "below" in doc and "above" in doc:
        eq, bound = equality_from_json(doc)
        ok_below = verify_certificate(xs, bound.h + bound.epsilon, eq.below)
        ok_above = verify_certificate(xs, bound.h - bound.epsilon, eq.above)
        matches = total(xs) == bound.h
        verified = ok_below and ok_above and matches
        return {
            "verified": verified,
            "below_ok": ok_below,
            "above_ok": ok_above,
            "total_equals_h": matches,
        }, 0 if verified else 1
    cert, h = certificate_from_json(doc)
    verified = verify_certificate(xs, h, cert)
    return {"verified": verified}, 0 if verified else 1


# --- domination ------------------------------------------------------------


def _cmd_domination_solve(args: argparse.Namespace) -> tuple[Any, int]:
    g = _graph(args)
    variant = Variant(args.variant)
    budget = _budget(args)
    if args.mode == "min":
        report = min_parameter(g, variant, budget)
    else:
        report = max_minimal_parameter(g, variant, budget)
    return {
        "graph": args.graph,
        "variant": variant.value,
        "mode": args.mode,
        "value": report.value,
        "witness": list(report.witness),
        "nodes_explored": report.nodes_explored,
    }, 0


def _cmd_domination_verify_pair(args: argparse.Namespace) -> tuple[Any, int]:
    budget = _budget(args, nodes=100_000_000, seconds=600.0)
    g = cartesian_cycles(5, args.n)
    report = min_parameter(g, Variant.PAIRED, budget)
    expected = paired_value_c5(args.n)
    match = report.value == expected
    return {
        "n": args.n,
        "solved": report.value,
        "expected": expected,
        "match": match,
        "witness": list(report.witness),
        "nodes_explored": report.nodes_explored,
    }, 0 if match else 1


def _cmd_domination_verify_upper_total(args: argparse.Namespace) -> tuple[Any, int]:
    budget = _budget(args, nodes=100_000_000, seconds=600.0)
    g = cartesian_cycles(4, args.n)
    report = max_minimal_parameter(g, Variant.TOTAL, budget)
    expected = 2 * args.n
    match = report.value == expected
    return {
        "n": args.n,
        "solved": report.value,
        "expected": expected,
        "match": match,
        "witness": list(report.witness),
        "nodes_explored": report.nodes_explored,
    }, 0 if match else 1


def _cmd_domination_corollary(args: argparse.Namespace) -> tuple[Any, int]:
    g = _graph(args)
    partition = _partition_arg(args.partition)
    shift = _shift_arg(args.shift)
    budget = _budget(args)
    eps = _rational(args.epsilon)
    if args.rd:
        found = rd_prefix_pruned_search(g, partition, shift, args.h, eps, budget)
        if args.mode == "search":
            doc = {"h": args.h, "found": found is not None}
            if found is not None:
                doc["witness"] = sorted(found)
            return doc, 0 if found is not None else 1
        refuted = rd_prefix_pruned_search(g, partition, shift, args.h - 1, eps, budget)
        decided = found is not None and refuted is None
        return {"h": args.h, "equals": decided}, 0 if decided else 1
    variant = Variant(args.variant)
    if args.mode == "search":
        found = prefix_pruned_search(g, partition, shift, variant, args.h, eps, budget)
        doc = {"h": args.h, "found": found is not None}
        if found is not None:
            doc["witness"] = sorted(found)
        return doc, 0 if found is not None else 1
    decided = decide_parameter_via_prefix(g, partition, shift, variant, args.h, eps, budget)
    return {"h": args.h, "equals": decided}, 0 if decided else 1


# --- partition / decomposition ---------------------------------------------


def _cmd_partition_check(args: argparse.Namespace) -> tuple[Any, int]:
    g = _graph(args)
    partition = _partition_arg(args.partition)
    validate_partition(g, partition)
    doc: dict[str, Any] = {"valid": True, "parts": len(partition.parts)}
    ok = True
    if args.transitive:
        budget = _budget(args, nodes=1_000_000)
        transitive = is_transitive_partition(g, partition, iso_budget=budget.max_nodes)
        doc["transitive"] = transitive
        ok = transitive
    return doc, 0 if ok else 1


def _cmd_partition_find(args: argparse.Namespace) -> tuple[Any, int]:
    g = _graph(args)
    budget = _budget(args, nodes=1_000_000)
    found = find_transitive_partition(
        g, args.t, candidate_budget=budget.max_nodes, iso_budget=budget.max_nodes
    )
    if found is None:
        return {"found": False, "t": args.t}, 1
    return {"found": True, "t": args.t, **partition_to_json(found)}, 0


def _cmd_decomposition_check(args: argparse.Namespace) -> tuple[Any, int]:
    g = _graph(args)
    decomposition = decomposition_from_json(_load_json(args.decomposition))
    validate_decomposition(g, decomposition)
    doc: dict[str, Any] = {"valid": True, "pieces": len(decomposition.pieces)}
    ok = True
    if args.transitive:
        budget = _budget(args, nodes=1_000_000)
        transitive = is_transitive_decomposition(g, decomposition, iso_budget=budget.max_nodes)
        doc["transitive"] = transitive
        ok = transitive
    return doc, 0 if ok else 1


# --- drawing ----------------------------------------------------------------


def _cmd_drawing_check(args: argparse.Namespace) -> tuple[Any, int]:
    d = drawing_from_json(_load_json(args.drawing), base_dir=os.path.dirname(os.path.abspath(args.drawing)))
    problems = validate_drawing(d)
    if problems:
        return {
            "valid": False,
            "violations": [{"kind": v.kind, "message": v.message} for v in problems],
        }, 1
    return {"valid": True, "cr_total": cr_total(d)}, 0


def _cmd_drawing_convex(args: argparse.Namespace) -> tuple[Any, int]:
    g = _graph(args)
    order = _int_list(args.order) if args.order else None
    d = convex_drawing(g, order)
    doc = drawing_to_json(d)
    doc["cr_total"] = cr_total(d)
    return doc, 0


def _cmd_drawing_parity(args: argparse.Namespace) -> tuple[Any, int]:
    d = drawing_from_json(_load_json(args.drawing), base_dir=os.path.dirname(os.path.abspath(args.drawing)))
    parity = jordan_parity_screen(d, _edge_list(args.cycle_a), _edge_list(args.cycle_b))
    return {"parity": parity.value}, 0 if parity is Parity.EVEN else 1


def _cmd_drawing_certify(args: argparse.Namespace) -> tuple[Any, int]:
    d = drawing_from_json(_load_json(args.drawing), base_dir=os.path.dirname(os.path.abspath(args.drawing)))
    decomposition = decomposition_from_json(_load_json(args.pieces))
    h = _rational(args.h)
    direction = Direction(args.direction)
    cert = prefix_cr_certificate(d, decomposition, h, direction, _rational(args.epsilon))
    if cert is None:
        return {"found": False, "cr_total": cr_total(d), "h": str(h)}, 1
    eps = _rational(args.epsilon)
    bound = h + eps if direction is Direction.BELOW else h - eps
    return {"found": True, "certificate": certificate_to_json(cert, bound)}, 0


# --- generate / reproduce ----------------------------------------------------


def _cmd_generate(args: argparse.Namespace) -> tuple[Any, int]:
    g = _graph(args)
    if args.format == "text":
        sys.stdout.write(emit_graph_text(g))
        return None, 0
    return graph_to_json(g), 0


def _reproduce_t1(quick: bool, budget_args: argparse.Namespace) -> tuple[Any, int]:
    results = []
    for n in (3, 4) if quick else (3, 4, 5, 6):
        budget = _budget(budget_args, nodes=100_000_000, seconds=600.0)
        report = min_parameter(cartesian_cycles(5, n), Variant.PAIRED, budget)
        expected = paired_value_c5(n)
        results.append(
            {
                "n": n,
                "value": report.value,
                "expected": expected,
                "match": report.value == expected,
                "witness": list(report.witness),
            }
        )
    ok = all(r["match"] for r in results)
    return {"suite": "t1", "results": results, "ok": ok}, 0 if ok else 1


def _reproduce_n4(quick: bool, budget_args: argparse.Namespace) -> tuple[Any, int]:
    results = []
    for n in (3,) if quick else (3, 4, 5):
        budget = _budget(budget_args, nodes=100_000_000, seconds=600.0)
        report = max_minimal_parameter(cartesian_cycles(4, n), Variant.TOTAL, budget)
        results.append(
            {
                "n": n,
                "value": report.value,
                "expected": 2 * n,
                "match": report.value == 2 * n,
                "witness": list(report.witness),
            }
        )
    ok = all(r["match"] for r in results)
    return {"suite": "n4", "results": results, "ok": ok}, 0 if ok else 1


def _reproduce_structures(quick: bool, budget_args: argparse.Namespace) -> tuple[Any, int]:
    del budget_args
    results = []

    def record(name: str, ok: bool) -> None:
        results.append({"name": name, "ok": ok})

    pairs = [(2, 2), (2, 3)] if quick else [(m, n) for m in (2, 3, 4) for n in (2, 3, 4)]
    for m, n in pairs:
        g = complete_bipartite(m, n)
        dec = star_decomposition_bipartite(m, n)
        record(f"star decomposition of K_{m},{n} is transitive", is_transitive_decomposition(g, dec))
    if not quick:
        g13 = complete(13)
        record(
            "star decomposition of K_13 is transitive",
            is_transitive_decomposition(g13, star_decomposition_complete(13)),
        )
    for m, n in [(3, 3)] if quick else [(3, 3), (3, 4), (4, 3), (4, 4)]:
        g = cartesian_cycles(m, n)
        record(
            f"column partition of the {m}x{n} torus is transitive",
            is_transitive_partition(g, columns_partition(m, n)),
        )
    g23 = complete_bipartite(2, 3)
    for t in (2, 3) if quick else (2, 3, 4, 5):
        record(
            f"K_2,3 has no transitive partition into {t} classes",
            find_transitive_partition(g23, t) is None,
        )
    ok = all(r["ok"] for r in results)
    return {"suite": "structures", "results": results, "ok": ok}, 0 if ok else 1


def _cmd_reproduce(args: argparse.Namespace) -> tuple[Any, int]:
    if args.suite == "t1":
        return _reproduce_t1(args.quick, args)
    if args.suite == "n4":
        return _reproduce_n4(args.quick, args)
    return _reproduce_structures(args.quick, args)


# --- parser -----------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclecert",
        description="rotation certificates for cyclic sums and their graph corollaries",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    certify = sub.add_parser("certify", help="sum certificates").add_subparsers(
        dest="subcommand", required=True
    )
    p = certify.add_parser("sum", help="find a rotation or equality certificate")
    p.add_argument("--list", required=True, help="comma-separated rationals, e.g. 1,3/2,-2")
    p.add_argument("--h", required=True, help="bound, a rational like 5/2")
    p.add_argument("--direction", choices=["below", "above", "equality"], default="below")
    p.add_argument("--epsilon", default="1/2", help="nudge for equality certificates")
    p.set_defaults(handler=_cmd_certify_sum)
    p = certify.add_parser("verify", help="check a stored certificate against a list")
    p.add_argument("--list", required=True)
    p.add_argument("--certificate", required=True, help="certificate JSON file")
    p.set_defaults(handler=_cmd_certify_verify)

    dom = sub.add_parser("domination", help="exact domination solvers").add_subparsers(
        dest="subcommand", required=True
    )
    p = dom.add_parser("solve", help="exact minimum or maximum-minimal size")
    p.add_argument("--graph", required=True, help="graph spec, e.g. torus:5:3 or @file")
    p.add_argument("--variant", choices=[v.value for v in Variant], default="dominating")
    p.add_argument("--mode", choices=["min", "max-minimal"], default="min")
    _add_budget_flags(p)
    p.set_defaults(handler=_cmd_domination_solve)
    p = dom.add_parser("verify-pair", help="paired value on the 5xN torus vs closed form")
    p.add_argument("--n", type=int, required=True)
    _add_budget_flags(p)
    p.set_defaults(handler=_cmd_domination_verify_pair)
    p = dom.add_parser("verify-upper-total", help="largest minimal total set on 4xN torus vs 2n")
    p.add_argument("--n", type=int, required=True)
    _add_budget_flags(p)
    p.set_defaults(handler=_cmd_domination_verify_upper_total)
    p = dom.add_parser("corollary", help="prefix-pruned search or size decision")
    p.add_argument("--graph", required=True)
    p.add_argument("--partition", required=True, help="columns:m:n or a partition JSON file")
    p.add_argument("--shift", required=True, help="columns:m:n or a comma permutation")
    p.add_argument("--variant", choices=[v.value for v in Variant], default="dominating")
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--epsilon", default="1/2")
    p.add_argument("--mode", choices=["search", "decide"], default="decide")
    p.add_argument("--rd", action="store_true", help="use redundancy counts instead of sizes")
    _add_budget_flags(p)
    p.set_defaults(handler=_cmd_domination_corollary)

    part = sub.add_parser("partition", help="vertex partitions").add_subparsers(
        dest="subcommand", required=True
    )
    p = part.add_parser("check", help="validate, optionally test transitivity")
    p.add_argument("--graph", required=True)
    p.add_argument("--partition", required=True)
    p.add_argument("--transitive", action="store_true")
    _add_budget_flags(p)
    p.set_defaults(handler=_cmd_partition_check)
    p = part.add_parser("find", help="search for a transitive partition into t classes")
    p.add_argument("--graph", required=True)
    p.add_argument("--t", type=int, required=True)
    _add_budget_flags(p)
    p.set_defaults(handler=_cmd_partition_find)

    dec = sub.add_parser("decomposition", help="edge decompositions").add_subparsers(
        dest="subcommand", required=True
    )
    p = dec.add_parser("check", help="validate, optionally test transitivity")
    p.add_argument("--graph", required=True)
    p.add_argument("--decomposition", required=True, help="decomposition JSON file")
    p.add_argument("--transitive", action="store_true")
    _add_budget_flags(p)
    p.set_defaults(handler=_cmd_decomposition_check)

    draw = sub.add_parser("drawing", help="combinatorial drawings").add_subparsers(
        dest="subcommand", required=True
    )
    p = draw.add_parser("check", help="good-drawing rules")
    p.add_argument("--drawing", required=True, help="drawing JSON file")
    p.set_defaults(handler=_cmd_drawing_check)
    p = draw.add_parser("convex", help="crossings of a circle drawing")
    p.add_argument("--graph", required=True)
    p.add_argument("--order", default=None, help="comma-separated vertex order")
    p.set_defaults(handler=_cmd_drawing_convex)
    p = draw.add_parser("parity", help="crossing parity of two disjoint cycles")
    p.add_argument("--drawing", required=True)
    p.add_argument("--cycle-a", required=True, help="edges like 0-1,1-2,2-0")
    p.add_argument("--cycle-b", required=True)
    p.set_defaults(handler=_cmd_drawing_parity)
    p = draw.add_parser("certify", help="prefix certificate on piece weights")
    p.add_argument("--drawing", required=True)
    p.add_argument("--pieces", required=True, help="decomposition JSON file")
    p.add_argument("--h", required=True)
    p.add_argument("--direction", choices=["below", "above"], default="below")
    p.add_argument("--epsilon", default="1/2")
    p.set_defaults(handler=_cmd_drawing_certify)

    p = sub.add_parser("generate", help="emit a graph from a spec")
    p.add_argument("--graph", required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(handler=_cmd_generate)

    p = sub.add_parser("reproduce", help="re-run a verification suite")
    p.add_argument("--suite", choices=["t1", "n4", "structures"], required=True)
    p.add_argument("--quick", action="store_true", help="smaller instances only")
    _add_budget_flags(p)
    p.set_defaults(handler=_cmd_reproduce)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        doc, code = args.handler(args)
    except BudgetExceededError as err:
        sys.stdout.write(dump_json({"error": "budget exceeded", "detail": str(err)}))
        return 3
    except ValueError as err:
        sys.stdout.write(dump_json({"error": "invalid input", "detail": str(err)}))
        return 2
    if doc is not None:
        sys.stdout.write(dump_json(doc))
    return code


if __name__ == "__main__":
    sys.exit(main())

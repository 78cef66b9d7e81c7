"""Command line front end.

One subcommand per capability, composable through pipes: generators write
``.hg``/``.gr`` text to stdout and every analysis command reads a file or
``-`` for stdin.  Results go to stdout (JSON under ``--json``), diagnostics
to stderr.  Exit codes: 0 on success, 1 on domain errors (reported by their
error name), 2 on usage errors.  All ids are 1-based on this surface.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from typing import Any

from .core import (
    CHECK_KINDS,
    check,
    dual,
    format_hypergraph,
    parse_hypergraph,
    vc_dimension,
)
from .cover import greedy_cover, greedy_transversal
from .degeneracy import degeneracy, mighty_degeneracy_bf, strong_degeneracy, strong_degeneracy_bf
from .domination import (
    GRAPH_CHECK_KINDS,
    NEIGHBORHOOD_KINDS,
    check_graph,
    format_graph,
    neighborhood_equivalence_audit,
    parse_graph,
    tree_domination,
)
from .errors import HypercoverError, IdOutOfRangeError
from .generators import gap_family, random_hypergraph, random_tree
from .oracles import GRAPH_PROBLEMS, PROBLEMS, exact


def _read_text(args: argparse.Namespace) -> str:
    path = args.input_option if args.input_option is not None else args.input
    if path is None:
        path = "-"
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _load_hypergraph(args: argparse.Namespace):
    return parse_hypergraph(_read_text(args), strict=args.strict)


def _one_based(ids) -> list[int]:
    return [i + 1 for i in ids]


def _zero_based(ids: list[int]) -> list[int]:
    for i in ids:
        if i < 1:
            raise IdOutOfRangeError(f"id {i} is not 1-based")
    return [i - 1 for i in ids]


def _emit(payload: dict[str, Any], as_json: bool) -> None:
    if as_json:
        print(json.dumps(payload, indent=2))
        return
    for key, value in payload.items():
        if isinstance(value, dict):
            body = " ".join(f"{k}={v}" for k, v in value.items())
        elif isinstance(value, (list, tuple)):
            body = " ".join(str(v) for v in value)
        else:
            body = str(value)
        print(f"{key}: {body}")


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "gap":
        sys.stdout.write(format_hypergraph(gap_family(args.n)))
    elif args.family == "tree":
        sys.stdout.write(format_graph(random_tree(args.n, args.seed)))
    else:
        sys.stdout.write(
            format_hypergraph(
                random_hypergraph(args.n, args.m, args.max_size, args.seed, args.cover_feasible)
            )
        )
    return 0


def _cmd_degeneracy(args: argparse.Namespace) -> int:
    h = _load_hypergraph(args)
    if args.kind in ("strong", "plain"):
        order = strong_degeneracy(h) if args.kind == "strong" else degeneracy(h)
        payload = {
            "kind": args.kind,
            "value": order.value,
            "order": _one_based(order.order),
            "step_values": list(order.step_values),
        }
    else:
        value = mighty_degeneracy_bf(h) if args.kind == "mighty-bf" else strong_degeneracy_bf(h)
        payload = {"kind": args.kind, "value": value, "order": None, "step_values": None}
    _emit(payload, args.json)
    return 0


def _cmd_cover(args: argparse.Namespace) -> int:
    cert = greedy_cover(_load_hypergraph(args), mighty=args.mighty)
    payload = {
        "cover": _one_based(cert.cover),
        "cover_size": len(cert.cover),
        "independent": _one_based(cert.independent),
        "independent_size": len(cert.independent),
        "per_step_edges": list(cert.per_step_edges),
        "bound_factor": cert.bound_factor,
        "mighty_factor": cert.mighty_factor,
        "checks": asdict(cert.checks),
    }
    _emit(payload, args.json)
    return 0


def _cmd_transversal(args: argparse.Namespace) -> int:
    cert = greedy_transversal(_load_hypergraph(args))
    payload = {
        "transversal": _one_based(cert.transversal),
        "transversal_size": len(cert.transversal),
        "matching": _one_based(cert.matching),
        "matching_size": len(cert.matching),
        "per_step_edges": list(cert.per_step_edges),
        "bound_factor": cert.bound_factor,
        "checks": asdict(cert.checks),
    }
    _emit(payload, args.json)
    return 0


def _cmd_dominate(args: argparse.Namespace) -> int:
    cert = tree_domination(parse_graph(_read_text(args)), args.kind)
    payload = {
        "kind": cert.kind,
        "dominating": _one_based(cert.dominating),
        "dominating_size": len(cert.dominating),
        "packing": _one_based(cert.packing),
        "packing_size": len(cert.packing),
        "equal": cert.equal,
        "checks": asdict(cert.checks),
    }
    _emit(payload, args.json)
    return 0


def _cmd_exact(args: argparse.Namespace) -> int:
    text = _read_text(args)
    instance = parse_graph(text) if args.problem in GRAPH_PROBLEMS else parse_hypergraph(text, strict=args.strict)
    result = exact(instance, args.problem)
    payload = {
        "problem": result.problem,
        "value": result.value,
        "witness": _one_based(result.witness),
        "explored": result.explored,
    }
    _emit(payload, args.json)
    return 0


def _cmd_vc(args: argparse.Namespace) -> int:
    value, witness = vc_dimension(_load_hypergraph(args))
    payload = {
        "value": value,
        "witness": {
            "set": _one_based(witness.set),
            "shattered": witness.shattered,
            "missing_subset": None if witness.missing_subset is None else _one_based(witness.missing_subset),
        },
    }
    _emit(payload, args.json)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    ids = _zero_based(args.ids)
    text = _read_text(args)
    if args.kind in GRAPH_CHECK_KINDS:
        valid = check_graph(parse_graph(text), args.kind, ids)
    else:
        valid = check(parse_hypergraph(text, strict=args.strict), args.kind, ids)
    _emit({"kind": args.kind, "valid": valid}, args.json)
    return 0


def _cmd_dual(args: argparse.Namespace) -> int:
    d = dual(_load_hypergraph(args))
    if args.json:
        payload = {
            "n": d.n,
            "m": d.m,
            "edges": [_one_based(e) for e in d.edges],
            "labels": list(d.edge_labels or ()),
        }
        _emit(payload, True)
    else:
        sys.stdout.write(format_hypergraph(d))
    return 0


def _cmd_audit(args: argparse.Namespace) -> int:
    report = neighborhood_equivalence_audit(parse_graph(_read_text(args)), args.trials, args.seed)
    _emit(asdict(report), args.json)
    return 0


def _add_input_arguments(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("input", nargs="?", default=None, help="input file, or - for stdin (default)")
    sub.add_argument("--input", dest="input_option", metavar="PATH", help="alternative to the positional input")
    sub.add_argument("--json", action="store_true", help="emit JSON instead of the short table")
    sub.add_argument("--strict", action="store_true", help="reject duplicate hypergraph edges instead of merging")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hypercover", description="hypergraph covers, degeneracy, and tree domination")
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", help="write a generated instance to stdout")
    families = gen.add_subparsers(dest="family", required=True)
    gen_gap = families.add_parser("gap", help="family separating the mighty and strong parameters")
    gen_gap.add_argument("--n", type=int, required=True)
    gen_tree = families.add_parser("tree", help="uniform random tree (.gr)")
    gen_tree.add_argument("--n", type=int, required=True)
    gen_tree.add_argument("--seed", type=int, default=0)
    gen_hg = families.add_parser("hg", help="random hypergraph (.hg)")
    gen_hg.add_argument("--n", type=int, required=True)
    gen_hg.add_argument("--m", type=int, required=True)
    gen_hg.add_argument("--max-size", type=int, required=True)
    gen_hg.add_argument("--seed", type=int, default=0)
    gen_hg.add_argument("--cover-feasible", action="store_true")
    gen.set_defaults(func=_cmd_gen)

    deg = commands.add_parser("degeneracy", help="peeling orders and brute-force degeneracy values")
    deg.add_argument("--kind", choices=("strong", "plain", "mighty-bf", "strong-bf"), default="strong")
    _add_input_arguments(deg)
    deg.set_defaults(func=_cmd_degeneracy)

    cov = commands.add_parser("cover", help="greedy edge cover with certified bound")
    cov.add_argument("--mighty", action="store_true", help="attach the brute-force mighty factor when affordable")
    _add_input_arguments(cov)
    cov.set_defaults(func=_cmd_cover)

    tra = commands.add_parser("transversal", help="greedy transversal and matching via the dual")
    _add_input_arguments(tra)
    tra.set_defaults(func=_cmd_transversal)

    dom = commands.add_parser("dominate", help="tree domination and 2-packing certificate")
    dom.add_argument("--kind", choices=NEIGHBORHOOD_KINDS, default="closed")
    _add_input_arguments(dom)
    dom.set_defaults(func=_cmd_dominate)

    exa = commands.add_parser("exact", help="brute-force optimum for a named problem")
    exa.add_argument("--problem", choices=PROBLEMS, required=True)
    _add_input_arguments(exa)
    exa.set_defaults(func=_cmd_exact)

    vc = commands.add_parser("vc", help="VC dimension with a shattering witness")
    _add_input_arguments(vc)
    vc.set_defaults(func=_cmd_vc)

    ver = commands.add_parser("verify", help="validate a candidate solution")
    ver.add_argument("--kind", choices=CHECK_KINDS + GRAPH_CHECK_KINDS, required=True)
    ver.add_argument("--ids", type=int, nargs="*", default=[], help="1-based ids of the candidate")
    _add_input_arguments(ver)
    ver.set_defaults(func=_cmd_verify)

    dua = commands.add_parser("dual", help="dual hypergraph (.hg, or structural JSON)")
    _add_input_arguments(dua)
    dua.set_defaults(func=_cmd_dual)

    aud = commands.add_parser("audit", help="randomized graph/hypergraph equivalence audit")
    aud.add_argument("--trials", type=int, default=100)
    aud.add_argument("--seed", type=int, default=0)
    _add_input_arguments(aud)
    aud.set_defaults(func=_cmd_audit)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    if getattr(args, "input_option", None) is not None and getattr(args, "input", None) not in (None, "-"):
        print("error: give the input either positionally or via --input, not both", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except HypercoverError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        name = getattr(exc, "filename", None) or "input"
        print(f"error: cannot open {name}: {exc.strerror or exc}", file=sys.stderr)
        return 1


def run() -> None:
    sys.exit(main())

"""Command-line entry point: ``python cli.py <subcommand> ...``.

stdout carries JSON lines (or a table with ``--table``); logs go to stderr.
Exit status: 0 success, 1 failed verification or theorem check, 2 usage or
input error.
"""
import argparse
import json
import logging
import re
import sys
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from config import settings
from errors import InvalidInput, LimpackError, ParseError
from families import FAMILIES, generate_instance
from graph import Graph, VertexPartition, VertexSet
from graph_io import from_graph6, load_graphs, to_graph6
from harness import build_source, run_checks
from reductions import reduce_op_to_2tlp
from reports import dumps, render_table, report_lines, write_lines
from schemas import CliConfig, InvariantResult
from solvers import SOLVERS
from theorems import CHECK_IDS, get_check
from utils import configure_logging
from validators import (PARTITION_PREDICATES, SET_PREDICATES, is_2distance_coloring, is_open_packing,
                        is_packing)

logger = logging.getLogger("limpack")

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

_SHORT_PACKING = re.compile(r"^l(\d+)(t?)$")
_SHORT_INDEXED = re.compile(r"^(gamma|chi|d)_x(\d+)$")


def resolve_invariant(name: str, k: int) -> tuple[str, int]:
    """Accept the solver names plus shorthands such as ``l2``, ``l2t`` and ``chi_x3``."""
    if name in SOLVERS:
        return name, k
    if match := _SHORT_PACKING.match(name):
        return ("l_kt" if match.group(2) else "l_k"), int(match.group(1))
    if match := _SHORT_INDEXED.match(name):
        return f"{match.group(1)}_xk", int(match.group(2))
    raise ParseError("unknown_invariant", f"{name!r}; expected one of {', '.join(SOLVERS)} or l2, l2t, chi_x2 ...")


def _graphs(config: CliConfig) -> list[Graph]:
    if config.g6 is not None:
        return [from_graph6(config.g6)]
    return load_graphs(config.graph_path)


def _single_graph(config: CliConfig) -> Graph:
    graphs = _graphs(config)
    if len(graphs) != 1:
        raise InvalidInput("expected_one_graph", f"got {len(graphs)} graphs")
    return graphs[0]


def certificate_payload(certificate: VertexSet | VertexPartition | None) -> Any:
    if isinstance(certificate, VertexSet):
        return list(certificate.members)
    if isinstance(certificate, VertexPartition):
        return [list(members.members) for members in certificate.classes()]
    return None


def result_record(G: Graph, result: InvariantResult) -> dict[str, Any]:
    return {
        "graph6": to_graph6(G),
        "invariant": result.invariant,
        "k": result.k,
        "value": result.value,
        "status": result.status,
        "certificate": certificate_payload(result.certificate),
        "nodes": result.nodes_explored,
        "lower_bound": result.lower_bound,
        "upper_bound": result.upper_bound,
    }


def parse_certificate(text: str, n: int) -> VertexSet | VertexPartition:
    """A JSON list (set), a list of lists (partition) or an object with ``members`` / ``classes``."""
    if not text.lstrip().startswith(("[", "{")):
        try:
            text = Path(text).read_text(encoding="utf-8")
        except OSError as exc:
            raise ParseError("bad_certificate", f"cannot read certificate file: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("bad_certificate", f"not JSON: {exc}") from None
    if isinstance(data, dict):
        data = data.get("classes", data.get("members"))
    if not isinstance(data, list):
        raise ParseError("bad_certificate", "expected a list of vertices or a list of classes")
    try:
        if data and all(isinstance(c, list) for c in data):
            return VertexPartition.from_classes(n, data)
        if all(isinstance(v, int) for v in data):
            return VertexSet(n=n, members=tuple(data))
    except ValidationError as exc:
        raise ParseError("bad_certificate", str(exc.errors()[0]["msg"])) from None
    raise ParseError("bad_certificate", "mixed vertices and classes")


# ——— subcommands ———

def cmd_compute(args: argparse.Namespace, config: CliConfig) -> int:
    invariant, k = resolve_invariant(config.invariant, config.k)
    records = []
    for G in _graphs(config):
        result = SOLVERS[invariant](G, k, config.budget)
        records.append(result_record(G, result))
    if config.table:
        write_lines([render_table(records, ["graph6", "invariant", "k", "value", "status", "nodes"])], config.out)
    else:
        write_lines([dumps(record) for record in records], config.out)
    return EXIT_OK


def _verify_one(G: Graph, predicate: str, certificate: VertexSet | VertexPartition, k: int) -> dict[str, Any]:
    record: dict[str, Any] = {"graph6": to_graph6(G), "predicate": predicate, "k": k}
    if predicate in SET_PREDICATES or predicate in {"packing", "open_packing"}:
        if not isinstance(certificate, VertexSet):
            raise ParseError("bad_certificate", f"{predicate} expects a vertex set")
        if predicate == "packing":
            record["ok"] = is_packing(G, certificate)
        elif predicate == "open_packing":
            record["ok"] = is_open_packing(G, certificate)
        else:
            verdict = SET_PREDICATES[predicate](G, certificate, k)
            record["ok"] = verdict.ok
            record["violation"] = verdict.violation.model_dump() if verdict.violation else None
        return record
    if not isinstance(certificate, VertexPartition):
        raise ParseError("bad_certificate", f"{predicate} expects a partition")
    if predicate == "2distance":
        record["ok"] = is_2distance_coloring(G, certificate)
    else:
        record["ok"] = PARTITION_PREDICATES[predicate](G, certificate, k)
    return record


def cmd_verify(args: argparse.Namespace, config: CliConfig) -> int:
    G = _single_graph(config)
    certificate = parse_certificate(args.certificate, G.n)
    record = _verify_one(G, args.predicate, certificate, config.k)
    write_lines([dumps(record)], config.out)
    return EXIT_OK if record["ok"] else EXIT_FAILED


def _family_params(args: argparse.Namespace) -> dict[str, Any]:
    params = {name: getattr(args, name) for name in ("k", "t", "r", "s", "p", "c_len", "seed")
              if getattr(args, name, None) is not None}
    if args.positions is not None:
        params["pendant_positions"] = [int(i) for i in args.positions.split(",") if i.strip()]
    return params


def _emit_pair(graph6: str, sidecar: dict[str, Any], out: str | None) -> None:
    if out:
        write_lines([graph6], out)
        write_lines([dumps(sidecar)], out + ".json")
    else:
        write_lines([graph6, dumps(sidecar)])


def cmd_generate(args: argparse.Namespace, config: CliConfig) -> int:
    params = _family_params(args)
    params.setdefault("seed", config.seed)
    params = {key: value for key, value in params.items() if _accepts(args.family, key)}
    instance = generate_instance(args.family, **params)
    sidecar = instance.model_dump(mode="json", exclude={"witness"})
    sidecar["witness"] = certificate_payload(instance.witness)
    _emit_pair(instance.graph6, sidecar, config.out)
    return EXIT_OK


_FAMILY_KEYS = {
    "omega": {"k", "t", "r"},
    "lambda": {"r", "s"},
    "random_lambda": {"r", "s", "seed"},
    "ng_cocktail": {"p"},
    "girth_pendant_cycle": {"c_len", "pendant_positions"},
    "tree_diff_sharp": {"t"},
    "gap_graph": {"p"},
}


def _accepts(family: str, key: str) -> bool:
    return key in _FAMILY_KEYS.get(family, set())


def cmd_reduce(args: argparse.Namespace, config: CliConfig) -> int:
    G = _single_graph(config)
    instance = reduce_op_to_2tlp(G)
    sidecar = {"source": to_graph6(G), "n": G.n, "k": config.k, "threshold": instance.threshold(config.k),
               "target_n": instance.target.n}
    _emit_pair(to_graph6(instance.target), sidecar, config.out)
    return EXIT_OK


def cmd_theorems(args: argparse.Namespace, config: CliConfig) -> int:
    ids = [item.strip() for item in args.ids.split(",") if item.strip()] if args.ids else list(CHECK_IDS)
    for check_id in ids:
        get_check(check_id)
    graphs = build_source(exhaustive=args.exhaustive, trees=args.trees, random=args.random,
                          max_n=args.max_n, graphs_path=config.graph_path, seed=config.seed)
    reports = run_checks(ids, graphs, config.budget, args.backend, args.progress)
    if config.table:
        rows = [{"id": r.id, "status": r.status, "tested": r.graphs_tested, "skipped": r.graphs_skipped,
                 "failures": len(r.failures), "title": r.title} for r in reports]
        write_lines([render_table(rows, ["id", "status", "tested", "skipped", "failures", "title"])], config.out)
    else:
        write_lines([line for report in reports for line in report_lines(report)], config.out)
    return EXIT_FAILED if any(report.failures for report in reports) else EXIT_OK


# ——— parser ———

def _add_input(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group()
    source.add_argument("--graph", dest="graph_path", help="graph file: graph6 lines, .dimacs/.col or .txt/.edges")
    source.add_argument("--g6", help="inline graph6 string")


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--k", type=int, default=2)
    parser.add_argument("--budget", type=int, default=None, help="node budget per solve (env LIMPACK_BUDGET)")
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--out", help="write output here instead of stdout")
    parser.add_argument("--table", action="store_true", help="human-readable table instead of JSON lines")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="limpack", description="Exact limited-packing and tuple-domination toolkit")
    parser.add_argument("--log-level", default=None, help="overrides LIMPACK_LOG_LEVEL")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    compute = sub.add_parser("compute", help="compute an invariant with a certificate")
    _add_input(compute)
    compute.add_argument("--invariant", required=True)
    _add_common(compute)

    verify = sub.add_parser("verify", help="check a certificate against a predicate")
    _add_input(verify)
    verify.add_argument("--certificate", required=True, help="JSON file or inline JSON")
    verify.add_argument("--predicate", required=True,
                        choices=sorted([*SET_PREDICATES, *PARTITION_PREDICATES, "packing", "open_packing", "2distance"]))
    _add_common(verify)

    generate = sub.add_parser("generate", help="build a family member with its intended values")
    generate.add_argument("--family", required=True, choices=FAMILIES)
    for name in ("t", "r", "s", "p", "c-len"):
        generate.add_argument(f"--{name}", type=int, default=None)
    generate.add_argument("--positions", help="comma-separated pendant positions")
    _add_common(generate)

    reduce = sub.add_parser("reduce", help="open packing → 2-total limited packing instance")
    _add_input(reduce)
    _add_common(reduce)

    theorems = sub.add_parser("theorems", help="sweep theorem checks over graph streams")
    theorems.add_argument("--ids", help=f"comma-separated subset of {','.join(CHECK_IDS)}")
    theorems.add_argument("--exhaustive", type=int, default=None, metavar="N", help="all labeled graphs of order N")
    theorems.add_argument("--trees", type=int, default=None, metavar="N", help="all trees of order <= N")
    theorems.add_argument("--random", type=int, default=None, metavar="COUNT", help="seeded random graphs")
    theorems.add_argument("--max-n", type=int, default=8)
    theorems.add_argument("--graphs", dest="graph_path", help="graph file")
    theorems.add_argument("--backend", choices=["local", "celery"], default=None,
                          help="local evaluates graphs sequentially in this process; celery sends one task per "
                               "graph to the worker pool, the only parallel mode (env LIMPACK_SWEEP_BACKEND)")
    theorems.add_argument("--progress", action="store_true")
    _add_common(theorems)
    return parser


_COMMANDS = {
    "compute": cmd_compute,
    "verify": cmd_verify,
    "generate": cmd_generate,
    "reduce": cmd_reduce,
    "theorems": cmd_theorems,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level or settings.log_level)
    try:
        config = CliConfig(
            subcommand=args.subcommand,
            graph_path=getattr(args, "graph_path", None),
            g6=getattr(args, "g6", None),
            invariant=getattr(args, "invariant", None),
            k=args.k,
            budget=settings.budget if args.budget is None else args.budget,
            seed=settings.seed if args.seed is None else args.seed,
            out=args.out,
            table=args.table,
        )
        return _COMMANDS[args.subcommand](args, config)
    except LimpackError as exc:
        sys.stderr.write(dumps(exc.as_dict()) + "\n")
        return EXIT_USAGE
    except ValidationError as exc:
        sys.stderr.write(dumps({"detail": "invalid_arguments", "message": str(exc.errors()[0]["msg"])}) + "\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

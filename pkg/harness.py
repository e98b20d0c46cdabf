"""Graph streams and theorem sweeps.

Sweeps run in-process or fan out one celery task per graph. Either way the
outcomes come back in input order, so a report depends only on its stream.
"""
import logging
import sys
import time
from collections.abc import Iterable, Iterator
from itertools import combinations

import networkx as nx
import numpy as np
from tqdm import tqdm

from config import settings
from errors import InvalidInput
from generators import random_graph, random_tree
from graph import Graph, build_graph
from graph_io import from_networkx, load_graphs, to_graph6
from schemas import CheckOutcome, TheoremFailure, TheoremReport
from theorems import evaluate, get_check

logger = logging.getLogger(__name__)


def enumerate_labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2^(n(n−1)/2) labeled graphs on n vertices; graph i has the edges picked by the bits of i."""
    if n < 1:
        raise InvalidInput("order_too_small", f"n={n}")
    if n > settings.max_exhaustive_order:
        raise InvalidInput("order_too_large", f"n={n} exceeds {settings.max_exhaustive_order}; use graph files")
    pairs = list(combinations(range(n), 2))
    for selector in range(1 << len(pairs)):
        yield build_graph(n, [pair for i, pair in enumerate(pairs) if selector >> i & 1])


def trees_of_order(n: int) -> Iterator[Graph]:
    """One tree per isomorphism class."""
    if n < 1:
        raise InvalidInput("order_too_small", f"n={n}")
    if n == 1:
        yield build_graph(1, [])
        return
    for tree in nx.nonisomorphic_trees(n):
        yield from_networkx(tree)


def all_trees(max_n: int) -> Iterator[Graph]:
    for n in range(1, max_n + 1):
        yield from trees_of_order(n)


def _sub_seeds(count: int, max_n: int, seed: int) -> Iterator[tuple[int, int]]:
    rng = np.random.default_rng(seed)
    for _ in range(count):
        yield int(rng.integers(1, max_n + 1)), int(rng.integers(0, 2**32))


def random_graphs(count: int, max_n: int, seed: int, p: float = 0.5) -> Iterator[Graph]:
    for n, sub_seed in _sub_seeds(count, max_n, seed):
        yield random_graph(n, p, sub_seed)


def random_trees(count: int, max_n: int, seed: int) -> Iterator[Graph]:
    for n, sub_seed in _sub_seeds(count, max_n, seed):
        yield random_tree(n, sub_seed)


def build_source(exhaustive: int | None = None, trees: int | None = None, random: int | None = None,
                 max_n: int = 8, graphs_path: str | None = None, seed: int | None = None) -> list[Graph]:
    """Concatenate the requested streams in a fixed order: exhaustive, trees, random, file."""
    seed = settings.seed if seed is None else seed
    graphs: list[Graph] = []
    if exhaustive:
        graphs.extend(enumerate_labeled_graphs(exhaustive))
    if trees:
        graphs.extend(all_trees(trees))
    if random:
        graphs.extend(random_graphs(random, max_n, seed))
    if graphs_path:
        graphs.extend(load_graphs(graphs_path))
    if not graphs:
        raise InvalidInput("empty_source", "no graphs selected; pass --exhaustive, --trees, --random or --graphs")
    return graphs


def _evaluate_local(check_id: str, graphs: list[Graph], budget: int | None, progress: bool) -> list[CheckOutcome]:
    bar = tqdm(graphs, desc=check_id, unit="graph", disable=not progress, file=sys.stderr)
    return [evaluate(check_id, G, budget) for G in bar]


def _evaluate_celery(check_id: str, graphs: list[Graph], budget: int | None) -> list[CheckOutcome]:
    from celery import group

    from tasks import evaluate_check

    job = group(evaluate_check.s(check_id, to_graph6(G), budget) for G in graphs)
    results = job.apply_async().get(timeout=settings.sweep_timeout)
    return [CheckOutcome.model_validate(result) for result in results]


def run_check(check_id: str, graphs: Iterable[Graph], budget: int | None = None,
              backend: str | None = None, progress: bool = False) -> TheoremReport:
    check = get_check(check_id)
    graphs = list(graphs)
    backend = backend or settings.sweep_backend
    started = time.perf_counter()
    if backend == "celery":
        outcomes = _evaluate_celery(check_id, graphs, budget)
    else:
        outcomes = _evaluate_local(check_id, graphs, budget, progress)

    report = TheoremReport(id=check.id, title=check.title)
    for G, outcome in zip(graphs, outcomes):
        if outcome.status == "skip":
            report.graphs_skipped += 1
            report.skip_reasons[outcome.reason] = report.skip_reasons.get(outcome.reason, 0) + 1
            continue
        report.graphs_tested += 1
        if outcome.status == "fail":
            report.failures.append(TheoremFailure(graph6=to_graph6(G), observed=outcome.observed))
    report.skip_reasons = dict(sorted(report.skip_reasons.items()))
    if settings.report_timings:
        report.runtime = round(time.perf_counter() - started, 3)
    logger.info("%s: tested=%d skipped=%d failures=%d", check_id, report.graphs_tested,
                report.graphs_skipped, len(report.failures))
    return report


def run_checks(check_ids: Iterable[str], graphs: Iterable[Graph], budget: int | None = None,
               backend: str | None = None, progress: bool = False) -> list[TheoremReport]:
    graphs = list(graphs)
    return [run_check(check_id, graphs, budget, backend, progress) for check_id in check_ids]

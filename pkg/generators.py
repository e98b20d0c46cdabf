"""Canonical labeled generators and seeded random streams.

Random stream definition: ``numpy.random.default_rng(seed)`` (PCG64).
``random_tree(n, seed)`` draws the Prüfer sequence as
``rng.integers(0, n, size=n - 2)`` and decodes it with
``networkx.from_prufer_sequence``; ``random_graph(n, p, seed)`` draws one
``rng.random()`` per vertex pair in lexicographic order and keeps the pair
when the draw is below ``p``.
"""
from itertools import combinations

import networkx as nx
import numpy as np

from errors import InvalidInput
from graph import Graph, build_graph, complement


def _require_order(n: int, minimum: int = 1) -> None:
    if n < minimum:
        raise InvalidInput("order_too_small", f"need at least {minimum} vertices, got {n}")


def path(n: int) -> Graph:
    _require_order(n)
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _require_order(n, 3)
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with center 0."""
    _require_order(leaves, 0)
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete(n: int) -> Graph:
    _require_order(n)
    return build_graph(n, combinations(range(n), 2))


def complete_multipartite(*sizes: int) -> Graph:
    if not sizes or any(s < 1 for s in sizes):
        raise InvalidInput("order_too_small", f"part sizes must be positive, got {sizes}")
    part = []
    for index, size in enumerate(sizes):
        part.extend([index] * size)
    n = len(part)
    return build_graph(n, [(u, v) for u, v in combinations(range(n), 2) if part[u] != part[v]])


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite(a, b)


def complete_minus_perfect_matching(n: int) -> Graph:
    """K_n without the matching {2i, 2i+1}; n must be even."""
    _require_order(n)
    if n % 2:
        raise InvalidInput("odd_order", f"perfect matching needs even order, got {n}")
    return complement(build_graph(n, [(2 * i, 2 * i + 1) for i in range(n // 2)]))


def random_tree(n: int, seed: int) -> Graph:
    _require_order(n)
    if n == 1:
        return build_graph(1, [])
    rng = np.random.default_rng(seed)
    sequence = [int(x) for x in rng.integers(0, n, size=n - 2)]
    tree = nx.from_prufer_sequence(sequence)
    return build_graph(n, tree.edges())


def random_graph(n: int, p: float, seed: int) -> Graph:
    _require_order(n)
    rng = np.random.default_rng(seed)
    pairs = list(combinations(range(n), 2))
    draws = rng.random(len(pairs))
    return build_graph(n, [pair for pair, x in zip(pairs, draws) if x < p])


_KINDS = {
    "path": lambda p: path(p["n"]),
    "cycle": lambda p: cycle(p["n"]),
    "star": lambda p: star(p["leaves"] if "leaves" in p else p["n"] - 1),
    "complete": lambda p: complete(p["n"]),
    "complete_multipartite": lambda p: complete_multipartite(*p["sizes"]),
    "complete_minus_perfect_matching": lambda p: complete_minus_perfect_matching(p["n"]),
    "random_tree": lambda p: random_tree(p["n"], p.get("seed", 1)),
    "random_graph": lambda p: random_graph(p["n"], p.get("p", 0.5), p.get("seed", 1)),
}

GENERATOR_KINDS = tuple(_KINDS)


def standard_generators(kind: str, **params) -> Graph:
    try:
        build = _KINDS[kind]
    except KeyError:
        raise InvalidInput("unknown_generator", f"{kind!r} is not one of {', '.join(_KINDS)}") from None
    try:
        return build(params)
    except KeyError as missing:
        raise InvalidInput("missing_parameter", f"{kind} needs {missing}") from None

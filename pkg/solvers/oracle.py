"""Naive reference computations used to cross-check the branch-and-bound solvers.

Everything here enumerates all 2ⁿ subsets or all set partitions, so it is only
meant for graphs of order at most seven or so.
"""
from collections.abc import Iterator
from itertools import combinations

import networkx as nx

from errors import BudgetExceeded, InvalidInput, UndefinedInvariant
from graph import Graph, VertexSet, complement, square
from graph_io import to_networkx
from solvers.domination import gamma_xk
from solvers.packing import l_k, l_kt, rho, rho_o
from utils import bits, mask_of, require_positive_k
from validators import first_over, first_under


def _max_subset(rows: tuple[int, ...], k: int) -> int:
    return max((mask.bit_count() for mask in range(1 << len(rows)) if first_over(rows, mask, k) is None), default=0)


def naive_l_k(G: Graph, k: int) -> int:
    require_positive_k(k)
    return _max_subset(G.closed, k)


def naive_l_kt(G: Graph, k: int) -> int:
    require_positive_k(k)
    return _max_subset(G.adj, k)


def naive_gamma_xk(G: Graph, k: int) -> int | None:
    require_positive_k(k)
    if G.n and G.min_degree < k - 1:
        return None
    return min(mask.bit_count() for mask in range(1 << G.n) if first_under(G.closed, mask, k) is None)


def restricted_growth_strings(n: int) -> Iterator[tuple[int, ...]]:
    """Every set partition of 0..n-1 once, as a class label per vertex."""
    labels = [0] * n

    def extend(i: int, opened: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(labels)
            return
        for c in range(opened + 1):
            labels[i] = c
            yield from extend(i + 1, max(opened, c + 1))

    if n == 0:
        yield ()
        return
    yield from extend(1, 1)


def _partitions(n: int) -> Iterator[list[int]]:
    for labels in restricted_growth_strings(n):
        masks = [0] * (max(labels) + 1 if labels else 0)
        for v, c in enumerate(labels):
            masks[c] |= 1 << v
        yield masks


def naive_chi_xk(G: Graph, k: int) -> int:
    require_positive_k(k)
    return min(len(masks) for masks in _partitions(G.n)
               if all(first_over(G.closed, mask, k) is None for mask in masks))


def naive_d_xk(G: Graph, k: int) -> int | None:
    require_positive_k(k)
    if G.n and G.min_degree < k - 1:
        return None
    return max(len(masks) for masks in _partitions(G.n)
               if all(first_under(G.closed, mask, k) is None for mask in masks))


def naive_chi2(G: Graph) -> int:
    H = square(G)
    return min(len(masks) for masks in _partitions(G.n)
               if all(not (H.adj[v] & mask) for mask in masks for v in bits(mask)))


def _max_clique(G: Graph) -> int:
    if G.n == 0:
        return 0
    clique, _ = nx.max_weight_clique(to_networkx(G), weight=None)
    return len(clique)


def rho_bruteforce(G: Graph) -> int:
    """Packings are the independent sets of the square."""
    return _max_clique(complement(square(G)))


def rho_o_bruteforce(G: Graph) -> int:
    """Open packings are the independent sets of the common-neighbor graph."""
    rows = []
    for v in range(G.n):
        shared = 0
        for u in bits(G.adj[v]):
            shared |= G.adj[u]
        rows.append(shared & ~(1 << v))
    conflict = Graph(n=G.n, adj=tuple(rows))
    return _max_clique(complement(conflict))


def enumerate_optimal_sets(G: Graph, invariant: str, k: int = 1, budget: int | None = None) -> Iterator[VertexSet]:
    """All optimum-cardinality feasible sets in lexicographic order of members."""
    if invariant == "l_k":
        result, rows = l_k(G, k, budget), G.closed
    elif invariant == "l_kt":
        result, rows = l_kt(G, k, budget), G.adj
    elif invariant == "rho":
        result, rows, k = rho(G, budget), G.closed, 1
    elif invariant == "rho_o":
        result, rows, k = rho_o(G, budget), G.adj, 1
    elif invariant == "gamma_xk":
        result, rows = gamma_xk(G, k, budget), G.closed
    else:
        raise InvalidInput("unsupported_invariant", f"{invariant} has no set certificate")
    if result.status == "undefined":
        raise UndefinedInvariant("delta_below_k_minus_1", f"{invariant} with k={k}")
    if not result.complete:
        raise BudgetExceeded("budget_exhausted", f"{invariant} value not certified optimal")
    check = first_under if invariant == "gamma_xk" else first_over
    for members in combinations(range(G.n), result.value):
        if check(rows, mask_of(members), k) is None:
            yield VertexSet(n=G.n, members=members)

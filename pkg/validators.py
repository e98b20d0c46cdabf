"""Feasibility predicates for sets and partitions.

Every predicate scans vertices in index order and reports the first violation,
so diagnostics are deterministic.
"""
from errors import InvalidInput, UndefinedInvariant
from graph import Graph, VertexPartition, VertexSet, square
from schemas import PredicateViolation, Verdict
from utils import require_positive_k


def _bind(G: Graph, S: VertexSet) -> int:
    if S.n != G.n:
        raise InvalidInput("unbound_vertex_set", f"set bound to n={S.n}, graph has n={G.n}")
    return S.mask


def _bind_partition(G: Graph, P: VertexPartition) -> tuple[int, ...]:
    if P.n != G.n:
        raise InvalidInput("partial_partition", f"partition labels {P.n} vertices, graph has {G.n}")
    return P.class_masks


def _require_tuple_domination(G: Graph, k: int) -> None:
    require_positive_k(k)
    if G.n and G.min_degree < k - 1:
        raise UndefinedInvariant("delta_below_k_minus_1", f"δ(G)={G.min_degree} < k-1={k - 1}")


def first_over(rows: tuple[int, ...], mask: int, k: int) -> int | None:
    """First vertex v with |rows[v] ∩ mask| > k."""
    for v, row in enumerate(rows):
        if (row & mask).bit_count() > k:
            return v
    return None


def first_under(rows: tuple[int, ...], mask: int, k: int) -> int | None:
    """First vertex v with |rows[v] ∩ mask| < k."""
    for v, row in enumerate(rows):
        if (row & mask).bit_count() < k:
            return v
    return None


def _upper_verdict(kind: str, rows: tuple[int, ...], mask: int, k: int) -> Verdict:
    v = first_over(rows, mask, k)
    if v is None:
        return Verdict(ok=True)
    return Verdict(ok=False, violation=PredicateViolation(
        kind=kind, witness_vertex=v, observed=(rows[v] & mask).bit_count(), bound=k))


def is_k_limited_packing(G: Graph, B: VertexSet, k: int) -> Verdict:
    require_positive_k(k)
    return _upper_verdict("k_limited_packing", G.closed, _bind(G, B), k)


def is_k_total_limited_packing(G: Graph, B: VertexSet, k: int) -> Verdict:
    require_positive_k(k)
    return _upper_verdict("k_total_limited_packing", G.adj, _bind(G, B), k)


def is_k_tuple_dominating(G: Graph, S: VertexSet, k: int) -> Verdict:
    _require_tuple_domination(G, k)
    mask = _bind(G, S)
    v = first_under(G.closed, mask, k)
    if v is None:
        return Verdict(ok=True)
    return Verdict(ok=False, violation=PredicateViolation(
        kind="k_tuple_dominating", witness_vertex=v, observed=(G.closed[v] & mask).bit_count(), bound=k))


def _pairwise_disjoint(rows: tuple[int, ...], mask: int) -> bool:
    seen = 0
    v = 0
    while mask >> v:
        if mask >> v & 1:
            if seen & rows[v]:
                return False
            seen |= rows[v]
        v += 1
    return True


def is_packing(G: Graph, B: VertexSet) -> bool:
    """Pairwise-disjoint closed neighborhoods; cross-checked against the k=1 packing predicate."""
    mask = _bind(G, B)
    direct = _pairwise_disjoint(G.closed, mask)
    if direct != bool(is_k_limited_packing(G, B, 1)):
        raise AssertionError("packing routes disagree")
    return direct


def is_open_packing(G: Graph, B: VertexSet) -> bool:
    mask = _bind(G, B)
    direct = _pairwise_disjoint(G.adj, mask)
    if direct != bool(is_k_total_limited_packing(G, B, 1)):
        raise AssertionError("open packing routes disagree")
    return direct


def is_klp_partition(G: Graph, P: VertexPartition, k: int) -> bool:
    require_positive_k(k)
    return all(first_over(G.closed, mask, k) is None for mask in _bind_partition(G, P))


def is_ktd_partition(G: Graph, P: VertexPartition, k: int) -> bool:
    _require_tuple_domination(G, k)
    return all(first_under(G.closed, mask, k) is None for mask in _bind_partition(G, P))


def is_2distance_coloring(G: Graph, P: VertexPartition) -> bool:
    """Proper coloring of G²; cross-checked against "every class is a packing"."""
    masks = _bind_partition(G, P)
    G2 = square(G)
    proper = all(not (G2.adj[v] & masks[P.class_of[v]]) for v in range(G.n))
    packings = all(_pairwise_disjoint(G.closed, mask) for mask in masks)
    if proper != packings:
        raise AssertionError("2-distance coloring routes disagree")
    return proper


SET_PREDICATES = {
    "klp": is_k_limited_packing,
    "ktlp": is_k_total_limited_packing,
    "ktd": is_k_tuple_dominating,
}
PARTITION_PREDICATES = {
    "klp_partition": is_klp_partition,
    "ktd_partition": is_ktd_partition,
}

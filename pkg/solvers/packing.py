"""Maximum limited packings: L_k, L_{k,t}, ρ and ρ_o.

Include/exclude branch-and-bound over the vertices in search order. A vertex
leaves the candidate pool as soon as some neighborhood containing it already
holds k chosen vertices. The bound covers the candidates with disjoint
neighborhood groups, each of which can still contribute at most its residual
capacity.
"""
import logging

from graph import Graph, VertexSet
from schemas import InvariantResult
from solvers._search import BudgetExhausted, NodeCounter, ensure, search_order
from utils import bits, require_positive_k
from validators import is_k_limited_packing, is_k_total_limited_packing

logger = logging.getLogger(__name__)


def _include(rows: tuple[int, ...], k: int, u: int, chosen: int, allowed: int) -> tuple[int, int]:
    chosen |= 1 << u
    allowed &= ~(1 << u)
    for v in bits(rows[u]):
        if (rows[v] & chosen).bit_count() >= k:
            allowed &= ~rows[v]
    return chosen, allowed


def _cover_bound(rows: tuple[int, ...], k: int, chosen: int, allowed: int) -> int:
    """Upper bound on how many more candidates can join ``chosen``."""
    caps = [k - (row & chosen).bit_count() for row in rows]
    remaining = allowed
    total = 0
    while remaining:
        best_gain, best_v, best_group = 0, -1, 0
        for v, row in enumerate(rows):
            group = row & remaining
            if not group:
                continue
            gain = group.bit_count() - caps[v]
            if gain > best_gain:
                best_gain, best_v, best_group = gain, v, group
        if best_v < 0:
            break
        total += caps[best_v]
        remaining &= ~best_group
    return total + remaining.bit_count()


def max_limited_packing(rows: tuple[int, ...], k: int, order: list[int], counter: NodeCounter) -> tuple[int, int, bool]:
    """Return (best mask, upper bound, completed) for the row family ``rows``."""
    full = (1 << len(rows)) - 1

    chosen, allowed = 0, full
    for u in order:
        if allowed >> u & 1:
            chosen, allowed = _include(rows, k, u, chosen, allowed)
    best = [chosen, chosen.bit_count()]
    root_bound = _cover_bound(rows, k, 0, full)
    if best[1] >= root_bound:
        return best[0], root_bound, True

    # Greedy answer is kept only if the search never finds anything as large.
    best[1] -= 1

    def search(chosen: int, allowed: int) -> None:
        counter.tick()
        size = chosen.bit_count()
        if not allowed:
            if size > best[1]:
                best[0], best[1] = chosen, size
            return
        if size + _cover_bound(rows, k, chosen, allowed) <= best[1]:
            return
        u = next(v for v in order if allowed >> v & 1)
        search(*_include(rows, k, u, chosen, allowed))
        search(chosen, allowed & ~(1 << u))

    try:
        search(0, full)
    except BudgetExhausted:
        if best[0].bit_count() > best[1]:
            best[1] = best[0].bit_count()
        logger.warning("packing search stopped after %d nodes", counter.nodes)
        return best[0], root_bound, False
    return best[0], best[1], True


def _solve(G: Graph, k: int, invariant: str, closed: bool, budget: int | None) -> InvariantResult:
    require_positive_k(k)
    counter = NodeCounter(budget)
    rows = G.closed if closed else G.adj
    mask, bound, done = max_limited_packing(rows, k, search_order(G), counter)
    certificate = VertexSet.from_mask(G.n, mask)
    check = is_k_limited_packing if closed else is_k_total_limited_packing
    ensure(check(G, certificate, k).ok, f"{invariant} certificate")
    value = len(certificate)
    logger.debug("%s(k=%d) n=%d value=%d nodes=%d", invariant, k, G.n, value, counter.nodes)
    if done:
        return InvariantResult(invariant=invariant, k=k, value=value, certificate=certificate,
                               nodes_explored=counter.nodes, lower_bound=value, upper_bound=value)
    return InvariantResult(invariant=invariant, k=k, value=value, status="incomplete", certificate=certificate,
                           nodes_explored=counter.nodes, lower_bound=value, upper_bound=bound)


def l_k(G: Graph, k: int, budget: int | None = None) -> InvariantResult:
    return _solve(G, k, "l_k", True, budget)


def l_kt(G: Graph, k: int, budget: int | None = None) -> InvariantResult:
    return _solve(G, k, "l_kt", False, budget)


def rho(G: Graph, budget: int | None = None) -> InvariantResult:
    return _solve(G, 1, "rho", True, budget)


def rho_o(G: Graph, budget: int | None = None) -> InvariantResult:
    return _solve(G, 1, "rho_o", False, budget)

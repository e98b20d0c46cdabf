"""χ×k: fewest classes in a partition of V into k-limited packings."""
import logging

from graph import Graph, VertexPartition
from schemas import InvariantResult
from solvers._search import BudgetExhausted, NodeCounter, ensure, search_order
from utils import bits, ceil_div, require_positive_k
from validators import is_klp_partition

logger = logging.getLogger(__name__)


def chi_xk_lower_bound(G: Graph, k: int) -> int:
    """max(⌈(Δ+1)/k⌉, ⌈(2m+n)/(kn)⌉); both count closed neighborhoods against class capacity."""
    if G.n == 0:
        return 0
    return max(ceil_div(G.max_degree + 1, k), ceil_div(2 * G.m + G.n, k * G.n))


def _fits(rows: tuple[int, ...], k: int, u: int, mask: int) -> bool:
    return all((rows[v] & mask).bit_count() < k for v in bits(rows[u]))


def first_fit(G: Graph, k: int) -> list[int]:
    rows = G.closed
    classes: list[int] = []
    for u in search_order(G):
        for c, mask in enumerate(classes):
            if _fits(rows, k, u, mask):
                classes[c] |= 1 << u
                break
        else:
            classes.append(1 << u)
    return classes


def klp_partition_masks(G: Graph, k: int, c: int, counter: NodeCounter) -> list[int] | None:
    """Find a partition of V into ``c`` k-limited packings, or ``None``."""
    rows = G.closed
    order = search_order(G)
    classes = [0] * c
    state = {"unassigned": G.vertex_mask}

    def has_room(v: int) -> bool:
        row = rows[v]
        capacity = sum(k - (row & mask).bit_count() for mask in classes)
        return capacity >= (row & state["unassigned"]).bit_count()

    def assign(i: int, used: int) -> bool:
        counter.tick()
        if i == len(order):
            return True
        u = order[i]
        bit = 1 << u
        state["unassigned"] &= ~bit
        for j in range(min(used + 1, c)):
            if not _fits(rows, k, u, classes[j]):
                continue
            classes[j] |= bit
            if all(has_room(v) for v in bits(rows[u])) and assign(i + 1, max(used, j + 1)):
                return True
            classes[j] &= ~bit
        state["unassigned"] |= bit
        return False

    return list(classes) if assign(0, 0) else None


def chi_xk(G: Graph, k: int, budget: int | None = None) -> InvariantResult:
    require_positive_k(k)
    counter = NodeCounter(budget)
    lower = chi_xk_lower_bound(G, k)
    masks = first_fit(G, k)
    value, status = len(masks), "optimal"
    for c in range(lower, value):
        try:
            found = klp_partition_masks(G, k, c, counter)
        except BudgetExhausted:
            logger.warning("chi_xk search stopped at c=%d after %d nodes", c, counter.nodes)
            lower, status = c, "incomplete"
            break
        if found is not None:
            masks, value = found, c
            break
    if status == "optimal":
        lower = value
    certificate = VertexPartition.from_masks(G.n, masks)
    ensure(is_klp_partition(G, certificate, k) and certificate.c == value, "chi_xk certificate")
    logger.debug("chi_xk(k=%d) n=%d value=%d nodes=%d", k, G.n, value, counter.nodes)
    return InvariantResult(invariant="chi_xk", k=k, value=value, status=status, certificate=certificate,
                           nodes_explored=counter.nodes, lower_bound=lower, upper_bound=value)

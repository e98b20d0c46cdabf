"""χ₂: chromatic number of the square, by DSATUR-style backtracking."""
import logging

from graph import Graph, VertexPartition, square
from schemas import InvariantResult
from solvers._search import BudgetExhausted, NodeCounter, ensure, search_order
from utils import bits
from validators import is_2distance_coloring

logger = logging.getLogger(__name__)


def greedy_clique(H: Graph) -> int:
    """Largest clique found by growing greedily from every vertex."""
    best = 0
    for start in range(H.n):
        clique, candidates = 1, H.adj[start]
        while candidates:
            pick = max(bits(candidates), key=lambda v: ((H.adj[v] & candidates).bit_count(), -v))
            clique += 1
            candidates &= H.adj[pick]
        best = max(best, clique)
    return best


def first_fit_coloring(H: Graph) -> list[int]:
    colors = [-1] * H.n
    for v in search_order(H):
        taken = 0
        for u in bits(H.adj[v]):
            if colors[u] >= 0:
                taken |= 1 << colors[u]
        colors[v] = (~taken & (taken + 1)).bit_length() - 1
    return colors


def exact_coloring(H: Graph, lower: int, counter: NodeCounter) -> tuple[list[int], bool]:
    """Optimal coloring of ``H`` or, when the budget runs out, the best one found."""
    best_colors = first_fit_coloring(H)
    best = [max(best_colors, default=-1) + 1, best_colors]
    if best[0] <= lower:
        return best[1], True

    colors = [-1] * H.n
    saturation = [0] * H.n

    def choose() -> int:
        return max((v for v in range(H.n) if colors[v] < 0),
                   key=lambda v: (saturation[v].bit_count(), H.degrees[v], -v))

    def backtrack(used: int, colored: int) -> None:
        counter.tick()
        if colored == H.n:
            if used < best[0]:
                best[0], best[1] = used, list(colors)
            return
        v = choose()
        for c in range(min(used + 1, best[0] - 1)):
            if saturation[v] >> c & 1:
                continue
            colors[v] = c
            changed = [u for u in bits(H.adj[v]) if colors[u] < 0 and not saturation[u] >> c & 1]
            for u in changed:
                saturation[u] |= 1 << c
            backtrack(max(used, c + 1), colored + 1)
            for u in changed:
                saturation[u] &= ~(1 << c)
            colors[v] = -1
            if best[0] <= lower:
                return

    try:
        backtrack(0, 0)
    except BudgetExhausted:
        logger.warning("coloring search stopped after %d nodes", counter.nodes)
        return best[1], False
    return best[1], True


def chi2_distance(G: Graph, budget: int | None = None) -> InvariantResult:
    counter = NodeCounter(budget)
    H = square(G)
    lower = greedy_clique(H)
    colors, done = exact_coloring(H, lower, counter)
    certificate = VertexPartition.from_masks(G.n, _masks(colors))
    ensure(is_2distance_coloring(G, certificate), "chi2 certificate")
    value = certificate.c
    return InvariantResult(invariant="chi2", value=value, status="optimal" if done else "incomplete",
                           certificate=certificate, nodes_explored=counter.nodes,
                           lower_bound=value if done else lower, upper_bound=value)


def _masks(colors: list[int]) -> list[int]:
    masks = [0] * (max(colors, default=-1) + 1)
    for v, c in enumerate(colors):
        masks[c] |= 1 << v
    return masks

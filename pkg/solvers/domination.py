"""Tuple domination: γ×k (minimum kTD set) and d×k (k-tuple domatic number)."""
import logging

from graph import Graph, VertexPartition, VertexSet
from schemas import InvariantResult
from solvers._search import BudgetExhausted, NodeCounter, ensure, search_order
from utils import bits, ceil_div, require_positive_k
from validators import first_under, is_k_tuple_dominating, is_ktd_partition

logger = logging.getLogger(__name__)


def _undefined(invariant: str, G: Graph, k: int) -> InvariantResult | None:
    require_positive_k(k)
    if G.n and G.min_degree < k - 1:
        logger.debug("%s undefined: δ=%d < k-1=%d", invariant, G.min_degree, k - 1)
        return InvariantResult(invariant=invariant, k=k, value=None, status="undefined")
    return None


def gamma_xk(G: Graph, k: int, budget: int | None = None) -> InvariantResult:
    if (result := _undefined("gamma_xk", G, k)) is not None:
        return result
    rows = G.closed
    order = search_order(G)
    spread = G.max_degree + 1
    counter = NodeCounter(budget)

    def deficit(chosen: int) -> int:
        return sum(max(0, k - (row & chosen).bit_count()) for row in rows)

    # Shrink V to a minimal kTD set, dropping low-degree vertices first.
    start = G.vertex_mask
    for u in reversed(order):
        trial = start & ~(1 << u)
        if first_under(rows, trial, k) is None:
            start = trial
    best = [start, start.bit_count()]
    root_bound = ceil_div(deficit(0), spread)

    def search(chosen: int, undecided: int) -> None:
        counter.tick()
        while True:
            forced = 0
            for row in rows:
                have = (row & chosen).bit_count()
                if have >= k:
                    continue
                open_slots = row & undecided
                if have + open_slots.bit_count() < k:
                    return
                if have + open_slots.bit_count() == k:
                    forced |= open_slots
            if not forced:
                break
            chosen |= forced
            undecided &= ~forced
        size = chosen.bit_count()
        if size + ceil_div(deficit(chosen), spread) >= best[1]:
            return
        target, slack = -1, 0
        for v, row in enumerate(rows):
            need = k - (row & chosen).bit_count()
            if need <= 0:
                continue
            room = (row & undecided).bit_count() - need
            if target < 0 or room < slack:
                target, slack = v, room
        if target < 0:
            best[0], best[1] = chosen, size
            return
        u = next(w for w in order if (rows[target] & undecided) >> w & 1)
        search(chosen | 1 << u, undecided & ~(1 << u))
        search(chosen, undecided & ~(1 << u))

    done = True
    if best[1] > root_bound:
        try:
            search(0, G.vertex_mask)
        except BudgetExhausted:
            done = False
            logger.warning("gamma_xk search stopped after %d nodes", counter.nodes)
    certificate = VertexSet.from_mask(G.n, best[0])
    ensure(is_k_tuple_dominating(G, certificate, k).ok, "gamma_xk certificate")
    value = len(certificate)
    if done:
        return InvariantResult(invariant="gamma_xk", k=k, value=value, certificate=certificate,
                               nodes_explored=counter.nodes, lower_bound=value, upper_bound=value)
    return InvariantResult(invariant="gamma_xk", k=k, value=value, status="incomplete", certificate=certificate,
                           nodes_explored=counter.nodes, lower_bound=root_bound, upper_bound=value)


def ktd_partition_masks(G: Graph, k: int, t: int, counter: NodeCounter) -> list[int] | None:
    """Find a partition of V into ``t`` kTD sets, or ``None`` when none exists."""
    rows = G.closed
    order = search_order(G)
    classes = [0] * t
    state = {"unassigned": G.vertex_mask}

    def demand_met(v: int) -> bool:
        row = rows[v]
        need = sum(max(0, k - (row & mask).bit_count()) for mask in classes)
        return need <= (row & state["unassigned"]).bit_count()

    def assign(i: int, used: int) -> bool:
        counter.tick()
        if i == len(order):
            return True
        u = order[i]
        bit = 1 << u
        state["unassigned"] &= ~bit
        for c in range(min(used + 1, t)):
            classes[c] |= bit
            if all(demand_met(v) for v in bits(rows[u])) and assign(i + 1, max(used, c + 1)):
                return True
            classes[c] &= ~bit
        state["unassigned"] |= bit
        return False

    return list(classes) if assign(0, 0) else None


def d_xk(G: Graph, k: int, budget: int | None = None) -> InvariantResult:
    if (result := _undefined("d_xk", G, k)) is not None:
        return result
    if G.n == 0:
        return InvariantResult(invariant="d_xk", k=k, value=0, certificate=VertexPartition(class_of=()),
                               lower_bound=0, upper_bound=0)
    counter = NodeCounter(budget)
    ceiling = (G.min_degree + 1) // k
    masks, value, status, upper = [G.vertex_mask], 1, "optimal", 1
    for t in range(ceiling, 1, -1):
        try:
            found = ktd_partition_masks(G, k, t, counter)
        except BudgetExhausted:
            logger.warning("d_xk search stopped at t=%d after %d nodes", t, counter.nodes)
            status, upper = "incomplete", t
            break
        if found is not None:
            masks, value, upper = found, t, t
            break
    certificate = VertexPartition.from_masks(G.n, masks)
    ensure(is_ktd_partition(G, certificate, k) and certificate.c == value, "d_xk certificate")
    return InvariantResult(invariant="d_xk", k=k, value=value, status=status, certificate=certificate,
                           nodes_explored=counter.nodes, lower_bound=value, upper_bound=upper)

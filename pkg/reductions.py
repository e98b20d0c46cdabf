"""Open packing → 2-total-limited packing reduction through the corona G⊙K₁.

L_{2,t}(G⊙K₁) = ρ_o(G) + n, so "ρ_o(G) ≥ k" becomes "L_{2,t}(G⊙K₁) ≥ n + k".
"""
import logging

import networkx as nx

from errors import InvalidInput
from graph import Graph, VertexSet, corona_k1
from graph_io import to_networkx
from schemas import ReductionCheck, ReductionInstance
from solvers import l_kt, rho_o
from solvers._search import ensure
from utils import bits
from validators import is_k_total_limited_packing, is_open_packing

logger = logging.getLogger(__name__)


def reduce_op_to_2tlp(G: Graph) -> ReductionInstance:
    return ReductionInstance(source=G, target=corona_k1(G), threshold_offset=G.n)


def check_reduction_identity(G: Graph, budget: int | None = None) -> ReductionCheck:
    instance = reduce_op_to_2tlp(G)
    source = rho_o(G, budget)
    target = l_kt(instance.target, 2, budget)
    complete = source.complete and target.complete
    holds = target.value == source.value + G.n if complete else None
    if holds is False:
        logger.error("reduction identity broken: rho_o=%s L2t=%s n=%d", source.value, target.value, G.n)
    return ReductionCheck(holds=holds, n=G.n, rho_o=source.value, l2t_target=target.value, complete=complete)


def lift_certificate(G: Graph, B: VertexSet) -> VertexSet:
    """B ∪ {all pendants}: a 2TLP set of G⊙K₁ of size |B| + n."""
    if not is_open_packing(G, B):
        raise InvalidInput("not_an_open_packing", f"{list(B.members)} is not an open packing")
    target = corona_k1(G)
    lifted = VertexSet(n=target.n, members=B.members + tuple(range(G.n, 2 * G.n)))
    ensure(is_k_total_limited_packing(target, lifted, 2).ok, "lifted certificate")
    return lifted


def normalize_with_pendants(G: Graph, lifted: VertexSet) -> VertexSet:
    """Swap pendants into a 2TLP set of G⊙K₁ without shrinking it until every pendant is in."""
    target = corona_k1(G)
    if not is_k_total_limited_packing(target, lifted, 2):
        raise InvalidInput("not_a_2tlp_set", "set is not a 2-total limited packing of the corona")
    mask = lifted.mask
    for i in range(G.n):
        pendant = 1 << (G.n + i)
        if mask & pendant:
            continue
        crowd = target.adj[i] & mask
        if crowd.bit_count() >= 2:
            mask &= ~(1 << next(bits(crowd)))
        mask |= pendant
    normalized = VertexSet.from_mask(target.n, mask)
    ensure(is_k_total_limited_packing(target, normalized, 2).ok and len(normalized) >= len(lifted),
           "pendant normalization")
    return normalized


def lower_certificate(G: Graph, lifted: VertexSet) -> VertexSet:
    """Open packing of G of size >= |lifted| − n, read off the pendant-normalized set."""
    normalized = normalize_with_pendants(G, lifted)
    B = VertexSet.from_mask(G.n, normalized.mask & G.vertex_mask)
    ensure(is_open_packing(G, B), "lowered certificate")
    return B


def structure_flags(G: Graph) -> dict[str, bool]:
    """Bipartite and chordal flags of G and of G⊙K₁."""
    if G.n == 0:
        return {"bipartite": True, "bipartite_corona": True, "chordal": True, "chordal_corona": True}
    source, target = to_networkx(G), to_networkx(corona_k1(G))
    return {
        "bipartite": nx.is_bipartite(source),
        "bipartite_corona": nx.is_bipartite(target),
        "chordal": nx.is_chordal(source),
        "chordal_corona": nx.is_chordal(target),
    }

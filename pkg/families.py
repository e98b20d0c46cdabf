"""Extremal families and sharpness constructions.

Ω  block decompositions whose blocks form a k-tuple domatic partition of size
   ⌊(δ+1)/k⌋; split into a witness validator and a canonical builder.
Λ  r equal even parts, each inducing a perfect matching, every two parts
   inducing a 2-regular bipartite graph.
Γ  graphs with ρ = n − Δ, recognised by three neighborhood conditions.
"""
import logging
from itertools import combinations
from typing import Any

import numpy as np

from errors import InvalidInput
from generators import complete, complete_minus_perfect_matching, cycle
from graph import Graph, VertexPartition, VertexSet, build_graph, induced_subgraph
from graph_io import to_graph6
from schemas import GeneratedInstance, LambdaSpec, OmegaSpec, OmegaValidation
from solvers import l_k
from utils import bits, require_positive_k

logger = logging.getLogger(__name__)


# ——— Ω ———

def assemble_omega(spec: OmegaSpec) -> tuple[Graph, VertexPartition]:
    """Concatenate the blocks, add the cross edges; the blocks become the partition classes."""
    offsets = spec.offsets
    n = sum(block.n for block in spec.blocks)
    owner = [i for i, block in enumerate(spec.blocks) for _ in range(block.n)]
    edges = [(offsets[i] + u, offsets[i] + v) for i, block in enumerate(spec.blocks) for u, v in block.edges()]
    for u, v in spec.cross_edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidInput("endpoint_out_of_range", f"cross edge ({u}, {v}) with n={n}")
        if owner[u] == owner[v]:
            raise InvalidInput("cross_edge_inside_block", f"({u}, {v}) lies in block {owner[u]}")
        edges.append((u, v))
    return build_graph(n, edges), VertexPartition(class_of=tuple(owner))


def validate_omega(spec: OmegaSpec) -> OmegaValidation:
    G, blocks = assemble_omega(spec)
    k = spec.k
    q = spec.target_q
    t, r = divmod(q + 1, k)
    diagnostics: list[str] = []
    block_min = [block.min_degree for block in spec.blocks]

    if spec.t != t:
        diagnostics.append(f"q+1={q + 1} gives t={t} blocks for k={k}, spec has {spec.t}")
    for i, d in enumerate(block_min):
        if d < k - 1:
            diagnostics.append(f"block {i} has minimum degree {d} < k-1={k - 1}")
    if not any(d <= 2 * k - 2 for d in block_min):
        diagnostics.append(f"no block has minimum degree <= 2k-2={2 * k - 2}")
    if G.min_degree != q:
        diagnostics.append(f"minimum degree {G.min_degree} differs from q={q}")
    masks = blocks.class_masks
    for v in range(G.n):
        own = blocks.class_of[v]
        for j, mask in enumerate(masks):
            if j != own and (G.adj[v] & mask).bit_count() < k:
                diagnostics.append(f"vertex {v} of block {own} has fewer than {k} neighbors in block {j}")
                break

    return OmegaValidation(valid=not diagnostics, diagnostics=diagnostics, t=t, r=r, q_observed=G.min_degree)


def canonical_omega_spec(k: int, t: int, r: int) -> OmegaSpec:
    """Blocks K_{k+r}; block pairs joined by the k-regular circulant a → a, …, a+k−1 (mod k+r)."""
    require_positive_k(k)
    if t < 1 or not 0 <= r <= k - 1:
        raise InvalidInput("bad_omega_parameters", f"need t >= 1 and 0 <= r <= k-1, got t={t}, r={r}")
    size = k + r
    cross = []
    for i, j in combinations(range(t), 2):
        for a in range(size):
            cross.extend((i * size + a, j * size + (a + s) % size) for s in range(k))
    return OmegaSpec(k=k, blocks=[complete(size)] * t, cross_edges=cross, target_q=t * k + r - 1)


def build_canonical_omega(k: int, t: int, r: int) -> tuple[Graph, VertexPartition]:
    return assemble_omega(canonical_omega_spec(k, t, r))


def omega_spec_from_partition(G: Graph, P: VertexPartition, k: int) -> OmegaSpec:
    """Read a k-tuple domatic partition as a block decomposition, classes concatenated in order."""
    order = [v for members in P.classes() for v in members.members]
    position = {v: i for i, v in enumerate(order)}
    cross = [(position[u], position[v]) for u, v in G.edges() if P.class_of[u] != P.class_of[v]]
    blocks = [induced_subgraph(G, members.members) for members in P.classes()]
    return OmegaSpec(k=k, blocks=blocks, cross_edges=cross, target_q=G.min_degree)


# ——— Λ ———

def _lambda_edges(spec: LambdaSpec) -> list[tuple[int, int]]:
    r, s = spec.r, spec.s
    if s % 2:
        raise InvalidInput("odd_part_size", f"parts need even size, got s={s}")
    edges = [(i * s + 2 * a, i * s + 2 * a + 1) for i in range(r) for a in range(s // 2)]
    for i, j in combinations(range(r), 2):
        for a in range(s):
            edges.append((i * s + a, j * s + a))
            edges.append((i * s + a, j * s + (a + 1) % s))
    return edges


def build_lambda(spec: LambdaSpec) -> Graph:
    return build_graph(spec.r * spec.s, _lambda_edges(spec))


def lambda_partition(spec: LambdaSpec) -> VertexPartition:
    return VertexPartition(class_of=tuple(v // spec.s for v in range(spec.r * spec.s)))


def _derangement(rng: np.random.Generator, s: int) -> np.ndarray:
    while True:
        candidate = rng.permutation(s)
        if not np.any(candidate == np.arange(s)):
            return candidate


def random_lambda(r: int, s: int, seed: int) -> Graph:
    """Λ member whose part pairs are unions of two disjoint random perfect matchings."""
    spec = LambdaSpec(r=r, s=s)
    if s % 2:
        raise InvalidInput("odd_part_size", f"parts need even size, got s={s}")
    rng = np.random.default_rng(seed)
    edges = []
    for i in range(r):
        shuffled = rng.permutation(s)
        edges.extend((i * s + int(shuffled[2 * a]), i * s + int(shuffled[2 * a + 1])) for a in range(s // 2))
    for i, j in combinations(range(r), 2):
        first = rng.permutation(s)
        second = first[_derangement(rng, s)]
        for a in range(s):
            edges.append((i * s + a, j * s + int(first[a])))
            edges.append((i * s + a, j * s + int(second[a])))
    return build_graph(spec.r * spec.s, edges)


def has_lambda_structure(G: Graph, P: VertexPartition) -> bool:
    """Each class induces a perfect matching and every vertex has exactly two neighbors in each other class."""
    masks = P.class_masks
    if P.n != G.n or len({mask.bit_count() for mask in masks}) > 1:
        return False
    for v in range(G.n):
        own = P.class_of[v]
        for j, mask in enumerate(masks):
            if (G.adj[v] & mask).bit_count() != (1 if j == own else 2):
                return False
    return True


# ——— Γ and the triple-common-neighbor family ———

def is_triple_common_neighbor_family(G: Graph) -> bool:
    if G.n < 3:
        raise InvalidInput("order_below_three", f"needs n >= 3, got {G.n}")
    return all(G.adj[a] & G.adj[b] & G.adj[c] for a, b, c in combinations(range(G.n), 3))


def is_in_gamma(G: Graph) -> bool:
    full = G.vertex_mask
    for u in range(G.n):
        if G.degrees[u] != G.max_degree:
            continue
        outside = full & ~G.closed[u]
        if any(G.adj[w] & outside for w in bits(outside)):
            continue
        for v in bits(G.adj[u]):
            if G.closed[v] & ~G.closed[u]:
                continue
            rest = G.closed[u] & ~G.closed[v]
            if all((G.adj[x] & outside).bit_count() <= 1 for x in bits(rest)):
                return True
    return False


# ——— sharpness constructions ———

def ng_cocktail(p: int) -> Graph:
    if p < 3:
        raise InvalidInput("p_below_three", f"needs p >= 3, got {p}")
    return complete_minus_perfect_matching(2 * p)


def girth_pendant_cycle(c_len: int, pendant_positions: list[int]) -> Graph:
    """C_{c_len} with a pendant at each listed position; positions at cyclic distance >= 3."""
    positions = sorted(set(pendant_positions))
    if c_len < 3 or any(not 0 <= i < c_len for i in positions):
        raise InvalidInput("bad_spacing", f"positions {positions} do not fit a cycle of length {c_len}")
    for i, j in combinations(positions, 2):
        if min(j - i, c_len - (j - i)) < 3:
            raise InvalidInput("bad_spacing", f"pendants at {i} and {j} are closer than 3 along the cycle")
    base = cycle(c_len)
    edges = base.edges() + [(i, c_len + idx) for idx, i in enumerate(positions)]
    return build_graph(c_len + len(positions), edges)


def tree_diff_sharp(t: int) -> Graph:
    """u=0 joined to the first vertices of paths x (3t−1), y (3t), z (3t−1)."""
    if t < 1:
        raise InvalidInput("t_below_one", f"needs t >= 1, got {t}")
    x, y, z = (lambda i: i), (lambda i: 3 * t - 1 + i), (lambda i: 6 * t - 1 + i)
    edges = [(0, x(1)), (0, y(1)), (0, z(1))]
    edges += [(x(i), x(i + 1)) for i in range(1, 3 * t - 1)]
    edges += [(y(i), y(i + 1)) for i in range(1, 3 * t)]
    edges += [(z(i), z(i + 1)) for i in range(1, 3 * t - 1)]
    return build_graph(9 * t - 1, edges)


def tree_diff_certificates(t: int) -> tuple[VertexSet, VertexSet]:
    """(2-total-limited packing of size 9t−2, 2-limited packing of size 6t−1) for ``tree_diff_sharp(t)``.

    The second set is feasible but not maximum: L_2 is 6 at t=1 and 12 at t=2.
    """
    n = 9 * t - 1
    x, y, z = (lambda i: i), (lambda i: 3 * t - 1 + i), (lambda i: 6 * t - 1 + i)
    total = VertexSet(n=n, members=tuple(v for v in range(n) if v != x(1)))
    closed = [0, x(3 * t - 1), z(1)]
    for i in range(1, t):
        closed += [x(3 * i - 1), x(3 * i), z(3 * i), z(3 * i + 1)]
    for i in range(1, t + 1):
        closed += [y(3 * i - 1), y(3 * i)]
    return total, VertexSet(n=n, members=tuple(closed))


def _gap_layout(p: int) -> tuple[int, list[tuple[list[int], list[int]]]]:
    base = 3 * p
    cycles = [(list(range(base + 8 * i, base + 8 * i + 4)), list(range(base + 8 * i + 4, base + 8 * i + 8)))
              for i in range(3 * p)]
    return 27 * p, cycles


def gap_graph(p: int) -> Graph:
    """Path u_1..u_{3p}; each u_i carries two 4-cycles joined through their first vertex."""
    if p < 1:
        raise InvalidInput("p_below_one", f"needs p >= 1, got {p}")
    n, cycles = _gap_layout(p)
    edges = [(i, i + 1) for i in range(3 * p - 1)]
    for i, (xs, ys) in enumerate(cycles):
        for ring in (xs, ys):
            edges += [(ring[a], ring[(a + 1) % 4]) for a in range(4)]
            edges.append((i, ring[0]))
    return build_graph(n, edges)


def gap_graph_certificates(p: int) -> tuple[VertexSet, VertexSet]:
    """(all cycle vertices, size 24p; path pairs plus the middle cycle vertices, size 14p)."""
    n, cycles = _gap_layout(p)
    total = VertexSet(n=n, members=tuple(range(3 * p, n)))
    closed = [u for i in range(p) for u in (3 * i, 3 * i + 1)]
    for xs, ys in cycles:
        closed += [xs[1], xs[2], ys[1], ys[2]]
    return total, VertexSet(n=n, members=tuple(closed))


SHARPNESS = {
    "ng_cocktail": ng_cocktail,
    "girth_pendant_cycle": girth_pendant_cycle,
    "tree_diff_sharp": tree_diff_sharp,
    "gap_graph": gap_graph,
}


def build_sharpness(kind: str, **params: Any) -> Graph:
    try:
        build = SHARPNESS[kind]
    except KeyError:
        raise InvalidInput("unknown_family", f"{kind!r} is not one of {', '.join(SHARPNESS)}") from None
    try:
        return build(**params)
    except TypeError as exc:
        raise InvalidInput("missing_parameter", f"{kind}: {exc}") from None


# ——— generate ———

def _family_member(family: str, params: dict[str, Any]) -> tuple[Graph, dict[str, Any], VertexSet | VertexPartition]:
    if family == "omega":
        k, t, r = params["k"], params["t"], params.get("r", 0)
        G, blocks = build_canonical_omega(k, t, r)
        return G, {"k": k, "d_xk": t, "min_degree": t * k + r - 1}, blocks
    if family in {"lambda", "random_lambda"}:
        spec = LambdaSpec(r=params["r"], s=params["s"])
        G = build_lambda(spec) if family == "lambda" else random_lambda(spec.r, spec.s, params.get("seed", 1))
        return G, {"k": 2, "chi_xk": spec.r, "l_k": spec.s, "gamma_xk": spec.s}, lambda_partition(spec)
    if family == "ng_cocktail":
        G = ng_cocktail(params["p"])
        pairs = VertexPartition(class_of=tuple(v // 2 for v in range(G.n)))
        return G, {"k": 2, "chi_xk": params["p"], "chi_xk_complement": 1}, pairs
    if family == "girth_pendant_cycle":
        c_len = params["c_len"]
        G = girth_pendant_cycle(c_len, params["pendant_positions"])
        return G, {"k": 2, "l_kt": c_len, "girth": c_len}, VertexSet(n=G.n, members=tuple(range(c_len)))
    if family == "tree_diff_sharp":
        t = params["t"]
        T = tree_diff_sharp(t)
        expected = {"k": 2, "l_kt": 9 * t - 2}
        closed = l_k(T, 2)
        if closed.complete:
            expected["l_k"] = closed.value
        return T, expected, tree_diff_certificates(t)[0]
    if family == "gap_graph":
        p = params["p"]
        return gap_graph(p), {"k": 2, "l_kt": 24 * p, "l_k": 14 * p}, gap_graph_certificates(p)[0]
    raise InvalidInput("unknown_family", f"{family!r} is not one of {', '.join(FAMILIES)}")


def generate_instance(family: str, **params: Any) -> GeneratedInstance:
    """A family member with the invariant values it is built to attain and a witness."""
    try:
        G, expected, witness = _family_member(family, params)
    except KeyError as missing:
        raise InvalidInput("missing_parameter", f"{family} needs {missing}") from None
    logger.info("generated %s %s with n=%d", family, params, G.n)
    return GeneratedInstance(family=family, params=params, graph6=to_graph6(G), n=G.n, m=G.m,
                             expected=expected, witness=witness)


FAMILIES = ("omega", "lambda", "random_lambda", "ng_cocktail", "girth_pendant_cycle", "tree_diff_sharp", "gap_graph")

"""Registry of the inequalities and characterizations checked by the sweeps.

Each check has an applicability filter (returns a skip reason or ``None``) and
a predicate returning its observed values together with an ``ok`` flag.
Integer forms are used for every bound so no floating point comparisons occur.
"""
import logging
from collections.abc import Callable
from dataclasses import dataclass
from typing import Any

from errors import BudgetExceeded, UnknownCheck
from families import has_lambda_structure, is_in_gamma, is_triple_common_neighbor_family, omega_spec_from_partition, validate_omega
from generators import complete, path
from graph import Graph, complement, girth, is_connected, is_cycle_graph, is_tree, lexicographic_product, support_vertices
from reductions import check_reduction_identity, structure_flags
from schemas import CheckOutcome, InvariantResult
from solvers import chi2_distance, chi_xk, d_xk, gamma_xk, l_k, l_kt, rho
from solvers.oracle import enumerate_optimal_sets
from tree_algo import chi_x2_tree_value, tree_2lp_partition
from utils import ceil_div

logger = logging.getLogger(__name__)

Observed = dict[str, Any]


class _Incomplete(Exception):
    pass


def _exact(result: InvariantResult) -> int:
    if not result.complete or result.value is None:
        raise _Incomplete(result.invariant)
    return result.value


# ——— applicability filters ———

def _nonempty(G: Graph) -> str | None:
    return "empty_graph" if G.n == 0 else None


def _min_degree_one(G: Graph) -> str | None:
    return _nonempty(G) or ("min_degree_zero" if G.min_degree < 1 else None)


def _tree(G: Graph) -> str | None:
    return None if is_tree(G) else "not_a_tree"


def _connected_order_two(G: Graph) -> str | None:
    if G.n < 2:
        return "order_below_two"
    return None if is_connected(G) else "disconnected"


def _girth_applies(G: Graph) -> str | None:
    if girth(G) is None:
        return "acyclic"
    return "triple_common_neighbor" if is_triple_common_neighbor_family(G) else None


def _tree_order_two(G: Graph) -> str | None:
    if not is_tree(G):
        return "not_a_tree"
    return "order_below_two" if G.n < 2 else None


# ——— predicates ———

def _duality_chain(G: Graph, budget: int | None) -> Observed:
    observed: Observed = {"ok": True}
    for k in (1, 2, 3):
        chi = _exact(chi_xk(G, k, budget))
        floor_min = ceil_div(G.max_degree + 1, k)
        observed[f"chi_x{k}"] = chi
        observed["ok"] &= chi >= floor_min
        if G.min_degree >= k - 1:
            d = _exact(d_xk(G, k, budget))
            observed[f"d_x{k}"] = d
            observed["ok"] &= d <= (G.min_degree + 1) // k <= floor_min
    return observed


def _omega_characterization(G: Graph, budget: int | None) -> Observed:
    observed: Observed = {"ok": True}
    for k in (1, 2):
        if G.min_degree < k - 1:
            continue
        result = d_xk(G, k, budget)
        d = _exact(result)
        attains = d == (G.min_degree + 1) // k
        witness = validate_omega(omega_spec_from_partition(G, result.certificate, k)).valid
        observed[f"d_x{k}"] = d
        observed[f"omega_witness_k{k}"] = witness
        observed["ok"] &= attains == witness
    return observed


def _tree_formula(G: Graph, budget: int | None) -> Observed:
    formula = chi_x2_tree_value(G)
    classes = tree_2lp_partition(G).c
    chi = _exact(chi_xk(G, 2, budget))
    return {"ok": chi == formula == classes, "max_degree": G.max_degree, "formula": formula,
            "tree_partition_classes": classes, "chi_x2": chi}


def _lambda_bound(G: Graph, budget: int | None) -> Observed:
    n, m = G.n, G.m
    result = chi_xk(G, 2, budget)
    chi = _exact(result)
    l2 = _exact(l_k(G, 2, budget))
    # χ ≥ m/n + 1/2  and  χ ≥ (1 + √(1 + (4m−2n)/L₂)) / 2, cleared of fractions and roots
    first = 2 * n * chi - (2 * m + n)
    second = l2 * ((2 * chi - 1) ** 2 - 1) - (4 * m - 2 * n)
    observed: Observed = {"chi_x2": chi, "l2": l2, "n": n, "m": m,
                          "counting_tight": first == 0, "packing_tight": second == 0}
    ok = first >= 0 and second >= 0
    if first == 0 or second == 0:
        structure = has_lambda_structure(G, result.certificate)
        observed["lambda_structure"] = structure
        ok = ok and structure
    observed["ok"] = ok
    return observed


def _chi2_half(G: Graph, budget: int | None) -> Observed:
    chi = _exact(chi_xk(G, 2, budget))
    chi2 = _exact(chi2_distance(G, budget))
    return {"ok": chi <= ceil_div(chi2, 2), "chi_x2": chi, "chi2": chi2}


def _ng_lower(G: Graph, budget: int | None) -> Observed:
    total = _exact(chi_xk(G, 2, budget)) + _exact(chi_xk(complement(G), 2, budget))
    return {"ok": total >= ceil_div(G.n + 2, 2), "sum": total, "n": G.n}


_FACTORS = {"K2": complete(2), "P3": path(3)}


def _lex_l2(G: Graph, budget: int | None) -> Observed:
    packing = _exact(rho(G, budget))
    cap = G.n - G.max_degree
    gamma_member = is_in_gamma(G)
    observed: Observed = {"rho": packing, "n_minus_max_degree": cap, "in_gamma": gamma_member}
    ok = packing <= cap
    for name, H in _FACTORS.items():
        value = _exact(l_k(lexicographic_product(G, H), 2, budget))
        observed[f"l2_lex_{name}"] = value
        ok = ok and 2 * packing <= value <= 2 * cap
        if gamma_member:
            ok = ok and value == 2 * packing == 2 * cap
    observed["ok"] = ok
    return observed


def _lex_chi(G: Graph, budget: int | None) -> Observed:
    chi = _exact(chi_xk(G, 2, budget))
    observed: Observed = {"chi_x2": chi, "ok": True}
    for name, H in _FACTORS.items():
        value = _exact(chi_xk(lexicographic_product(G, H), 2, budget))
        lower = ceil_div((G.max_degree + 1) * H.n, 2)
        observed[f"chi_x2_lex_{name}"] = value
        observed[f"lower_lex_{name}"] = lower
        observed["ok"] &= lower <= value <= chi * H.n
    return observed


def _reduction_identity(G: Graph, budget: int | None) -> Observed:
    check = check_reduction_identity(G, budget)
    if not check.complete:
        raise _Incomplete("reduction")
    flags = structure_flags(G)
    preserved = (not flags["bipartite"] or flags["bipartite_corona"]) and (not flags["chordal"] or flags["chordal_corona"])
    return {"ok": bool(check.holds) and preserved, "rho_o": check.rho_o, "l2t_corona": check.l2t_target,
            "n": G.n, **flags}


def _girth_bound(G: Graph, budget: int | None) -> Observed:
    g = girth(G)
    value = _exact(l_kt(G, 2, budget))
    return {"ok": value >= g, "l2t": value, "girth": g}


def _total_ng(G: Graph, budget: int | None) -> Observed:
    own = _exact(l_kt(G, 2, budget))
    other = _exact(l_kt(complement(G), 2, budget))
    five_cycle = G.n == 5 and is_cycle_graph(G)
    limit = G.n + (5 if five_cycle else 4)
    within = own <= G.n - G.max_degree + 2
    return {"ok": own + other <= limit and within, "sum": own + other, "n": G.n, "five_cycle": five_cycle,
            "l2t": own, "l2t_complement": other}


def _tree_gap(G: Graph, budget: int | None) -> Observed:
    total = _exact(l_kt(G, 2, budget))
    closed = _exact(l_k(G, 2, budget))
    return {"ok": total - closed <= G.n // 3, "l2t": total, "l2": closed, "n": G.n}


def _holds_prescribed_leaves(support: dict[int, list[int]], members: frozenset[int]) -> bool:
    return all(sum(leaf in members for leaf in hanging) >= min(2, len(hanging)) for hanging in support.values())


def _support_leaves(G: Graph, budget: int | None) -> Observed:
    support = support_vertices(G)
    observed: Observed = {"support_vertices": len(support)}
    ok = True
    for invariant in ("l_k", "l_kt"):
        try:
            found = any(_holds_prescribed_leaves(support, frozenset(S.members))
                        for S in enumerate_optimal_sets(G, invariant, 2, budget))
        except BudgetExceeded:
            raise _Incomplete(invariant) from None
        observed[f"{invariant}_with_leaves"] = found
        ok = ok and found
    observed["ok"] = ok
    return observed


def _l2_vs_gamma(G: Graph, budget: int | None) -> Observed:
    l2 = _exact(l_k(G, 2, budget))
    gamma = _exact(gamma_xk(G, 2, budget))
    return {"ok": l2 <= gamma, "l2": l2, "gamma_x2": gamma}


def _ng_l2_upper(G: Graph, budget: int | None) -> Observed:
    total = _exact(l_k(G, 2, budget)) + _exact(l_k(complement(G), 2, budget))
    return {"ok": total <= G.n + 2, "sum": total, "n": G.n}


@dataclass(frozen=True)
class TheoremCheck:
    id: str
    title: str
    predicate: Callable[[Graph, int | None], Observed]
    applies: Callable[[Graph], str | None] = _nonempty


CHECKS: dict[str, TheoremCheck] = {check.id: check for check in (
    TheoremCheck("T1", "duality chain d×k ≤ ⌊(δ+1)/k⌋ ≤ ⌈(Δ+1)/k⌉ ≤ χ×k", _duality_chain),
    TheoremCheck("T2", "d×k = ⌊(δ+1)/k⌋ iff the optimal partition is an Ω witness", _omega_characterization),
    TheoremCheck("T3", "trees: χ×2 = ⌈(Δ+1)/2⌉", _tree_formula, _tree),
    TheoremCheck("T4", "χ×2 lower bounds, equality only with Λ structure", _lambda_bound, _min_degree_one),
    TheoremCheck("T5", "χ×2 ≤ ⌈χ₂/2⌉", _chi2_half),
    TheoremCheck("T6", "χ×2(G) + χ×2(Ḡ) ≥ ⌈(n+2)/2⌉", _ng_lower),
    TheoremCheck("T7", "2ρ(G) ≤ L₂(G∘H) ≤ 2(n−Δ(G))", _lex_l2, _connected_order_two),
    TheoremCheck("T8", "⌈(Δ(G)+1)|V(H)|/2⌉ ≤ χ×2(G∘H) ≤ χ×2(G)|V(H)|", _lex_chi, _min_degree_one),
    TheoremCheck("T9", "L_{2,t}(G⊙K₁) = ρ_o(G) + n", _reduction_identity),
    TheoremCheck("T10", "L_{2,t}(G) ≥ g(G) outside the triple-common-neighbor family", _girth_bound, _girth_applies),
    TheoremCheck("T11", "L_{2,t}(G) + L_{2,t}(Ḡ) ≤ n + 4 unless G ≅ C₅", _total_ng),
    TheoremCheck("T12", "trees: L_{2,t} − L₂ ≤ ⌊n/3⌋", _tree_gap, _tree),
    TheoremCheck("T13", "trees: optimal sets hold the support-vertex leaves", _support_leaves, _tree_order_two),
    TheoremCheck("T14", "L₂ ≤ γ×2 when δ ≥ 1", _l2_vs_gamma, _min_degree_one),
    TheoremCheck("T15", "L₂(G) + L₂(Ḡ) ≤ n + 2", _ng_l2_upper),
)}

CHECK_IDS = tuple(CHECKS)


def get_check(check_id: str) -> TheoremCheck:
    try:
        return CHECKS[check_id]
    except KeyError:
        raise UnknownCheck("unknown_check", f"{check_id!r} is not one of {', '.join(CHECK_IDS)}") from None


def evaluate(check_id: str, G: Graph, budget: int | None = None) -> CheckOutcome:
    check = get_check(check_id)
    reason = check.applies(G)
    if reason is not None:
        return CheckOutcome(status="skip", reason=reason)
    try:
        observed = check.predicate(G, budget)
    except _Incomplete as exc:
        logger.warning("%s skipped: budget exhausted in %s", check_id, exc)
        return CheckOutcome(status="skip", reason="budget")
    ok = observed.pop("ok")
    return CheckOutcome(status="pass" if ok else "fail", observed=observed)

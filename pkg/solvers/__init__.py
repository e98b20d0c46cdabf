from solvers.coloring import chi2_distance
from solvers.domination import d_xk, gamma_xk
from solvers.packing import l_k, l_kt, rho, rho_o
from solvers.partition import chi_xk

SOLVERS = {
    "l_k": l_k,
    "l_kt": l_kt,
    "rho": lambda G, k=1, budget=None: rho(G, budget),
    "rho_o": lambda G, k=1, budget=None: rho_o(G, budget),
    "gamma_xk": gamma_xk,
    "d_xk": d_xk,
    "chi_xk": chi_xk,
    "chi2": lambda G, k=None, budget=None: chi2_distance(G, budget),
}

__all__ = ["SOLVERS", "chi2_distance", "chi_xk", "d_xk", "gamma_xk", "l_k", "l_kt", "rho", "rho_o"]

"""Shared plumbing for the branch-and-bound searches."""
from config import settings
from errors import CertificateError
from graph import Graph


class BudgetExhausted(Exception):
    """Raised inside a search when the node budget runs out."""


class NodeCounter:
    def __init__(self, budget: int | None = None):
        self.limit = settings.budget if budget is None else budget
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.limit and self.nodes > self.limit:
            raise BudgetExhausted


def search_order(G: Graph) -> list[int]:
    """Descending degree, ties by index."""
    return sorted(range(G.n), key=lambda v: (-G.degrees[v], v))


def ensure(ok: bool, what: str) -> None:
    if not ok:
        raise CertificateError("invalid_certificate", what)

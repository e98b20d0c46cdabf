"""Exception family shared by every module.

Each error carries a stable snake_case ``detail`` code; the CLI prints it and
maps the class to an exit status.
"""


class LimpackError(Exception):
    def __init__(self, detail: str, message: str | None = None):
        self.detail = detail
        self.message = message or detail
        super().__init__(f"{detail}: {self.message}" if message else detail)

    def as_dict(self) -> dict[str, str]:
        return {"detail": self.detail, "message": self.message}


class InvalidInput(LimpackError):
    """Input rejected before any computation."""


class ParseError(InvalidInput):
    """Malformed graph or certificate text."""


class UndefinedInvariant(LimpackError):
    """kTD predicates on a graph with δ(G) < k−1."""


class CertificateError(LimpackError):
    """A produced certificate failed its own predicate."""


class UnknownCheck(LimpackError):
    pass


class BudgetExceeded(LimpackError):
    """A computation needing an exact value hit its node budget."""

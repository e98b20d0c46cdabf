from typing import Any, Literal

from pydantic import BaseModel, Field, computed_field, model_validator

from graph import Graph, VertexPartition, VertexSet

InvariantName = Literal["l_k", "l_kt", "rho", "rho_o", "gamma_xk", "d_xk", "chi_xk", "chi2"]
ResultStatus = Literal["optimal", "incomplete", "undefined"]


class PredicateViolation(BaseModel):
    kind: str
    witness_vertex: int
    observed: int
    bound: int


class Verdict(BaseModel):
    ok: bool
    violation: PredicateViolation | None = None

    def __bool__(self) -> bool:
        return self.ok


class InvariantResult(BaseModel):
    invariant: InvariantName
    k: int | None = None
    value: int | None
    status: ResultStatus = "optimal"
    certificate: VertexSet | VertexPartition | None = None
    nodes_explored: int = 0
    lower_bound: int | None = None
    upper_bound: int | None = None

    @property
    def complete(self) -> bool:
        return self.status == "optimal"


class OmegaSpec(BaseModel):
    """Block decomposition H₁..H_t plus cross edges over the concatenated vertex range."""

    k: int = Field(ge=1)
    blocks: list[Graph] = Field(min_length=1)
    cross_edges: list[tuple[int, int]] = []
    target_q: int = Field(ge=0)

    @property
    def t(self) -> int:
        return len(self.blocks)

    @property
    def offsets(self) -> list[int]:
        offsets, total = [], 0
        for block in self.blocks:
            offsets.append(total)
            total += block.n
        return offsets


class OmegaValidation(BaseModel):
    valid: bool
    diagnostics: list[str] = []
    t: int
    r: int
    q_observed: int


class LambdaSpec(BaseModel):
    r: int = Field(ge=2)
    s: int = Field(ge=2)


class RootedTree(BaseModel):
    underlying: Graph
    root: int
    parent: tuple[int, ...]
    children: tuple[tuple[int, ...], ...]
    case_tags: dict[int, str] = {}


class ReductionInstance(BaseModel):
    source: Graph
    target: Graph
    threshold_offset: int

    def threshold(self, k: int) -> int:
        """k′ = n + k."""
        return self.threshold_offset + k


class ReductionCheck(BaseModel):
    holds: bool | None
    n: int
    rho_o: int | None
    l2t_target: int | None
    complete: bool


class CheckOutcome(BaseModel):
    status: Literal["pass", "fail", "skip"]
    observed: dict[str, Any] = {}
    reason: str | None = None


class TheoremFailure(BaseModel):
    graph6: str
    observed: dict[str, Any]


class TheoremReport(BaseModel):
    id: str
    title: str
    graphs_tested: int = 0
    graphs_skipped: int = 0
    skip_reasons: dict[str, int] = {}
    failures: list[TheoremFailure] = []
    runtime: float = 0.0

    @computed_field
    @property
    def status(self) -> Literal["pass", "fail"]:
        return "fail" if self.failures else "pass"


class GeneratedInstance(BaseModel):
    family: str
    params: dict[str, Any]
    graph6: str
    n: int
    m: int
    expected: dict[str, Any] = {}
    witness: VertexSet | VertexPartition | None = None


class CliConfig(BaseModel):
    subcommand: Literal["compute", "verify", "generate", "reduce", "theorems"]
    graph_path: str | None = None
    g6: str | None = None
    invariant: str | None = None
    k: int = Field(default=2, ge=1)
    budget: int = Field(default=0, ge=0)
    seed: int = 1
    out: str | None = None
    table: bool = False

    @model_validator(mode="after")
    def _one_input(self) -> "CliConfig":
        if self.subcommand in {"compute", "verify", "reduce"}:
            if (self.graph_path is None) == (self.g6 is None):
                raise ValueError("exactly one of --graph / --g6 is required")
        return self

"""Graph representation and the operators every other module builds on.

Vertices are the dense integers ``0..n-1``. Each adjacency row is a Python
integer used as a packed bitset, so neighborhood intersections are a single
``&`` followed by ``int.bit_count``.
"""
from collections import deque
from collections.abc import Iterable
from functools import cached_property
from typing import NamedTuple

from pydantic import BaseModel, ConfigDict, Field, computed_field, field_validator, model_validator

from errors import InvalidInput
from utils import bits, mask_of


class DegreeStats(NamedTuple):
    max_degree: int
    min_degree: int
    m: int


class Graph(BaseModel):
    """Immutable finite simple graph; ``adj[v]`` is the bitset of N(v)."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0)
    adj: tuple[int, ...]

    @model_validator(mode="after")
    def _check_adjacency(self) -> "Graph":
        if len(self.adj) != self.n:
            raise ValueError("adjacency_length_mismatch")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row < 0 or row & ~full:
                raise ValueError(f"adjacency_out_of_range at vertex {v}")
            if row >> v & 1:
                raise ValueError(f"self_loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric_adjacency between {v} and {u}")
        return self

    @cached_property
    def closed(self) -> tuple[int, ...]:
        """Bitsets of the closed neighborhoods N[v]."""
        return tuple(row | (1 << v) for v, row in enumerate(self.adj))

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(self.degrees) // 2

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class VertexSet(BaseModel):
    """A vertex subset bound to the vertex range of one graph."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0)
    members: tuple[int, ...] = ()

    @field_validator("members")
    @classmethod
    def _normalize(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(sorted(set(value)))

    @model_validator(mode="after")
    def _check_range(self) -> "VertexSet":
        if self.members and (self.members[0] < 0 or self.members[-1] >= self.n):
            raise ValueError("member_out_of_range")
        return self

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "VertexSet":
        return cls(n=n, members=tuple(bits(mask)))

    @cached_property
    def mask(self) -> int:
        return mask_of(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool(self.mask >> v & 1)


class VertexPartition(BaseModel):
    """Total labeling of the vertices into classes ``0..c-1``, none empty."""

    model_config = ConfigDict(frozen=True)

    class_of: tuple[int, ...]

    @model_validator(mode="after")
    def _check_classes(self) -> "VertexPartition":
        if any(label < 0 for label in self.class_of):
            raise ValueError("negative_class_label")
        if set(self.class_of) != set(range(self.c)):
            raise ValueError("empty_class")
        return self

    @computed_field
    @property
    def c(self) -> int:
        return max(self.class_of, default=-1) + 1

    @property
    def n(self) -> int:
        return len(self.class_of)

    @cached_property
    def class_masks(self) -> tuple[int, ...]:
        masks = [0] * self.c
        for v, label in enumerate(self.class_of):
            masks[label] |= 1 << v
        return tuple(masks)

    def classes(self) -> list[VertexSet]:
        return [VertexSet.from_mask(self.n, mask) for mask in self.class_masks]

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "VertexPartition":
        """Build from class bitsets; empty masks are dropped, order is kept."""
        class_of = [-1] * n
        label = 0
        for mask in masks:
            if not mask:
                continue
            for v in bits(mask):
                if v >= n:
                    raise InvalidInput("class_out_of_range", f"vertex {v} outside 0..{n - 1}")
                if class_of[v] != -1:
                    raise InvalidInput("overlapping_classes", f"vertex {v} appears twice")
                class_of[v] = label
            label += 1
        if -1 in class_of:
            raise InvalidInput("partial_partition", f"vertex {class_of.index(-1)} has no class")
        return cls(class_of=tuple(class_of))

    @classmethod
    def from_classes(cls, n: int, classes: Iterable[Iterable[int]]) -> "VertexPartition":
        return cls.from_masks(n, (mask_of(members) for members in classes))


def _from_rows(rows: list[int]) -> Graph:
    return Graph(n=len(rows), adj=tuple(rows))


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise InvalidInput("negative_order", f"n={n}")
    rows = [0] * n
    for u, v in edge_list:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidInput("endpoint_out_of_range", f"edge ({u}, {v}) with n={n}")
        if u == v:
            raise InvalidInput("self_loop", f"edge ({u}, {v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return _from_rows(rows)


def empty_graph(n: int) -> Graph:
    return build_graph(n, [])


def degree_stats(G: Graph) -> DegreeStats:
    return DegreeStats(G.max_degree, G.min_degree, G.m)


def complement(G: Graph) -> Graph:
    full = G.vertex_mask
    return _from_rows([full & ~G.closed[v] for v in range(G.n)])


def distances_from(G: Graph, source: int) -> list[int | None]:
    dist: list[int | None] = [None] * G.n
    dist[source] = 0
    seen = 1 << source
    frontier = 1 << source
    level = 0
    while frontier:
        level += 1
        reach = 0
        for v in bits(frontier):
            reach |= G.adj[v]
        frontier = reach & ~seen
        seen |= frontier
        for v in bits(frontier):
            dist[v] = level
    return dist


def girth(G: Graph) -> int | None:
    """Length of a shortest cycle, or ``None`` for an acyclic graph."""
    best: int | None = None
    for root in range(G.n):
        dist = [-1] * G.n
        parent = [-1] * G.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for w in bits(G.adj[u]):
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def square(G: Graph) -> Graph:
    rows = []
    for v in range(G.n):
        reach = 0
        for u in bits(G.adj[v]):
            reach |= G.closed[u]
        rows.append(reach & ~(1 << v))
    return _from_rows(rows)


def lexicographic_product(G: Graph, H: Graph) -> Graph:
    """G∘H on vertices g·|V(H)|+h."""
    if G.n == 0 or H.n == 0:
        raise InvalidInput("empty_factor", "both factors need at least one vertex")
    h = H.n
    fiber = (1 << h) - 1
    rows = []
    for g in range(G.n):
        across = 0
        for g2 in bits(G.adj[g]):
            across |= fiber << (g2 * h)
        for hv in range(h):
            rows.append(across | (H.adj[hv] << (g * h)))
    return _from_rows(rows)


def corona_k1(G: Graph) -> Graph:
    """G⊙K₁: pendant n+i attached to vertex i."""
    n = G.n
    rows = [G.adj[v] | (1 << (n + v)) for v in range(n)]
    rows.extend(1 << v for v in range(n))
    return _from_rows(rows)


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    offset = 0
    for H in graphs:
        rows.extend(row << offset for row in H.adj)
        offset += H.n
    return _from_rows(rows)


def induced_subgraph(G: Graph, vertices: Iterable[int]) -> Graph:
    """G[S] relabeled to 0..|S|-1 in ascending vertex order."""
    keep = sorted(set(vertices))
    position = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        rows.append(mask_of(position[u] for u in bits(G.adj[v]) if u in position))
    return _from_rows(rows)


def is_connected(G: Graph) -> bool:
    if G.n == 0:
        return True
    return None not in distances_from(G, 0)


def is_tree(G: Graph) -> bool:
    return G.n >= 1 and G.m == G.n - 1 and is_connected(G)


def is_cycle_graph(G: Graph) -> bool:
    return G.n >= 3 and all(d == 2 for d in G.degrees) and is_connected(G)


def leaves(G: Graph) -> list[int]:
    return [v for v in range(G.n) if G.degrees[v] == 1]


def support_vertices(G: Graph) -> dict[int, list[int]]:
    """Map each support vertex to its adjacent leaves (weak: one, strong: two or more)."""
    support: dict[int, list[int]] = {}
    for leaf in leaves(G):
        (s,) = G.neighbors(leaf)
        support.setdefault(s, []).append(leaf)
    return dict(sorted(support.items()))

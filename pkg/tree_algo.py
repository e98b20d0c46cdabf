"""Linear-time 2-limited-packing partitions of trees.

χ×2(T) = ⌈(Δ(T)+1)/2⌉ for every tree T. The labeling roots T at the
lowest-index vertex of maximum degree and labels top-down with labels 1..p,
p = ⌈(Δ+1)/2⌉. Each label may appear at most twice in every closed
neighborhood; when a vertex v labels its children, the labels of v and of its
parent have already used up part of that allowance in N[v].
"""
import logging
from collections import deque

from errors import CertificateError, InvalidInput
from graph import Graph, VertexPartition, is_tree
from schemas import RootedTree
from utils import ceil_div
from validators import is_klp_partition

logger = logging.getLogger(__name__)


def _require_tree(T: Graph) -> None:
    if not is_tree(T):
        raise InvalidInput("not_a_tree", f"graph with n={T.n}, m={T.m} is not a tree")


def chi_x2_tree_value(T: Graph) -> int:
    _require_tree(T)
    return ceil_div(T.max_degree + 1, 2)


def root_tree(T: Graph) -> RootedTree:
    """Root at the lowest-index maximum-degree vertex; children in ascending order."""
    _require_tree(T)
    root = T.degrees.index(T.max_degree)
    parent = [-1] * T.n
    children: list[list[int]] = [[] for _ in range(T.n)]
    seen = {root}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for u in T.neighbors(v):
            if u not in seen:
                seen.add(u)
                parent[u] = v
                children[v].append(u)
                queue.append(u)
    return RootedTree(underlying=T, root=root, parent=tuple(parent), children=tuple(tuple(c) for c in children))


def _case_tag(delta_odd: bool, own: int, above: int, p: int, t: int) -> str:
    parity = "odd" if t % 2 else "even"
    if not delta_odd:
        return f"case1-{parity}"
    if own == above == p:
        return "case2.1"
    return f"case2.2-{parity}"


def _child_labels(tag: str, own: int, above: int, p: int, t: int) -> list[int]:
    cap = [0] + [2] * p
    cap[own] -= 1
    cap[above] -= 1
    tail: list[int] = []
    if t % 2 and cap[p] >= 1:
        tail = [p]
    elif tag == "case2.2-even" and t >= 2 and cap[own] >= 1 and cap[p] >= (2 if own == p else 1):
        tail = [own, p]
    for label in tail:
        cap[label] -= 1
    slots: list[int] = []
    for label in range(1, p):
        if cap[label] == 2:
            slots += [label, label]
            cap[label] = 0
    if cap[p] == 2:
        slots += [p, p]
        cap[p] = 0
    slots += [label for label in range(1, p + 1) if cap[label] == 1]
    head = t - len(tail)
    if len(slots) < head:
        raise CertificateError("label_pool_exhausted", f"{t} children, {len(slots) + len(tail)} free slots")
    return slots[:head] + tail


def label_tree(T: Graph) -> tuple[VertexPartition, RootedTree]:
    """Partition T into ⌈(Δ+1)/2⌉ 2-limited packings, with the case tag used at each internal vertex."""
    rooted = root_tree(T)
    delta = T.max_degree
    p = ceil_div(delta + 1, 2)
    label = [0] * T.n
    tags: dict[int, str] = {}

    x = rooted.root
    kids = rooted.children[x]
    label[x] = p
    if delta % 2:
        tags[x] = "root-odd"
        paired, last = kids[:-1], kids[-1:]
        for u in last:
            label[u] = p
    else:
        tags[x] = "root-even"
        paired = kids
    for i, u in enumerate(paired):
        label[u] = i // 2 + 1

    queue = deque(kids)
    while queue:
        v = queue.popleft()
        kids = rooted.children[v]
        if not kids:
            continue
        own, above = label[v], label[rooted.parent[v]]
        tags[v] = _case_tag(bool(delta % 2), own, above, p, len(kids))
        for u, assigned in zip(kids, _child_labels(tags[v], own, above, p, len(kids))):
            label[u] = assigned
        queue.extend(kids)

    partition = VertexPartition(class_of=tuple(lab - 1 for lab in label))
    if partition.c != p or not is_klp_partition(T, partition, 2):
        raise CertificateError("invalid_tree_partition", f"labeling of tree with n={T.n} failed its post-check")
    logger.debug("tree n=%d Δ=%d labelled with %d classes", T.n, delta, p)
    return partition, rooted.model_copy(update={"case_tags": tags})


def tree_2lp_partition(T: Graph) -> VertexPartition:
    return label_tree(T)[0]

"""Hypothesis strategies for small labeled graphs and their vertex sets and partitions."""
from itertools import combinations

from hypothesis import strategies as st

from graph import VertexPartition, VertexSet, build_graph


@st.composite
def small_graphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [pair for pair, keep in zip(pairs, chosen) if keep])


@st.composite
def graphs_with_set(draw, max_n=6):
    G = draw(small_graphs(max_n=max_n))
    mask = draw(st.integers(min_value=0, max_value=(1 << G.n) - 1))
    return G, VertexSet.from_mask(G.n, mask)


@st.composite
def graphs_with_partition(draw, max_n=6):
    G = draw(small_graphs(max_n=max_n))
    labels = draw(st.lists(st.integers(min_value=0, max_value=G.n - 1), min_size=G.n, max_size=G.n))
    masks = [0] * G.n
    for v, label in enumerate(labels):
        masks[label] |= 1 << v
    return G, VertexPartition.from_masks(G.n, masks)

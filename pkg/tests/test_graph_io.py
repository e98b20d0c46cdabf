import os

import pytest

os.environ.setdefault("LIMPACK_LOG_LEVEL", "WARNING")

from errors import ParseError
from generators import complete, cycle, path, star
from graph import build_graph
from graph_io import (from_graph6, from_networkx, iter_graph6_lines, load_graphs, read_dimacs, read_edge_list,
                      to_graph6, to_networkx, write_dimacs, write_edge_list)


def test_graph6_known_string():
    assert to_graph6(complete(4)) == "C~"
    assert from_graph6("C~") == complete(4)
    assert from_graph6(">>graph6<<C~") == complete(4)


def test_graph6_preserves_labels():
    G = star(5)
    assert from_graph6(to_graph6(G)) == G


@pytest.mark.parametrize("text", ["", "   ", "\x7f\x7f", "C"])
def test_graph6_rejects_garbage(text):
    with pytest.raises(ParseError) as exc:
        from_graph6(text)
    assert exc.value.detail == "bad_graph6"


def test_iter_graph6_skips_blank_lines():
    text = f"{to_graph6(path(3))}\n\n{to_graph6(cycle(5))}\n"
    assert list(iter_graph6_lines(text)) == [path(3), cycle(5)]


def test_networkx_bridge():
    H = to_networkx(cycle(4))
    assert H.number_of_edges() == 4
    assert from_networkx(H) == cycle(4)


def test_dimacs_is_one_based():
    text = "c square\np edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n"
    assert read_dimacs(text) == cycle(4)
    assert read_dimacs(write_dimacs(star(3))) == star(3)


@pytest.mark.parametrize("text", ["e 1 2\n", "p edge 3 1\ne 1 x\n", "p edge 3 1\nq 1 2\n", "c nothing\n"])
def test_dimacs_rejects_malformed(text):
    with pytest.raises(ParseError) as exc:
        read_dimacs(text)
    assert exc.value.detail == "bad_dimacs"


def test_edge_list_counts_edges():
    assert read_edge_list("3 2\n0 1\n1 2\n") == path(3)
    assert read_edge_list(write_edge_list(complete(3))) == complete(3)
    with pytest.raises(ParseError):
        read_edge_list("3 2\n0 1\n")
    with pytest.raises(ParseError):
        read_edge_list("")


def test_load_graphs_by_extension(tmp_path):
    g6 = tmp_path / "many.g6"
    g6.write_text(f"{to_graph6(path(4))}\n{to_graph6(build_graph(1, []))}\n", encoding="ascii")
    col = tmp_path / "one.col"
    col.write_text(write_dimacs(cycle(5)), encoding="ascii")
    edges = tmp_path / "one.edges"
    edges.write_text(write_edge_list(star(2)), encoding="ascii")
    assert load_graphs(g6) == [path(4), build_graph(1, [])]
    assert load_graphs(col) == [cycle(5)]
    assert load_graphs(edges) == [star(2)]


def test_load_graphs_missing_file(tmp_path):
    with pytest.raises(ParseError) as exc:
        load_graphs(tmp_path / "absent.g6")
    assert exc.value.detail == "unreadable_input"

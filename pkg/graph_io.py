"""Text formats: graph6 (through networkx), DIMACS edge format, plain edge lists."""
from collections.abc import Iterator
from pathlib import Path

import networkx as nx

from errors import ParseError
from graph import Graph, build_graph


def to_networkx(G: Graph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def from_networkx(H: nx.Graph) -> Graph:
    """Relabel nodes to 0..n-1 in iteration order."""
    index = {node: i for i, node in enumerate(H.nodes())}
    return build_graph(len(index), ((index[u], index[v]) for u, v in H.edges()))


def to_graph6(G: Graph) -> str:
    return nx.to_graph6_bytes(to_networkx(G), header=False).decode("ascii").strip()


def from_graph6(text: str) -> Graph:
    line = text.strip()
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    if not line:
        raise ParseError("bad_graph6", "empty graph6 string")
    try:
        return from_networkx(nx.from_graph6_bytes(line.encode("ascii")))
    except (nx.NetworkXError, ValueError, UnicodeEncodeError) as exc:
        raise ParseError("bad_graph6", f"{line!r}: {exc}") from None


def iter_graph6_lines(text: str) -> Iterator[Graph]:
    for line in text.splitlines():
        if line.strip():
            yield from_graph6(line)


def read_dimacs(text: str) -> Graph:
    """``p edge n m`` header then ``e u v`` lines with 1-based vertices."""
    n = None
    edges = []
    for number, raw in enumerate(text.splitlines(), start=1):
        fields = raw.split()
        if not fields or fields[0] == "c":
            continue
        try:
            if fields[0] == "p":
                if len(fields) < 3:
                    raise ParseError("bad_dimacs", f"line {number}: malformed header")
                n = int(fields[2])
            elif fields[0] == "e":
                if n is None or len(fields) < 3:
                    raise ParseError("bad_dimacs", f"line {number}: edge before header or too short")
                edges.append((int(fields[1]) - 1, int(fields[2]) - 1))
            else:
                raise ParseError("bad_dimacs", f"line {number}: unknown record {fields[0]!r}")
        except ValueError:
            raise ParseError("bad_dimacs", f"line {number}: non-integer field") from None
    if n is None:
        raise ParseError("bad_dimacs", "missing 'p edge' header")
    return build_graph(n, edges)


def write_dimacs(G: Graph) -> str:
    lines = [f"p edge {G.n} {G.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in G.edges())
    return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> Graph:
    """First line ``n m``, then ``m`` lines ``u v`` with 0-based vertices."""
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows:
        raise ParseError("bad_edge_list", "empty input")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(u), int(v)) for u, v in rows[1:]]
    except (ValueError, IndexError):
        raise ParseError("bad_edge_list", "expected integer pairs") from None
    if len(edges) != m:
        raise ParseError("bad_edge_list", f"header announces {m} edges, found {len(edges)}")
    return build_graph(n, edges)


def write_edge_list(G: Graph) -> str:
    lines = [f"{G.n} {G.m}"]
    lines.extend(f"{u} {v}" for u, v in G.edges())
    return "\n".join(lines) + "\n"


def load_graphs(path: str | Path) -> list[Graph]:
    """Read a file by extension: ``.dimacs``/``.col`` DIMACS, ``.txt``/``.edges`` edge list, else graph6 lines."""
    path = Path(path)
    try:
        text = path.read_text(encoding="ascii")
    except OSError as exc:
        raise ParseError("unreadable_input", str(exc)) from None
    suffix = path.suffix.lower()
    if suffix in {".dimacs", ".col"}:
        return [read_dimacs(text)]
    if suffix in {".txt", ".edges"}:
        return [read_edge_list(text)]
    return list(iter_graph6_lines(text))

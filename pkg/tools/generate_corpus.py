#!/usr/bin/env python3
"""Regenerate the bundled graph6 corpora in src/domlab/data/.

Small-graph enumeration comes from the networkx graph atlas (all graphs on
up to seven vertices). Each emitted line is encoded with domlab's own
graph6 encoder and cross-checked against networkx's decoder; counts are
checked against the known enumeration sequences (all graphs on n vertices:
1, 2, 4, 11, 34, 156, 1044 for n = 1..7; connected: 1, 1, 2, 6, 21, 112,
853).

Development tool only; the generated files are committed.
"""

import sys
from pathlib import Path

import networkx as nx

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from domlab.formats import parse_graph6, to_graph6
from domlab.generators import (
    complete_multipartite,
    cycle,
    path,
    star,
    three_stars_triangle,
)
from domlab.graph import Graph

DATA = Path(__file__).resolve().parent.parent / "src" / "domlab" / "data"

ALL_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def atlas_graphs():
    for G in nx.graph_atlas_g()[1:]:  # index 0 is the 0-vertex placeholder
        yield Graph.from_edges(G.number_of_nodes(), list(G.edges()))


def crosscheck(g: Graph, line: str) -> None:
    back = parse_graph6(line)
    assert back == g, f"round trip failed for {line}"
    H = nx.from_graph6_bytes(line.encode())
    assert H.number_of_nodes() == g.n
    assert {tuple(sorted(e)) for e in H.edges()} == set(g.edges()), line


def write(name: str, graphs) -> None:
    lines = []
    for g in graphs:
        line = to_graph6(g)
        crosscheck(g, line)
        lines.append(line)
    (DATA / f"{name}.g6").write_text("\n".join(lines) + "\n")
    print(f"{name}: {len(lines)} graphs")


def main() -> None:
    DATA.mkdir(parents=True, exist_ok=True)
    atlas = list(atlas_graphs())

    by_n = {}
    for g in atlas:
        by_n.setdefault(g.n, []).append(g)
    for n, expect in ALL_COUNTS.items():
        assert len(by_n[n]) == expect, (n, len(by_n[n]), expect)

    connected = [g for g in atlas if len(nx_components(g)) == 1]
    conn_by_n = {}
    for g in connected:
        conn_by_n.setdefault(g.n, []).append(g)
    for n, expect in CONNECTED_COUNTS.items():
        assert len(conn_by_n[n]) == expect, (n, len(conn_by_n[n]), expect)

    write("n5all", [g for g in atlas if g.n <= 5])
    write("n6all", [g for g in atlas if g.n <= 6])
    write("n6c", [g for g in connected if 2 <= g.n <= 6])
    write("n7c", [g for g in connected if 2 <= g.n <= 7])
    write("paths14", [path(n) for n in range(2, 15)])
    write("cycles14", [cycle(n) for n in range(3, 15)])
    write(
        "named",
        [star(p) for p in range(2, 7)]
        + [three_stars_triangle(p) for p in range(2, 5)]
        + [complete_multipartite([3, 3, 3])],
    )


def nx_components(g: Graph):
    from domlab.graph import components

    return components(g)


if __name__ == "__main__":
    main()

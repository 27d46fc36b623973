"""Catalog of graph properties used as constraints on dominating sets.

Each property is a predicate on graphs plus four metadata flags:

* hereditary           closed under arbitrary subgraphs
* induced_hereditary   closed under induced subgraphs
* closed_union_K1      adding an isolated vertex preserves the property
* nondegenerate        every edgeless graph has the property

The flags are hard-coded (they gate which verification suites apply and
must be deterministic); `audit_flags` is the empirical cross-check that
hunts for counterexamples to each flag's defining implication on a corpus.

Empty-set convention: the empty graph has every property except
"connected" and "min degree >= 1", for which it is rejected. The predicate
definitions never force a choice for those two; this keeps dominating-set
search monotone for the K1-closed properties.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .bitset import VertexSet, iter_bits
from .graph import Graph, components_within, induced_subgraph
from . import formats


@dataclass(frozen=True)
class PropertyDescriptor:
    id: str  # wire format: one of I, O, C, T, F, UK, D (D carries k)
    name: str = field(compare=False)
    k: int | None = None
    hereditary: bool = field(default=False, compare=False)
    induced_hereditary: bool = field(default=False, compare=False)
    closed_union_K1: bool = field(default=False, compare=False)
    nondegenerate: bool = field(default=False, compare=False)

    def __post_init__(self):
        if (self.id == "D") != (self.k is not None):
            raise ValueError("parameter k is required exactly for max-degree properties")
        if self.k is not None and self.k < 0:
            raise ValueError(f"max-degree bound must be >= 0, got {self.k}")
        if self.hereditary and not self.induced_hereditary:
            raise ValueError("hereditary implies induced-hereditary")

    @property
    def key(self) -> str:
        """CLI selection syntax: I, O, C, T, F, UK, or D:<k>."""
        return f"D:{self.k}" if self.id == "D" else self.id

    def __str__(self):
        return self.key


ANY_GRAPH = PropertyDescriptor(
    "I", "any graph",
    hereditary=True, induced_hereditary=True,
    closed_union_K1=True, nondegenerate=True,
)
EDGELESS = PropertyDescriptor(
    "O", "edgeless",
    hereditary=True, induced_hereditary=True,
    closed_union_K1=True, nondegenerate=True,
)
CONNECTED = PropertyDescriptor("C", "connected")
NO_ISOLATED = PropertyDescriptor("T", "min degree >= 1")
FOREST = PropertyDescriptor(
    "F", "forest",
    hereditary=True, induced_hereditary=True,
    closed_union_K1=True, nondegenerate=True,
)
CLIQUE_COMPONENTS = PropertyDescriptor(
    "UK", "disjoint union of cliques",
    hereditary=False, induced_hereditary=True,
    closed_union_K1=True, nondegenerate=True,
)


def max_degree(k: int) -> PropertyDescriptor:
    return PropertyDescriptor(
        "D", f"max degree <= {k}", k=k,
        hereditary=True, induced_hereditary=True,
        closed_union_K1=True, nondegenerate=True,
    )


def parse_property(text: str) -> PropertyDescriptor:
    """Parse CLI syntax: I, O, C, T, F, UK, or D:<k> (default k=1 for bare D)."""
    t = text.strip()
    fixed = {p.id: p for p in (ANY_GRAPH, EDGELESS, CONNECTED, NO_ISOLATED,
                               FOREST, CLIQUE_COMPONENTS)}
    if t in fixed:
        return fixed[t]
    if t == "D":
        return max_degree(1)
    if t.startswith("D:"):
        try:
            return max_degree(int(t[2:]))
        except ValueError:
            raise ValueError(f"bad max-degree parameter in {text!r}") from None
    raise ValueError(f"unknown property {text!r}")


def holds(p: PropertyDescriptor, g: Graph) -> bool:
    return holds_induced(p, g, g.vertex_mask)


def holds_induced(p: PropertyDescriptor, g: Graph, S: VertexSet) -> bool:
    """Does the subgraph of g induced by S have property p?

    Evaluated directly on the bitmask, without materializing the subgraph.
    """
    if S & ~g.vertex_mask:
        raise ValueError("set contains vertices outside the graph")
    pid = p.id
    if pid == "I":
        return True
    adj = g.adj
    if pid == "O":
        return all(adj[v] & S == 0 for v in iter_bits(S))
    if pid == "D":
        k = p.k
        return all((adj[v] & S).bit_count() <= k for v in iter_bits(S))
    if pid == "T":
        return S != 0 and all(adj[v] & S for v in iter_bits(S))
    if pid == "C":
        return S != 0 and len(components_within(g, S)) == 1
    if pid == "F":
        twice_edges = sum((adj[v] & S).bit_count() for v in iter_bits(S))
        return twice_edges // 2 == S.bit_count() - len(components_within(g, S))
    if pid == "UK":
        for comp in components_within(g, S):
            for v in iter_bits(comp):
                if comp & ~(adj[v] | (1 << v)):
                    return False
        return True
    raise ValueError(f"unknown property id {pid!r}")


CATALOG = (ANY_GRAPH, EDGELESS, CONNECTED, NO_ISOLATED, FOREST,
           CLIQUE_COMPONENTS, max_degree(1))

_FLAGS = ("hereditary", "induced_hereditary", "closed_union_K1", "nondegenerate")


@dataclass
class AuditReport:
    """Empirical check of the four flag definitions over a corpus.

    `violations[flag]` lists (graph6, detail) witnesses where the flag's
    defining implication failed. A flag claimed True in the descriptor must
    come out clean; a claimed-False flag may or may not expose a witness on
    a small corpus.
    """

    property: PropertyDescriptor
    graphs_checked: int
    violations: dict[str, list[tuple[str, str]]]

    @property
    def claim_violations(self) -> dict[str, list[tuple[str, str]]]:
        return {
            flag: hits
            for flag, hits in self.violations.items()
            if hits and getattr(self.property, flag)
        }

    @property
    def claims_confirmed(self) -> bool:
        return not self.claim_violations


def _with_isolated_vertex(g: Graph) -> Graph:
    return Graph(g.n + 1, g.adj + (0,))


def audit_flags(p: PropertyDescriptor, corpus) -> AuditReport:
    """Exhaustively test each flag's defining implication on the corpus.

    Intended for small graphs (the hereditary check walks every edge subset
    of every induced subgraph).
    """
    violations: dict[str, list[tuple[str, str]]] = {flag: [] for flag in _FLAGS}
    checked = 0
    for g in corpus:
        checked += 1
        g6 = formats.to_graph6(g)
        if g.edge_count() == 0 and not holds(p, g):
            violations["nondegenerate"].append((g6, "edgeless graph lacks the property"))
        if not holds(p, g):
            continue
        if not holds(p, _with_isolated_vertex(g)):
            violations["closed_union_K1"].append((g6, "fails after adding an isolated vertex"))
        hereditary_hit = None
        induced_hit = None
        for S in range(g.vertex_mask + 1):
            sub, _ = induced_subgraph(g, S)
            sub_ok = holds(p, sub)
            if not sub_ok and induced_hit is None:
                induced_hit = f"induced subgraph on vertex set {S:#x} lacks the property"
            if hereditary_hit is None:
                sub_edges = sub.edges()
                for r in range(len(sub_edges) + 1):
                    for chosen in itertools.combinations(sub_edges, r):
                        if not holds(p, Graph.from_edges(sub.n, chosen)):
                            hereditary_hit = (
                                f"subgraph (vertex set {S:#x}, {r} edges) lacks the property"
                            )
                            break
                    if hereditary_hit:
                        break
        if induced_hit:
            violations["induced_hereditary"].append((g6, induced_hit))
        if hereditary_hit:
            violations["hereditary"].append((g6, hereditary_hit))
    return AuditReport(p, checked, violations)

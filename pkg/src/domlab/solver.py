"""Exact minimum dominating sets under a property constraint.

gamma(g, p) is the smallest cardinality of a set S that dominates g while
the subgraph induced by S has property p; it is None (undefined) when no
such set exists, which can only happen for properties that are not
nondegenerate (e.g. "connected" on a disconnected graph).

The main solver runs iterative deepening over the target cardinality. Inside
each depth-limited search it picks an undominated vertex with the fewest
candidate dominators and branches on its closed neighborhood; for
induced-hereditary properties, partial sets whose induced subgraph already
lacks the property are pruned (sound: induced subgraphs of supersets contain
them). For the two non-monotone catalog properties the search instead grows
a dominating set until the property appears.

gamma_oracle is the independent cross-check: plain subset enumeration in
increasing cardinality with no pruning, capped at n <= 20.

Conventions: gamma of the empty graph is 0 with witness {} for properties
that accept the empty set, undefined otherwise. Witnesses and enumeration
order are lexicographic on sorted member tuples, lowest vertex id first.
Values are memoized per (graph, property); results are identical to cold
runs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .bitset import VertexSet, bitmask, iter_bits
from .errors import OracleCapError, UndefinedGammaError
from .graph import Graph, components, delete_vertex
from .properties import PropertyDescriptor, holds_induced

ORACLE_MAX_N = 20


@dataclass(frozen=True)
class GammaResult:
    value: int | None
    witness: VertexSet | None
    property: PropertyDescriptor
    graph_label: str = ""

    @property
    def defined(self) -> bool:
        return self.value is not None


def is_dominating(g: Graph, S: VertexSet) -> bool:
    """True iff the closed neighborhoods of S cover all of V(g)."""
    if S & ~g.vertex_mask:
        raise ValueError("set contains vertices outside the graph")
    cover = S
    for v in iter_bits(S):
        cover |= g.adj[v]
    return cover == g.vertex_mask


class _Search:
    """Depth-limited dominating-set search over one (graph, property) pair."""

    def __init__(self, g: Graph, p: PropertyDescriptor):
        self.g = g
        self.p = p
        self.full = g.vertex_mask
        self.closed = tuple(g.adj[v] | (1 << v) for v in range(g.n))
        self.sizes = tuple(c.bit_count() for c in self.closed)
        self.max_closed = max(self.sizes, default=1)
        self.prune = p.induced_hereditary

    def find(self, budget: int, start_set: VertexSet = 0) -> VertexSet | None:
        """Any dominating p-set containing start_set plus <= budget more vertices."""
        if self.prune and not holds_induced(self.p, self.g, start_set):
            return None
        dom = start_set
        for v in iter_bits(start_set):
            dom |= self.g.adj[v]
        self._best_budget: dict[int, int] = {}
        return self._descend(start_set, dom, budget)

    def _descend(self, S, dom, budget):
        if dom == self.full:
            if self.prune or holds_induced(self.p, self.g, S):
                return S
            return self._grow(S, 0, budget)
        if budget <= 0:
            return None
        seen = self._best_budget.get(S)
        if seen is not None and seen >= budget:
            return None
        self._best_budget[S] = budget
        undominated = self.full & ~dom
        if undominated.bit_count() > budget * self.max_closed:
            return None
        branch, fanout = -1, self.g.n + 2
        for v in iter_bits(undominated):
            if self.sizes[v] < fanout:
                branch, fanout = v, self.sizes[v]
                if fanout == 1:
                    break
        for u in iter_bits(self.closed[branch]):
            S2 = S | (1 << u)
            if self.prune and not holds_induced(self.p, self.g, S2):
                continue
            hit = self._descend(S2, dom | self.closed[u], budget - 1)
            if hit is not None:
                return hit
        return None

    def _grow(self, S, start, budget):
        # already dominating; add vertices until the property holds
        if holds_induced(self.p, self.g, S):
            return S
        if budget <= 0:
            return None
        for u in range(start, self.g.n):
            if (S >> u) & 1:
                continue
            hit = self._grow(S | (1 << u), u + 1, budget - 1)
            if hit is not None:
                return hit
        return None


def _clearly_undefined(g: Graph, p: PropertyDescriptor) -> bool:
    # shortcuts for the non-nondegenerate catalog entries; the generic
    # deepening loop would reach the same answer, just slower
    if p.id == "C":
        return len(components(g)) != 1
    if p.id == "T":
        return any(g.adj[v] == 0 for v in range(g.n))
    return False


@lru_cache(maxsize=1 << 17)
def _gamma_value(g: Graph, p: PropertyDescriptor) -> int | None:
    if g.n == 0:
        return 0 if holds_induced(p, g, 0) else None
    if _clearly_undefined(g, p):
        return None
    search = _Search(g, p)
    floor = max(1, -(-g.n // search.max_closed))
    for k in range(floor, g.n + 1):
        if search.find(k) is not None:
            return k
    return None


def gamma_value(g: Graph, p: PropertyDescriptor) -> int | None:
    """The domination number with respect to p, without a witness."""
    return _gamma_value(g, p)


def _enumerate_at(g, p, k, first_only):
    """Dominating p-sets of size exactly k, ascending-lexicographic order."""
    full = g.vertex_mask
    closed = tuple(g.adj[v] | (1 << v) for v in range(g.n))
    max_closed = max((c.bit_count() for c in closed), default=1)
    prune = p.induced_hereditary
    out: list[VertexSet] = []

    def rec(S, dom, start, budget):
        if budget == 0:
            if dom == full and (prune or holds_induced(p, g, S)):
                out.append(S)
            return
        rest = (full >> start) << start
        for w in iter_bits(full & ~dom):
            if not closed[w] & rest:
                return  # w can no longer be dominated
        if (full & ~dom).bit_count() > budget * max_closed:
            return
        for u in range(start, g.n):
            S2 = S | (1 << u)
            if prune and not holds_induced(p, g, S2):
                continue
            rec(S2, dom | closed[u], u + 1, budget - 1)
            if out and first_only:
                return

    rec(0, 0, 0, k)
    return out


def gamma(g: Graph, p: PropertyDescriptor) -> GammaResult:
    """Minimum dominating p-set; witness is the lexicographically least one."""
    value = _gamma_value(g, p)
    if value is None:
        return GammaResult(None, None, p, g.label)
    witness = _enumerate_at(g, p, value, first_only=True)[0]
    return GammaResult(value, witness, p, g.label)


def gamma_oracle(g: Graph, p: PropertyDescriptor) -> GammaResult:
    """Brute-force reference: all subsets in increasing cardinality, no pruning."""
    if g.n > ORACLE_MAX_N:
        raise OracleCapError(f"oracle capped at n <= {ORACLE_MAX_N}, got n={g.n}")
    for k in range(g.n + 1):
        for combo in itertools.combinations(range(g.n), k):
            S = bitmask(combo)
            if is_dominating(g, S) and holds_induced(p, g, S):
                return GammaResult(k, S, p, g.label)
    return GammaResult(None, None, p, g.label)


def all_minimum_sets(g: Graph, p: PropertyDescriptor) -> list[VertexSet]:
    """Every minimum dominating p-set, in lexicographic order."""
    value = _gamma_value(g, p)
    if value is None:
        raise UndefinedGammaError(
            f"gamma is undefined for property {p.key} on this graph"
        )
    return _enumerate_at(g, p, value, first_only=False)


def in_some_minimum_set(g: Graph, p: PropertyDescriptor, v: int) -> bool:
    """Does v lie in at least one minimum dominating p-set?

    Solved by forcing v into the set and asking for the same total size, not
    by enumerating all minimum sets.
    """
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for n={g.n}")
    value = _gamma_value(g, p)
    if value is None:
        raise UndefinedGammaError(
            f"gamma is undefined for property {p.key} on this graph"
        )
    return _Search(g, p).find(value - 1, start_set=1 << v) is not None


def v_minus_set(g: Graph, p: PropertyDescriptor) -> VertexSet:
    """Vertices whose deletion strictly lowers gamma.

    Vertices where gamma of the deleted graph is undefined are excluded: an
    undefined value is not a decrease.
    """
    value = _gamma_value(g, p)
    if value is None:
        raise UndefinedGammaError(
            f"gamma is undefined for property {p.key} on this graph"
        )
    out = 0
    for v in range(g.n):
        smaller, _ = delete_vertex(g, v)
        reduced = _gamma_value(smaller, p)
        if reduced is not None and reduced < value:
            out |= 1 << v
    return out

"""Edge criticality under one subdivision and under deletion.

An edge is S+-critical when a single subdivision raises gamma, S--critical
when it lowers it, and ER--critical when deleting the edge lowers gamma.
`check_theorem1_conditions` evaluates, against one minimum set M, the three
structural conditions that characterize S+-critical edges; condition (iii)
is implemented as the mirror image of (ii) (swap the roles of the
endpoints), with `literal=True` switching the final clause to the
non-symmetrized variant for audit runs.

When any of the three gamma values involved is undefined, every flag is
False and the classification is marked out of scope; the theorems'
hypotheses guarantee existence, so outside them we report rather than
assert.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .bitset import VertexSet
from .errors import ScopeError
from .graph import Edge, Graph, delete_edge, private_neighbors, subdivide_edge
from .properties import ANY_GRAPH, PropertyDescriptor, holds_induced
from .solver import all_minimum_sets, gamma_value, is_dominating


class ConditionCheck(NamedTuple):
    i: bool
    ii: bool
    iii: bool

    @property
    def any(self) -> bool:
        return self.i or self.ii or self.iii


@dataclass(frozen=True)
class EdgeClassification:
    edge: Edge
    gamma: int | None
    gamma_subdivided: int | None
    gamma_deleted: int | None
    s_plus: bool
    s_minus: bool
    er_minus: bool
    in_scope: bool
    condition_report: tuple[tuple[VertexSet, ConditionCheck], ...]


def _pn_unrestricted(g: Graph, x: int, X: VertexSet) -> VertexSet:
    # like private_neighbors but without requiring x in X (empty when x not in X)
    xbit = 1 << x
    out = 0
    for y in range(g.n):
        if ((g.adj[y] | (1 << y)) & X) == xbit:
            out |= 1 << y
    return out


def check_theorem1_conditions(
    g: Graph,
    e: Edge,
    p: PropertyDescriptor,
    M: VertexSet,
    literal: bool = False,
) -> ConditionCheck:
    """Which of the S+-criticality conditions does the minimum set M satisfy?

    (i)   neither endpoint is in M;
    (ii)  u in M, v is a private neighbor of u w.r.t. M, and u's private
          neighbors are not all within {u, v};
    (iii) mirror of (ii) with the endpoints swapped. With literal=True the
          last clause of (iii) instead inspects the private neighbors of the
          endpoint that is *not* in M, which is vacuous by definition; it is
          kept only so audit runs can compare both readings.
    """
    value = gamma_value(g, p)
    if value is None or M.bit_count() != value or not is_dominating(g, M) or \
            not holds_induced(p, g, M):
        raise ValueError("M is not a minimum dominating p-set of g")
    u, v = e
    if u > v:
        u, v = v, u
    if not g.has_edge(u, v):
        raise ValueError(f"edge ({u},{v}) not present")
    ubit, vbit = 1 << u, 1 << v
    pair = ubit | vbit

    cond_i = not M & pair

    def half(a, abit, bbit, literal_clause):
        if not M & abit:
            return False
        pn_a = private_neighbors(g, a, M)
        if not pn_a & bbit:
            return False
        clause_set = literal_clause if literal_clause is not None else pn_a
        return bool(clause_set & ~pair)

    cond_ii = half(u, ubit, vbit, None)
    if literal:
        cond_iii = half(v, vbit, ubit, _pn_unrestricted(g, u, M))
    else:
        cond_iii = half(v, vbit, ubit, None)
    return ConditionCheck(cond_i, cond_ii, cond_iii)


def classify_edge(g: Graph, e: Edge, p: PropertyDescriptor,
                  literal: bool = False) -> EdgeClassification:
    """Gamma values and criticality flags for one edge, plus the per-minimum-set
    condition report."""
    u, v = e
    if u > v:
        u, v = v, u
    if not g.has_edge(u, v):
        raise ValueError(f"edge ({u},{v}) not present")
    base = gamma_value(g, p)
    subdivided = gamma_value(subdivide_edge(g, (u, v), 1), p)
    deleted = gamma_value(delete_edge(g, (u, v)), p)
    in_scope = None not in (base, subdivided, deleted)
    report: tuple[tuple[VertexSet, ConditionCheck], ...] = ()
    if base is not None:
        report = tuple(
            (M, check_theorem1_conditions(g, (u, v), p, M, literal=literal))
            for M in all_minimum_sets(g, p)
        )
    return EdgeClassification(
        edge=(u, v),
        gamma=base,
        gamma_subdivided=subdivided,
        gamma_deleted=deleted,
        s_plus=in_scope and subdivided > base,
        s_minus=in_scope and subdivided < base,
        er_minus=in_scope and deleted < base,
        in_scope=in_scope,
        condition_report=report,
    )


class IffCheck(NamedTuple):
    lhs: bool  # the edge is S+-critical
    rhs: bool  # every minimum set satisfies one of (i)/(ii)/(iii)


def is_s_plus_critical_iff_conditions(
    g: Graph, e: Edge, p: PropertyDescriptor = ANY_GRAPH, literal: bool = False
) -> IffCheck:
    """Both sides of the S+-criticality characterization (proved for the
    unrestricted property; other properties are accepted for exploration)."""
    base = gamma_value(g, p)
    subdivided = gamma_value(subdivide_edge(g, e, 1), p)
    lhs = base is not None and subdivided is not None and subdivided > base
    rhs = base is not None and all(
        check_theorem1_conditions(g, e, p, M, literal=literal).any
        for M in all_minimum_sets(g, p)
    )
    return IffCheck(lhs, rhs)


class MinusCheck(NamedTuple):
    s_minus: bool
    er_minus: bool


def s_minus_equiv_er_minus(g: Graph, e: Edge, p: PropertyDescriptor) -> MinusCheck:
    """The two sides of the subdivision-vs-deletion equivalence.

    Requires an induced-hereditary property closed under union with K1;
    outside that scope the equivalence is not claimed.
    """
    if not (p.induced_hereditary and p.closed_union_K1):
        raise ScopeError(
            f"property {p.key} must be induced-hereditary and closed under "
            "union with K1"
        )
    base = gamma_value(g, p)
    subdivided = gamma_value(subdivide_edge(g, e, 1), p)
    deleted = gamma_value(delete_edge(g, e), p)
    in_scope = None not in (base, subdivided, deleted)
    return MinusCheck(
        s_minus=in_scope and subdivided < base,
        er_minus=in_scope and deleted < base,
    )


class ClassMembership(NamedTuple):
    cs_minus: bool   # every edge S--critical
    cer_minus: bool  # every edge ER--critical


def class_membership(g: Graph, p: PropertyDescriptor) -> ClassMembership:
    edges = g.edges()
    if not edges:
        raise ValueError("class membership needs at least one edge")
    base = gamma_value(g, p)
    cs = cer = True
    for e in edges:
        subdivided = gamma_value(subdivide_edge(g, e, 1), p)
        deleted = gamma_value(delete_edge(g, e), p)
        in_scope = None not in (base, subdivided, deleted)
        cs = cs and in_scope and subdivided < base
        cer = cer and in_scope and deleted < base
    return ClassMembership(cs, cer)

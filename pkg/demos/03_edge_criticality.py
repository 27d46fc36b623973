#!/usr/bin/env python3
"""Edge criticality: what one subdivision or one deletion does to gamma.

An edge is S+-critical if a single subdivision raises gamma, S--critical if
it lowers it, and ER--critical if deleting it lowers gamma. For
induced-hereditary properties closed under adding an isolated vertex, the
last two notions coincide edge by edge.

Run:  python demos/03_edge_criticality.py
"""

from domlab import (
    ANY_GRAPH,
    EDGELESS,
    FOREST,
    class_membership,
    classify_edge,
    complete_multipartite,
    cycle,
    is_s_plus_critical_iff_conditions,
    members,
    s_minus_equiv_er_minus,
    star,
    three_stars_triangle,
)

# A star: gamma is 1 (the center) and any subdivision forces a second
# vertex, so every edge is S+-critical.
g = star(4)
c = classify_edge(g, (0, 1), ANY_GRAPH)
print("K1,4 edge (0,1):", f"gamma {c.gamma} -> subdivided {c.gamma_subdivided}",
      "| s_plus =", c.s_plus)

# The structural characterization: the edge is S+-critical exactly when
# every minimum set satisfies one of three conditions on its endpoints'
# private neighborhoods. The condition report lists them per minimum set.
print("condition report for the star edge:")
for M, cond in c.condition_report:
    print(f"  set {members(M)}: i={cond.i} ii={cond.ii} iii={cond.iii}")
print("iff check:", is_s_plus_critical_iff_conditions(g, (0, 1)))

# C4 is inert for the unrestricted property: all three gammas are 2.
c4 = cycle(4)
flags = [classify_edge(c4, e, ANY_GRAPH) for e in c4.edges()]
print("\nC4 flags (s_plus, s_minus, er_minus):",
      {(f.s_plus, f.s_minus, f.er_minus) for f in flags})

# K_{3,3,3} under the edgeless constraint: every edge is S-- and
# ER--critical (gamma drops from 3 to 2 either way), so the graph sits in
# both all-edges-critical classes.
k333 = complete_multipartite([3, 3, 3])
print("\nK3,3,3 / O, edge (0,3):", s_minus_equiv_er_minus(k333, (0, 3), EDGELESS))
print("K3,3,3 / O class membership:", class_membership(k333, EDGELESS))

# Three stars joined into a triangle, acyclicity as the constraint: the
# triangle edges are S--critical (and hence ER--critical).
tst = three_stars_triangle(3)
print("\ntriangle-of-stars / F, triangle edge:",
      s_minus_equiv_er_minus(tst, (0, 1), FOREST))
print("a leaf edge:", s_minus_equiv_er_minus(tst, (0, 3), FOREST))

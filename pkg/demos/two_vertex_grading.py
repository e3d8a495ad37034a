"""
How edge signs change graded K-theory
=====================================

A two-vertex graph: ``v`` sends infinitely many edges to ``w``; ``w`` sends
``q`` positive and ``p`` negative edges back to ``v`` and has ``r``
positive and ``s`` negative loops.  Only ``w`` is a finite emitter, so the
K-theory matrix has a single column.
"""

from math import gcd

from graphk import graded_k_groups, parse_graph, k_matrix

TEMPLATE = """
vertices: v w
edges: v -> w +inf
edges: w -> w +{r} -{s}
edges: w -> v +{q} -{p}
"""

# Each choice below lands in a different regime of the column (p - q ; 1 - r + s).
for r, s, p, q in [(1, 0, 0, 0), (0, 0, 1, 1), (1, 0, 2, 0), (3, 0, 2, 0), (5, 1, 0, 6)]:
    g = parse_graph(TEMPLATE.format(r=r, s=s, p=p, q=q))
    res = graded_k_groups(g)
    column = [row[0] for row in k_matrix(g).tolist()]
    print(f"r={r} s={s} p={p} q={q}  column={column}  K_gr = {res}")

# When both entries of the column are nonzero the cokernel is Z (+) Z_gcd:
# a 2x1 relation matrix can never kill both free generators.
a, b = 1 - 3 + 0, 2 - 0
print("gcd of the column entries for r=3, p=2:", gcd(a, b))

# Loops at the infinite emitter, and the signs of its edges, never matter.
h = parse_graph(TEMPLATE.format(r=3, s=0, q=0, p=2) + "edges: v -> v +7 -inf\n")
print("with extra loops at v:", graded_k_groups(h))

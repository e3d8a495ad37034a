"""
Ungraded K-theory of Cuntz algebras and friends
===============================================

The bouquet with ``n`` loops gives the Cuntz algebra O_n, with K-theory
(Z_{n-1}, 0).  With infinitely many loops every row disappears from the
matrix and K0 is a single copy of Z, whatever the grading.
"""

from graphk import INF, SignedGraph, graded_k_groups, ungraded_k_groups

for n in range(2, 7):
    bouquet = SignedGraph(["v"], {("v", "v"): (n, 0)})
    print(f"O_{n}:", ungraded_k_groups(bouquet))

# infinitely many loops, in every sign pattern
for pos, neg in [(INF, 0), (0, INF), (INF, INF), (INF, 5)]:
    g = SignedGraph(["v"], {("v", "v"): (pos, neg)})
    print(f"(+{pos}, -{neg}) loops, graded:", graded_k_groups(g))

# a 2-cycle is the circle algebra C(T) tensored with 2x2 matrices
cycle = SignedGraph(["v", "w"], {("v", "w"): (1, 0), ("w", "v"): (1, 0)})
print("2-cycle:", ungraded_k_groups(cycle))

# a lone sink is just C
print("sink:", ungraded_k_groups(SignedGraph(["v"])))

# Signs matter in the graded theory: two positive loops and one negative
# loop count as a single loop, so the graded answer is that of a circle.
mixed = SignedGraph(["v"], {("v", "v"): (2, 1)})
print("loops (+2, -1): graded", graded_k_groups(mixed), " ungraded", ungraded_k_groups(mixed))

"""
Complex Clifford algebras in low dimensions
===========================================

CCliff_1 is C (+) C and CCliff_2 is the algebra of 2x2 complex matrices.
The maps below are exact, multiplicative and respect adjoints and gradings.
"""

from graphk.clifford import (
    CliffordElement,
    GradedTensor,
    adjoint,
    beta_ccliff2,
    graded_k_lookup,
    grading,
    iso_ccliff1,
    iso_ccliff2,
    parse_element,
    tensor_to_clifford,
)

e1, e2 = parse_element("e1", 2), parse_element("e2", 2)
print("e1 e2 =", e1 * e2, "   e2 e1 =", e2 * e1, "   (e1 e2)^2 =", (e1 * e2) * (e1 * e2))
print("adjoint of e1e2:", adjoint(e1 * e2))

x = parse_element("1 + 2i * e1", 1)
print("image of", x, "in C (+) C:", iso_ccliff1(x))

for b in CliffordElement.basis(2):
    m = iso_ccliff2(b)
    print(f"{str(b):>5} -> {[[str(z) for z in row] for row in m.tolist()]}")

# the grading becomes "negate the off-diagonal entries"
y = parse_element("3 + e1 - i * e2 + e1e2")
print(iso_ccliff2(grading(y)) == beta_ccliff2(iso_ccliff2(y)))

# two copies of CCliff_1, multiplied with the graded sign rule, give CCliff_2
one, e = CliffordElement.scalar(1), parse_element("e1")
left, right = GradedTensor.pure(e, one), GradedTensor.pure(one, e)
print("(1 (x) e)(e (x) 1) ->", tensor_to_clifford(right * left))

for n in range(5):
    print(f"K_gr(CCliff_{n}) =", graded_k_lookup(n))

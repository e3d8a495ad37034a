"""
Smith normal form with witnesses
================================

``smith_normal_form`` returns unimodular ``u`` and ``v`` with
``u @ m @ v == d``.  The invariant factors can be double-checked against
gcds of minors, which is slow but needs no elimination at all.
"""

from graphk.exact_linalg import (
    IntMatrix,
    cokernel,
    elementary_divisors_oracle,
    kernel_basis,
    smith_normal_form,
)

m = IntMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
snf = smith_normal_form(m)
print("d =", snf.d.tolist())
print("u =", snf.u.tolist())
print("v =", snf.v.tolist())
print("u @ m @ v == d:", snf.u @ m @ snf.v == snf.d)
print("invariant factors:", snf.invariant_factors, " oracle:", elementary_divisors_oracle(m))
print("cokernel:", cokernel(m))
print("kernel basis:", kernel_basis(m))

# entries grow quickly but stay exact
big = IntMatrix.from_rows([[10**40 + 1, 10**40], [10**40, 10**40 - 1]])
print("big determinant-one matrix ->", smith_normal_form(big).diagonal)

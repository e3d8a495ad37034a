"""Exit criteria.  Each ``criterion_*`` function raises AssertionError on failure.

Run under pytest (a PASS/FAIL line per criterion is added to the terminal
summary) or directly: ``python tests/test_acceptance.py``.
"""

import random
import sys
import time
from math import gcd
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from graphk.clifford import (  # noqa: E402
    CliffordElement,
    GradedTensor,
    adjoint,
    beta_ccliff1,
    beta_ccliff2,
    graded_k_lookup,
    graded_tensor_adjoint,
    grading,
    iso_ccliff1,
    iso_ccliff1_inverse,
    iso_ccliff2,
    iso_ccliff2_inverse,
    random_element,
    tensor_to_clifford,
)
from graphk.exact_linalg import (  # noqa: E402
    AbelianGroup,
    IntMatrix,
    determinant,
    elementary_divisors_oracle,
    smith_normal_form,
)
from graphk.graph_ktheory import graded_k_groups, k_matrix, ungraded_k_groups  # noqa: E402
from graphk.graph_model import INF, SignedGraph, classify  # noqa: E402

from _builders import (  # noqa: E402
    bouquet,
    random_low_rank_matrix,
    random_matrix,
    random_signed_graph,
    two_vertex_graph,
)

Z = AbelianGroup.free(1)
TRIVIAL = AbelianGroup()


def _timed(limit):
    def deco(fn):
        def wrapper():
            t0 = time.perf_counter()
            fn()
            elapsed = time.perf_counter() - t0
            assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"
        wrapper.__name__ = fn.__name__
        wrapper.__doc__ = fn.__doc__
        return wrapper
    return deco


@_timed(1.0)
def criterion_1():
    """two-vertex graph, balanced/one-sided cases: exact groups"""
    cases = {
        (1, 0, 0, 0): (AbelianGroup.free(2), Z),
        (0, 0, 1, 1): (Z, TRIVIAL),
        (1, 0, 2, 0): (AbelianGroup(1, (2,)), TRIVIAL),
    }
    for (r, s, p, q), expected in cases.items():
        got = graded_k_groups(two_vertex_graph(r, s, p, q)).pair
        assert got == expected, ((r, s, p, q), got, expected)


def criterion_2():
    """two-vertex graph with both coordinates nonzero: Z (+) Z_2, not a finite group"""
    g = two_vertex_graph(3, 0, 2, 0)
    m = k_matrix(g)
    assert m == IntMatrix.from_rows([[2], [-2]]), m
    # oracle: gcd of the 1x1 minors; the 2x2 minors do not exist
    assert elementary_divisors_oracle(m) == (gcd(2, -2),) == (2,)
    res = graded_k_groups(g)
    assert res.pair == (AbelianGroup(1, (2,)), TRIVIAL)
    # a 2x1 relation matrix leaves free rank >= 1, so a finite K0 is impossible
    printed = AbelianGroup.from_cyclic_orders([1 - 3 + 0, 2 - 0])
    assert printed.free_rank == 0
    assert res.k0 != printed and res.k0.free_rank >= m.rows - m.cols


@_timed(1.0)
def criterion_3():
    """bouquet of infinitely many loops, every sign pattern: (Z, 0)"""
    for mult in [(INF, 0), (0, INF), (INF, INF), (INF, 5)]:
        assert graded_k_groups(bouquet(*mult)).pair == (Z, TRIVIAL), mult


def criterion_4():
    """ungraded sanity: O_n, 2-cycle, single sink"""
    for n in range(2, 7):
        res = ungraded_k_groups(bouquet(n))
        expected = AbelianGroup(0, (n - 1,)) if n > 2 else TRIVIAL
        assert res.pair == (expected, TRIVIAL), n
    cycle = SignedGraph(["v", "w"], {("v", "w"): (1, 0), ("w", "v"): (1, 0)})
    assert ungraded_k_groups(cycle).pair == (Z, Z)
    assert ungraded_k_groups(SignedGraph(["v"])).pair == (Z, TRIVIAL)


@_timed(10.0)
def criterion_5():
    """Smith form on 500+ random matrices: witness, unimodularity, chain, oracle"""
    rng = random.Random(20240501)
    uniform = [random_matrix(rng, max_dim=6, bound=9) for _ in range(500)]
    # extra low-rank samples with nontrivial invariant factors
    structured = [random_low_rank_matrix(rng, max_dim=6, bound=3) for _ in range(150)]
    assert all(-9 <= x <= 9 for m in uniform for x in m.entries)
    for m in uniform + structured:
        snf = smith_normal_form(m)
        assert snf.u @ m @ snf.v == snf.d, m
        assert abs(determinant(snf.u)) == 1 and abs(determinant(snf.v)) == 1, m
        assert snf.d.is_diagonal(), m
        diag = snf.diagonal
        assert all(x > 0 for x in diag[:snf.rank]) and not any(diag[snf.rank:]), m
        assert all(diag[i + 1] % diag[i] == 0 for i in range(snf.rank - 1)), m
        assert snf.invariant_factors == elementary_divisors_oracle(m), m


@_timed(2.0)
def criterion_6():
    """Clifford: matrix pictures of CCliff_1 and CCliff_2, random algebra laws, tensor picture"""
    basis1 = CliffordElement.basis(1)
    for a in basis1:
        assert iso_ccliff1(adjoint(a)) == iso_ccliff1(a).adjoint()
        assert iso_ccliff1(grading(a)) == beta_ccliff1(iso_ccliff1(a))
        assert iso_ccliff1_inverse(iso_ccliff1(a)) == a
        for b in basis1:
            assert iso_ccliff1(a * b) == iso_ccliff1(a) * iso_ccliff1(b)

    basis2 = CliffordElement.basis(2)
    for a in basis2:
        assert iso_ccliff2(adjoint(a)) == iso_ccliff2(a).adjoint()
        m = iso_ccliff2(a)
        assert iso_ccliff2(grading(a)) == beta_ccliff2(m)
        assert beta_ccliff2(m).tolist() == [[m.a, -m.b], [-m.c, m.d]]
        assert iso_ccliff2_inverse(m) == a
        for b in basis2:
            assert iso_ccliff2(a * b) == iso_ccliff2(a) @ iso_ccliff2(b)

    rng = random.Random(3)
    for _ in range(200):
        a, b, c = (random_element(3, rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert adjoint(a * b) == adjoint(b) * adjoint(a)

    tensors = [GradedTensor(1, 1, {(s, t): 1}) for s in [(), (1,)] for t in [(), (1,)]]
    for x in tensors:
        assert tensor_to_clifford(graded_tensor_adjoint(x)) == adjoint(tensor_to_clifford(x))
        for y in tensors:
            assert tensor_to_clifford(x * y) == tensor_to_clifford(x) * tensor_to_clifford(y)


def criterion_7():
    """graded K-theory of CCliff_n alternates with period 2"""
    for n in range(9):
        expected = (Z, TRIVIAL) if n % 2 == 0 else (TRIVIAL, Z)
        assert graded_k_lookup(n).pair == expected, n
        assert graded_k_lookup(n + 2).pair == graded_k_lookup(n).pair


@_timed(30.0)
def criterion_8():
    """100+ random sink-free graphs: sign forgetting, rank-nullity, relabelling, K1 free"""
    rng = random.Random(8)
    # 100 graphs with finite multiplicities <= 4, then 50 with infinite emitters
    graphs = [random_signed_graph(rng, max_vertices=6, max_mult=4, p_inf=0.0) for _ in range(100)]
    graphs += [random_signed_graph(rng, max_vertices=6, max_mult=4, p_inf=0.15) for _ in range(50)]
    for g in graphs:
        props = classify(g)
        assert not props.sinks
        graded = graded_k_groups(g)
        plain = g.with_signs_forgotten()
        assert graded_k_groups(plain).pair == ungraded_k_groups(plain).pair
        assert graded.k0.free_rank - graded.k1.free_rank == len(g.vertices) - len(props.finite_emitters)
        ungraded = ungraded_k_groups(g)
        assert ungraded.k0.free_rank - ungraded.k1.free_rank == len(g.vertices) - len(props.regular)
        assert graded.k1.torsion == () and ungraded.k1.torsion == ()
        order = list(g.vertices)
        rng.shuffle(order)
        h = g.reordered(order)
        assert graded_k_groups(h).pair == graded.pair
        assert ungraded_k_groups(h).pair == ungraded.pair


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4,
            criterion_5, criterion_6, criterion_7, criterion_8]


@pytest.mark.acceptance
@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"AC{k}" for k in range(1, 9)])
def test_acceptance(criterion):
    criterion()


if __name__ == "__main__":
    failed = 0
    for k, crit in enumerate(CRITERIA, start=1):
        try:
            crit()
            status = "PASS"
        except AssertionError as exc:
            status, failed = f"FAIL ({exc})", failed + 1
        print(f"AC{k} {status}: {crit.__doc__}")
    sys.exit(1 if failed else 0)

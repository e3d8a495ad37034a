"""Graph and matrix builders shared by the test modules."""

import random

from hypothesis import strategies as st

from graphk import INF, IntMatrix, SignedGraph


def two_vertex_graph(r, s, p, q, a=0, b=0, f=(INF, 0)):
    """v sends infinitely many edges to w; w sends (q, p) edges to v and has (r, s) loops.

    ``a``/``b`` are the +/- loop counts at v and ``f`` the signed count of
    the infinite family v -> w.
    """
    return SignedGraph(["v", "w"], {
        ("v", "w"): f,
        ("v", "v"): (a, b),
        ("w", "v"): (q, p),
        ("w", "w"): (r, s),
    })


def bouquet(pos, neg=0):
    return SignedGraph(["v"], {("v", "v"): (pos, neg)})


def random_matrix(rng, max_dim=6, bound=9, min_dim=0):
    r, c = rng.randint(min_dim, max_dim), rng.randint(min_dim, max_dim)
    return IntMatrix(r, c, [rng.randint(-bound, bound) for _ in range(r * c)])


def random_low_rank_matrix(rng, max_dim=6, bound=3):
    """Product of two thin random matrices times a scalar: nontrivial divisors."""
    r, c = rng.randint(1, max_dim), rng.randint(1, max_dim)
    k = rng.randint(1, min(r, c))
    a = IntMatrix(r, k, [rng.randint(-bound, bound) for _ in range(r * k)])
    b = IntMatrix(k, c, [rng.randint(-bound, bound) for _ in range(k * c)])
    scale = rng.choice([1, 2, 3, 4, 6])
    m = a @ b
    return IntMatrix(r, c, [scale * x for x in m.entries])


def random_unimodular(rng, n, steps=12, bound=3):
    """Product of random elementary operations on the n x n identity."""
    rows = IntMatrix.identity(n).tolist()
    for _ in range(steps if n > 1 else 0):
        i, j = rng.sample(range(n), 2)
        kind = rng.random()
        if kind < 0.6:
            f = rng.randint(-bound, bound)
            rows[i] = [x + f * y for x, y in zip(rows[i], rows[j])]
        elif kind < 0.8:
            rows[i], rows[j] = rows[j], rows[i]
        else:
            rows[i] = [-x for x in rows[i]]
    if n == 1 and rng.random() < 0.5:
        rows = [[-1]]
    return IntMatrix.from_rows(rows, n)


def random_signed_graph(rng, max_vertices=6, max_mult=4, p_edge=0.4, p_inf=0.1,
                        sink_free=True, signed=True):
    n = rng.randint(1, max_vertices)
    names = [f"x{k}" for k in range(n)]
    mult = {}
    for s in names:
        for d in names:
            if rng.random() < p_edge:
                pos = INF if rng.random() < p_inf else rng.randint(0, max_mult)
                neg = (INF if rng.random() < p_inf else rng.randint(0, max_mult)) if signed else 0
                mult[(s, d)] = (pos, neg)
    g = SignedGraph(names, mult)
    if sink_free:
        mult = g.multiplicities
        for s in names:
            if all(m.is_zero for (a, _), m in mult.items() if a == s):
                d = rng.choice(names)
                mult[(s, d)] = (rng.randint(1, max_mult), rng.randint(0, max_mult) if signed else 0)
        g = SignedGraph(names, mult)
    return g


@st.composite
def signed_graphs(draw, max_vertices=5, max_mult=4, sink_free=False, allow_inf=True, signed=True):
    n = draw(st.integers(0 if not sink_free else 1, max_vertices))
    names = [f"v{k}" for k in range(n)]
    count = st.integers(0, max_mult)
    if allow_inf:
        count = st.one_of(count, st.just(INF))
    mult = {}
    for s in names:
        for d in names:
            if draw(st.booleans()):
                mult[(s, d)] = (draw(count), draw(count) if signed else 0)
    if sink_free:
        for s in names:
            if all(SignedGraph(names, mult).multiplicity(s, d).is_zero for d in names):
                mult[(s, draw(st.sampled_from(names)))] = (draw(st.integers(1, max_mult)), 0)
    return SignedGraph(names, mult)


def seeded(seed):
    return random.Random(seed)

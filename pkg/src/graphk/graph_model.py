"""Directed graphs whose edges carry a sign in Z_2 = {+1, -1}.

Edges are not stored individually.  For every ordered pair of vertices we
keep how many edges run from ``src`` to ``dst`` with sign +1 and how many
with sign -1; either count may be infinite.  That is all the K-theory
formulas ever look at.

Convention: an edge listed under ``(v, u)`` has source ``v`` and range ``u``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Union

__all__ = [
    "INF",
    "ExtNat",
    "SignedMultiplicity",
    "SignedGraph",
    "CorrespondenceProperties",
    "GraphProperties",
    "InvalidGraphError",
    "validate",
    "out_degree",
    "classify",
]

INF = math.inf
ExtNat = Union[int, float]  # a natural number, or INF

_NAME_RE = re.compile(r"^[A-Za-z0-9_]+$")


class InvalidGraphError(ValueError):
    """Raised when an operation receives a graph that fails ``validate``."""

    def __init__(self, violations: list[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


def _check_extnat(x, what: str) -> ExtNat:
    if x == INF:
        return INF
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError(f"{what} must be a natural number or INF, got {x!r}")
    if x < 0:
        raise ValueError(f"{what} must be non-negative, got {x}")
    return x


@dataclass(frozen=True)
class SignedMultiplicity:
    """Counts of +1 and -1 edges between one ordered pair of vertices."""

    pos: ExtNat = 0
    neg: ExtNat = 0

    def __post_init__(self):
        object.__setattr__(self, "pos", _check_extnat(self.pos, "pos"))
        object.__setattr__(self, "neg", _check_extnat(self.neg, "neg"))

    @property
    def total(self) -> ExtNat:
        return self.pos + self.neg

    @property
    def is_infinite(self) -> bool:
        return self.pos == INF or self.neg == INF

    @property
    def is_zero(self) -> bool:
        return self.pos == 0 and self.neg == 0

    @property
    def signed_sum(self) -> int:
        """Sum of the edge signs, pos - neg.  Undefined for infinite counts."""
        if self.is_infinite:
            raise ValueError("signed sum of an infinite multiplicity")
        return self.pos - self.neg

    def __add__(self, other: "SignedMultiplicity") -> "SignedMultiplicity":
        return SignedMultiplicity(self.pos + other.pos, self.neg + other.neg)


ZERO = SignedMultiplicity()

PairKey = tuple[str, str]


class SignedGraph:
    """An immutable edge-signed directed multigraph.

    ``vertices`` keeps declaration order, which fixes the row and column
    order of every matrix built from the graph.  ``multiplicities`` maps
    ``(src, dst)`` to a :class:`SignedMultiplicity`; missing pairs have no
    edges and zero entries are dropped on construction.

    The constructor does not reject undeclared or duplicate vertex names
    so that such graphs can be reported on by :func:`validate`; the
    analysis functions refuse them.
    """

    __slots__ = ("_vertices", "_mult")

    def __init__(
        self,
        vertices: Iterable[str] = (),
        multiplicities: Mapping[PairKey, Union[SignedMultiplicity, tuple[ExtNat, ExtNat]]] | None = None,
    ):
        mult = {}
        for key, m in (multiplicities or {}).items():
            if not isinstance(m, SignedMultiplicity):
                m = SignedMultiplicity(*m)
            src, dst = key
            if not m.is_zero:
                mult[(src, dst)] = m
        self._vertices = tuple(vertices)
        self._mult = mult

    @classmethod
    def from_edges(
        cls,
        vertices: Iterable[str],
        edges: Iterable[tuple[str, str, ExtNat, ExtNat]],
    ) -> "SignedGraph":
        """Build from ``(src, dst, pos, neg)`` records; repeated pairs accumulate."""
        acc: dict[PairKey, SignedMultiplicity] = {}
        for src, dst, pos, neg in edges:
            acc[(src, dst)] = acc.get((src, dst), ZERO) + SignedMultiplicity(pos, neg)
        return cls(vertices, acc)

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @property
    def multiplicities(self) -> dict[PairKey, SignedMultiplicity]:
        return dict(self._mult)

    def multiplicity(self, src: str, dst: str) -> SignedMultiplicity:
        return self._mult.get((src, dst), ZERO)

    def pairs(self) -> list[tuple[str, str, SignedMultiplicity]]:
        """Nonzero pairs in (src, dst) declaration order, undeclared names last."""
        index = {v: k for k, v in enumerate(self._vertices)}
        n = len(index)

        def key(item):
            (s, d), _ = item
            return (index.get(s, n), s, index.get(d, n), d)

        return [(s, d, m) for (s, d), m in sorted(self._mult.items(), key=key)]

    def reordered(self, order: Iterable[str]) -> "SignedGraph":
        """Same graph with vertices declared in ``order`` (a permutation)."""
        order = tuple(order)
        if sorted(order) != sorted(self._vertices):
            raise ValueError("reordering must be a permutation of the vertices")
        return SignedGraph(order, self._mult)

    def with_signs_forgotten(self) -> "SignedGraph":
        """Every edge relabelled with sign +1."""
        return SignedGraph(self._vertices,
                           {k: SignedMultiplicity(m.total, 0) for k, m in self._mult.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignedGraph):
            return NotImplemented
        return self._vertices == other._vertices and self._mult == other._mult

    def __hash__(self) -> int:
        return hash((self._vertices, frozenset(self._mult.items())))

    def __repr__(self) -> str:
        pairs = ", ".join(f"{s}->{d}: (+{m.pos}, -{m.neg})" for s, d, m in self.pairs())
        return f"SignedGraph({list(self._vertices)}, {{{pairs}}})"


@dataclass(frozen=True)
class CorrespondenceProperties:
    """Properties of the graph correspondence read off from the graph."""

    left_action_compact: bool
    left_action_injective: bool
    module_full: bool
    left_action_nondegenerate: bool = True


@dataclass(frozen=True)
class GraphProperties:
    sinks: tuple[str, ...]
    sources: tuple[str, ...]
    infinite_emitters: tuple[str, ...]
    finite_emitters: tuple[str, ...]
    non_sinks: tuple[str, ...]
    row_finite: bool
    correspondence: CorrespondenceProperties

    @property
    def regular(self) -> tuple[str, ...]:
        """Finite emitters that are not sinks, in declaration order."""
        g = set(self.non_sinks)
        return tuple(v for v in self.finite_emitters if v in g)

    def to_dict(self) -> dict:
        return {
            "sinks": list(self.sinks),
            "sources": list(self.sources),
            "infinite_emitters": list(self.infinite_emitters),
            "finite_emitters": list(self.finite_emitters),
            "non_sinks": list(self.non_sinks),
            "row_finite": self.row_finite,
            "correspondence": {
                "left_action_compact": self.correspondence.left_action_compact,
                "left_action_injective": self.correspondence.left_action_injective,
                "module_full": self.correspondence.module_full,
                "left_action_nondegenerate": self.correspondence.left_action_nondegenerate,
            },
        }


def validate(g: SignedGraph) -> list[str]:
    """Return a list of problems with ``g``; an empty list means it is valid."""
    problems = []
    seen = set()
    for v in g.vertices:
        if not isinstance(v, str) or not _NAME_RE.match(v):
            problems.append(f"invalid vertex name {v!r}")
        if v in seen:
            problems.append(f"duplicate vertex {v!r}")
        seen.add(v)
    for src, dst, _ in g.pairs():
        missing = [x for x in (src, dst) if x not in seen]
        if missing:
            names = ", ".join(repr(x) for x in missing)
            problems.append(f"pair ({src!r}, {dst!r}) references undeclared vertex {names}")
    return problems


def require_valid(g: SignedGraph) -> None:
    problems = validate(g)
    if problems:
        raise InvalidGraphError(problems)


def out_degree(g: SignedGraph, v: str) -> ExtNat:
    """Number of edges with source ``v``; INF for an infinite emitter."""
    if v not in g.vertices:
        raise KeyError(f"unknown vertex {v!r}")
    return sum((m.total for (s, _), m in g.multiplicities.items() if s == v), 0)


def classify(g: SignedGraph) -> GraphProperties:
    require_valid(g)
    emits = {v: 0 for v in g.vertices}
    receives = {v: 0 for v in g.vertices}
    for (s, d), m in g.multiplicities.items():
        emits[s] += m.total
        receives[d] += m.total
    verts = g.vertices
    sinks = tuple(v for v in verts if emits[v] == 0)
    sources = tuple(v for v in verts if receives[v] == 0)
    infinite = tuple(v for v in verts if emits[v] == INF)
    finite = tuple(v for v in verts if emits[v] != INF)
    non_sinks = tuple(v for v in verts if emits[v] != 0)
    row_finite = not infinite
    return GraphProperties(
        sinks=sinks,
        sources=sources,
        infinite_emitters=infinite,
        finite_emitters=finite,
        non_sinks=non_sinks,
        row_finite=row_finite,
        correspondence=CorrespondenceProperties(
            left_action_compact=row_finite,
            left_action_injective=not sinks,
            module_full=not sources,
        ),
    )

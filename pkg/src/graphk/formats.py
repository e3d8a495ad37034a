"""Text format for signed graphs.

::

    # comments start with '#'
    vertices: v w
    edges: v -> w +inf
    edges: w -> v +2 -1
    edges: w -> w +1

``+N`` counts edges of sign +1 and ``-N`` edges of sign -1; ``N`` is a
natural number or ``inf``.  Omitted clauses count as zero and repeated
lines for the same pair add up.
"""

from __future__ import annotations

import re

from .graph_model import INF, SignedGraph, SignedMultiplicity

__all__ = ["GraphParseError", "parse_graph", "serialize_graph"]

_EDGE_RE = re.compile(r"^(?P<src>\S+)\s*->\s*(?P<dst>\S+)(?P<rest>.*)$")
_CLAUSE_RE = re.compile(r"([+-])(\d+|inf)$")
_NAME_RE = re.compile(r"^[A-Za-z0-9_]+$")


class GraphParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _count(tok: str) -> int | float:
    return INF if tok == "inf" else int(tok)


def parse_graph(text: str) -> SignedGraph:
    vertices: list[str] = []
    declared: dict[str, int] = {}
    acc: dict[tuple[str, str], SignedMultiplicity] = {}
    uses: list[tuple[int, str]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, sep, body = line.partition(":")
        keyword = keyword.strip()
        if not sep or keyword not in ("vertices", "edges"):
            raise GraphParseError(f"expected 'vertices:' or 'edges:', got {line!r}", lineno)

        if keyword == "vertices":
            names = body.split()
            if not names:
                raise GraphParseError("'vertices:' needs at least one name", lineno)
            for name in names:
                if not _NAME_RE.match(name):
                    raise GraphParseError(f"invalid vertex name {name!r}", lineno)
                if name in declared:
                    raise GraphParseError(
                        f"duplicate vertex {name!r} (first declared on line {declared[name]})", lineno
                    )
                declared[name] = lineno
                vertices.append(name)
            continue

        m = _EDGE_RE.match(body.strip())
        if not m:
            raise GraphParseError(f"expected '<src> -> <dst> [+N] [-N]', got {body.strip()!r}", lineno)
        src, dst = m.group("src"), m.group("dst")
        pos = neg = 0
        seen_signs = set()
        for clause in m.group("rest").split():
            c = _CLAUSE_RE.match(clause)
            if not c:
                raise GraphParseError(f"bad multiplicity {clause!r}; use +N, -N, +inf or -inf", lineno)
            sign, n = c.groups()
            if sign in seen_signs:
                raise GraphParseError(f"repeated '{sign}' clause", lineno)
            seen_signs.add(sign)
            if sign == "+":
                pos = _count(n)
            else:
                neg = _count(n)
        uses.append((lineno, src))
        uses.append((lineno, dst))
        key = (src, dst)
        acc[key] = acc.get(key, SignedMultiplicity()) + SignedMultiplicity(pos, neg)

    for lineno, name in uses:
        if name not in declared:
            raise GraphParseError(f"undeclared vertex {name!r}", lineno)
    return SignedGraph(vertices, acc)


def _fmt_count(x) -> str:
    return "inf" if x == INF else str(x)


def serialize_graph(g: SignedGraph) -> str:
    """Inverse of :func:`parse_graph` for valid graphs."""
    lines = []
    if g.vertices:
        lines.append("vertices: " + " ".join(g.vertices))
    for src, dst, m in g.pairs():
        clauses = []
        if m.pos:
            clauses.append("+" + _fmt_count(m.pos))
        if m.neg:
            clauses.append("-" + _fmt_count(m.neg))
        lines.append(f"edges: {src} -> {dst} " + " ".join(clauses))
    return "\n".join(lines) + "\n"

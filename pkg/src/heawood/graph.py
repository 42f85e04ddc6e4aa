"""Finite undirected multigraphs and the complete families used throughout.

Vertices are the dense integers ``0..n-1``; display labels travel alongside.
Loops are stored as ``(v, v)`` and parallel edges as repeated pairs, so a
graph can represent the intermediate multigraphs that appear before empire
collapse removes them.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from heawood.errors import HeawoodError

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Graph:
    """An immutable undirected multigraph on vertices ``0..order-1``.

    ``edges`` is kept sorted with the smaller endpoint first, which gives a
    canonical ordering for serialisation and comparison.
    """

    order: int
    edges: tuple[Edge, ...] = ()
    labels: tuple[str | None, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.order < 0:
            raise HeawoodError("vertex count must be non-negative")
        edges = []
        for e in self.edges:
            u, v = (int(x) for x in e)
            if not (0 <= u < self.order and 0 <= v < self.order):
                raise HeawoodError(f"edge {e!r} has an endpoint not in graph")
            edges.append(_norm(u, v))
        object.__setattr__(self, "edges", tuple(sorted(edges)))
        if self.labels is not None:
            if len(self.labels) != self.order:
                raise HeawoodError("one label per vertex required")
            object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def vertices(self) -> range:
        return range(self.order)

    @property
    def size(self) -> int:
        return len(self.edges)

    def label(self, v: int) -> str:
        if self.labels is not None and self.labels[v] is not None:
            return self.labels[v]
        return str(v)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        """Neighbour sets, ignoring loops and edge multiplicity."""
        nbrs: list[set[int]] = [set() for _ in range(self.order)]
        for u, v in self.edges:
            if u != v:
                nbrs[u].add(v)
                nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    def neighbours(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def _check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.order):
            raise HeawoodError("vertex not in graph")

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = [False] * self.order
        comps = []
        for s in range(self.order):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self.adjacency[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def subgraph_without_vertex(self, v: int) -> Graph:
        """Delete ``v`` and its edges; remaining vertices are renumbered densely."""
        self._check_vertex(v)
        remap = {u: (u if u < v else u - 1) for u in range(self.order) if u != v}
        edges = [(remap[a], remap[b]) for a, b in self.edges if v not in (a, b)]
        labels = None
        if self.labels is not None:
            labels = self.labels[:v] + self.labels[v + 1:]
        return Graph(self.order - 1, tuple(edges), labels)

    def without_edge_at(self, index: int) -> Graph:
        edges = self.edges[:index] + self.edges[index + 1:]
        return Graph(self.order, edges, self.labels)

    def with_edges(self, extra: Iterable[Edge]) -> Graph:
        return Graph(self.order, self.edges + tuple(extra), self.labels)

    # -- interchange -------------------------------------------------------

    def to_dict(self) -> dict:
        vertices = []
        for v in self.vertices:
            entry: dict = {"id": v}
            if self.labels is not None and self.labels[v] is not None:
                entry["label"] = self.labels[v]
            vertices.append(entry)
        return {"vertices": vertices, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_dict(cls, data: dict) -> Graph:
        try:
            raw = data["vertices"]
            ids = [int(entry["id"]) for entry in raw]
        except (KeyError, TypeError, ValueError) as exc:
            raise HeawoodError(f"malformed graph JSON: {exc}") from None
        if sorted(ids) != list(range(len(ids))):
            raise HeawoodError("vertex ids must be exactly 0..n-1")
        labels: list[str | None] = [None] * len(ids)
        for entry in raw:
            labels[int(entry["id"])] = entry.get("label")
        edges = tuple(tuple(e) for e in data.get("edges", []))
        if any(len(e) != 2 for e in edges):
            raise HeawoodError("edges must be vertex pairs")
        has_labels = any(lab is not None for lab in labels)
        return cls(len(ids), edges, tuple(labels) if has_labels else None)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_dot(self, name: str = "G", fill: Sequence[str] | None = None) -> str:
        lines = [f"graph {name} {{"]
        for v in self.vertices:
            attrs = [f'label="{self.label(v)}"']
            if fill is not None:
                attrs += ["style=filled", f'fillcolor="{fill[v]}"']
            lines.append(f"  {v} [{', '.join(attrs)}];")
        for u, v in self.edges:
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Path:
    """A walk given by its vertices; consecutive vertices share an edge."""

    vertex_sequence: tuple[int, ...]

    def __post_init__(self) -> None:
        seq = tuple(self.vertex_sequence)
        object.__setattr__(self, "vertex_sequence", seq)
        if not seq:
            raise HeawoodError("a path needs at least one vertex")
        edges = self.edge_sequence
        if len(set(edges)) != len(edges):
            raise HeawoodError("a path may not repeat an edge")

    @property
    def edge_sequence(self) -> tuple[Edge, ...]:
        seq = self.vertex_sequence
        return tuple(_norm(a, b) for a, b in zip(seq, seq[1:]))

    @property
    def start(self) -> int:
        return self.vertex_sequence[0]

    @property
    def end(self) -> int:
        return self.vertex_sequence[-1]

    @property
    def endpoints(self) -> tuple[int, int]:
        return self.start, self.end

    def __len__(self) -> int:
        return len(self.vertex_sequence)

    def __iter__(self):
        return iter(self.vertex_sequence)


def is_simple(g: Graph) -> bool:
    """True iff ``g`` has no loops and no repeated endpoint pair."""
    if any(u == v for u, v in g.edges):
        return False
    return len(set(g.edges)) == len(g.edges)


def degree(g: Graph, v: int) -> int:
    """Number of incident edge-ends at ``v``; a loop counts twice."""
    g._check_vertex(v)
    return sum((a == v) + (b == v) for a, b in g.edges)


def degree_sequence(g: Graph) -> list[int]:
    deg = [0] * g.order
    for u, v in g.edges:
        deg[u] += 1
        deg[v] += 1
    return deg


def edge_multiplicities(g: Graph) -> Counter:
    return Counter(g.edges)


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise HeawoodError("empty graph")
    edges = tuple((u, v) for u in range(n) for v in range(u + 1, n))
    return Graph(n, edges)


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with parts ``0..a-1`` and ``a..a+b-1``."""
    if a < 1 or b < 1:
        raise HeawoodError("both parts of a complete bipartite graph must be non-empty")
    edges = tuple((u, a + w) for u in range(a) for w in range(b))
    return Graph(a + b, edges)


def hamiltonian_decomposition(n: int) -> list[Path]:
    """Split K_{2n} into ``n`` edge-disjoint Hamiltonian paths.

    Walecki's zigzag on Z_{2n}: path ``k`` visits ``k, k+1, k-1, k+2, k-2, ...``
    and ends at ``k+n``. Each difference class appears once per path and the
    two paths meeting a class use complementary chords, so the paths are
    edge-disjoint and together cover every edge.
    """
    if n < 1:
        raise HeawoodError("decomposition needs n >= 1")
    size = 2 * n
    paths = []
    for k in range(n):
        seq = [k]
        for step in range(1, size):
            offset = (step + 1) // 2 if step % 2 else -(step // 2)
            seq.append((k + offset) % size)
        paths.append(Path(tuple(seq)))
    return paths

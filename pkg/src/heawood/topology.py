"""Orientable surfaces: Euler data, surface words and rotation systems.

A rotation system lists, for every vertex, its neighbours in counterclockwise
order. Faces are traced with the rule: from dart ``u -> v`` the next dart is
``v -> w`` where ``w`` follows ``u`` in the rotation at ``v``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from heawood.errors import HeawoodError
from heawood.graph import Graph, is_simple

Dart = tuple[int, int]


@dataclass(frozen=True)
class Surface:
    """Closed orientable surface of the given genus."""

    genus: int

    def __post_init__(self) -> None:
        if self.genus < 0:
            raise HeawoodError("genus must be non-negative")

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus


def euler_characteristic_from_counts(v: int, e: int, c: int) -> int:
    return v - e + c


def _genus_from_chi(chi: int) -> Surface:
    if chi > 2 or chi % 2:
        raise HeawoodError(f"Euler characteristic {chi} is not that of a closed orientable surface")
    return Surface((2 - chi) // 2)


# -- surface words ----------------------------------------------------------

Symbol = tuple[str, int]

_TOKEN = re.compile(r"([A-Za-z0-9_]+)('|\^-1|\^\{-1\})?$")
_COMPACT = re.compile(r"([A-Za-z])('|\^-1|\^\{-1\})?")


@dataclass(frozen=True)
class SurfaceWord:
    """Signed edge labels read clockwise around a polygon.

    Only orientable words are accepted: every label occurs exactly twice,
    once plain and once inverted.
    """

    symbols: tuple[Symbol, ...]

    def __post_init__(self) -> None:
        syms = tuple((str(lab), int(sign)) for lab, sign in self.symbols)
        object.__setattr__(self, "symbols", syms)
        if len(syms) < 2:
            raise HeawoodError("malformed word: need at least one label pair")
        seen: dict[str, list[int]] = {}
        for lab, sign in syms:
            if sign not in (1, -1):
                raise HeawoodError(f"malformed word: bad sign {sign}")
            seen.setdefault(lab, []).append(sign)
        for lab, signs in seen.items():
            if len(signs) != 2:
                raise HeawoodError(f"malformed word: label {lab} occurs {len(signs)} times")
            if signs[0] == signs[1]:
                raise HeawoodError(f"non-orientable word: label {lab} repeats its direction")

    @classmethod
    def parse(cls, text: str) -> SurfaceWord:
        """Read ``A B A' B'``; ``A^-1`` is accepted for ``A'``.

        Without whitespace every letter is its own label, so ``ABA'B'`` also
        parses.
        """
        text = text.strip()
        symbols = []
        if any(ch.isspace() for ch in text):
            for tok in text.split():
                m = _TOKEN.match(tok)
                if not m:
                    raise HeawoodError(f"malformed word: bad token {tok!r}")
                symbols.append((m.group(1), -1 if m.group(2) else 1))
        else:
            pos = 0
            while pos < len(text):
                m = _COMPACT.match(text, pos)
                if not m:
                    raise HeawoodError(f"malformed word: cannot parse {text[pos:]!r}")
                symbols.append((m.group(1), -1 if m.group(2) else 1))
                pos = m.end()
        return cls(tuple(symbols))

    def __str__(self) -> str:
        return " ".join(lab if sign == 1 else lab + "'" for lab, sign in self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def positions(self, label: str) -> tuple[int, int]:
        """Indices of the plain and the inverted occurrence of ``label``."""
        plain = inverse = None
        for i, (lab, sign) in enumerate(self.symbols):
            if lab == label:
                if sign == 1:
                    plain = i
                else:
                    inverse = i
        if plain is None or inverse is None:
            raise HeawoodError(f"label {label!r} not in word")
        return plain, inverse


def word_genus(w: SurfaceWord) -> Surface:
    """Genus of the closed surface obtained by gluing the polygon's sides.

    Corner ``i`` is where side ``i`` starts. Gluing a plain side to its inverse
    identifies tail with tail and head with head; the classes of corners are
    the vertices of the quotient, which has one face and ``len(w)/2`` edges.
    """
    n = len(w)
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    done = set()
    for lab, _ in w.symbols:
        if lab in done:
            continue
        done.add(lab)
        i, j = w.positions(lab)
        for a, b in ((i, (j + 1) % n), ((i + 1) % n, j)):
            parent[find(a)] = find(b)
    vertices = len({find(x) for x in range(n)})
    return _genus_from_chi(euler_characteristic_from_counts(vertices, n // 2, 1))


def _rewrite_bounds(w: SurfaceWord, x: str) -> tuple[int, int]:
    i, j = w.positions(x)
    if i > j:
        raise HeawoodError(f"label {x!r} must occur plain before its inverse")
    return i, j


def rewrite_right_to_left(w: SurfaceWord, x: str, split: int) -> SurfaceWord:
    """``a X b c X' d  ->  a X c b X' d`` where ``b`` is the first ``split``
    symbols after ``X``."""
    i, j = _rewrite_bounds(w, x)
    inner = w.symbols[i + 1:j]
    if not 0 <= split <= len(inner):
        raise HeawoodError(f"split {split} outside 0..{len(inner)}")
    body = inner[split:] + inner[:split]
    return SurfaceWord(w.symbols[:i + 1] + body + w.symbols[j:])


def rewrite_left_to_right(w: SurfaceWord, x: str, split: int) -> SurfaceWord:
    """``a b X c X' d  ->  a X c X' b d`` where ``b`` is the ``split`` symbols
    immediately before ``X``."""
    i, j = _rewrite_bounds(w, x)
    if not 0 <= split <= i:
        raise HeawoodError(f"split {split} outside 0..{i}")
    s = w.symbols
    return SurfaceWord(s[:i - split] + s[i:j + 1] + s[i - split:i] + s[j + 1:])


# -- rotation systems -------------------------------------------------------


@dataclass(frozen=True)
class RotationSystem:
    """A simple graph with a cyclic order of neighbours at every vertex."""

    graph: Graph
    rotation: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        g = self.graph
        if not is_simple(g):
            raise HeawoodError("rotation systems require a simple graph")
        rot = tuple(tuple(int(x) for x in r) for r in self.rotation)
        object.__setattr__(self, "rotation", rot)
        if len(rot) != g.order:
            raise HeawoodError("one rotation per vertex required")
        for v, r in enumerate(rot):
            if len(r) != len(set(r)) or set(r) != g.adjacency[v]:
                raise HeawoodError(f"rotation at vertex {v} is not a cyclic order of its neighbours")

    @classmethod
    def from_lists(cls, graph: Graph, rotation: Sequence[Sequence[int]]) -> RotationSystem:
        return cls(graph, tuple(tuple(r) for r in rotation))

    def successor(self) -> dict[Dart, int]:
        """Map ``(v, u) -> w`` where ``w`` follows ``u`` around ``v``."""
        succ = {}
        for v, r in enumerate(self.rotation):
            for a, b in zip(r, r[1:] + r[:1]):
                succ[(v, a)] = b
        return succ

    def to_dict(self) -> dict:
        return {
            "graph": self.graph.to_dict(),
            "rotation": {str(v): list(r) for v, r in enumerate(self.rotation)},
        }

    @classmethod
    def from_dict(cls, data: dict) -> RotationSystem:
        try:
            graph = Graph.from_dict(data["graph"])
            rot = data["rotation"]
            rotation = tuple(tuple(rot.get(str(v), ())) for v in graph.vertices)
        except (KeyError, AttributeError, TypeError) as exc:
            raise HeawoodError(f"malformed rotation JSON: {exc}") from None
        return cls(graph, rotation)


def _trace(rs: RotationSystem) -> list[tuple[Dart, ...]]:
    succ = rs.successor()
    seen: set[Dart] = set()
    faces = []
    for v, r in enumerate(rs.rotation):
        for u in r:
            d = (v, u)
            if d in seen:
                continue
            walk = []
            while d not in seen:
                seen.add(d)
                walk.append(d)
                a, b = d
                d = (b, succ[(b, a)])
            faces.append(tuple(walk))
    return faces


def trace_faces(rs: RotationSystem) -> list[tuple[Dart, ...]]:
    """Partition the darts into face boundary walks.

    Faces are listed in order of their first dart, scanning vertices in
    order and each rotation from its first entry.
    """
    if not rs.graph.is_connected():
        raise HeawoodError("graph not connected")
    return _trace(rs)


def face_vertices(face: Sequence[Dart]) -> tuple[int, ...]:
    return tuple(d[0] for d in face)


def genus_of(rs: RotationSystem) -> Surface:
    g = rs.graph
    faces = trace_faces(rs)
    # a lone vertex sits on the sphere with a single face
    f = len(faces) if g.size else 1
    return _genus_from_chi(euler_characteristic_from_counts(g.order, g.size, f))


def component_genera(rs: RotationSystem) -> list[int]:
    """Genus of each connected component's embedding, by smallest vertex."""
    faces = _trace(rs)
    owner = {}
    comps = rs.graph.components()
    for idx, comp in enumerate(comps):
        for v in comp:
            owner[v] = idx
    counts = [[len(c), 0, 0] for c in comps]
    for u, v in rs.graph.edges:
        counts[owner[u]][1] += 1
    for face in faces:
        counts[owner[face[0][0]]][2] += 1
    genera = []
    for v, e, f in counts:
        genera.append(_genus_from_chi(v - e + (f if e else 1)).genus)
    return genera


def dual_graph(rs: RotationSystem) -> Graph:
    """One vertex per face; faces sharing an edge are joined exactly once."""
    faces = trace_faces(rs)
    face_of = {}
    for idx, face in enumerate(faces):
        for d in face:
            face_of[d] = idx
    pairs = set()
    for u, v in rs.graph.edges:
        a, b = face_of[(u, v)], face_of[(v, u)]
        if a != b:
            pairs.add((min(a, b), max(a, b)))
    labels = tuple(f"f{i}" for i in range(len(faces)))
    return Graph(len(faces), tuple(sorted(pairs)), labels)


def min_genus_lower_bound(g: Graph) -> int:
    """Least genus not ruled out by Euler's formula with 3C <= 2E.

    Every face of a simple graph with at least three vertices has at least
    three sides, so ``V - E + 2E/3 >= 2 - 2g``.
    """
    if not is_simple(g):
        raise HeawoodError("bound requires simple graph")
    if not g.is_connected():
        raise HeawoodError("bound requires a connected graph")
    if g.order < 3:
        return 0
    return max(0, math.ceil((g.size - 3 * g.order + 6) / 6))


# -- building embeddings ----------------------------------------------------


def rotation_from_faces(graph: Graph, faces: Iterable[Sequence[int]]) -> RotationSystem:
    """Recover the rotation system of a closed surface from its face cycles.

    Faces may be given in either direction; they are reoriented so that
    every edge is traversed once each way, which fails for non-orientable
    or inconsistent input.
    """
    faces = [tuple(f) for f in faces]
    by_edge: dict[frozenset, list[int]] = {}
    for idx, f in enumerate(faces):
        for a, b in zip(f, f[1:] + f[:1]):
            by_edge.setdefault(frozenset((a, b)), []).append(idx)
    oriented: dict[int, tuple[int, ...]] = {}
    for root in range(len(faces)):
        if root in oriented:
            continue
        oriented[root] = faces[root]
        stack = [root]
        while stack:
            idx = stack.pop()
            f = oriented[idx]
            for a, b in zip(f, f[1:] + f[:1]):
                for other in by_edge[frozenset((a, b))]:
                    if other in oriented:
                        continue
                    h = faces[other]
                    darts = set(zip(h, h[1:] + h[:1]))
                    oriented[other] = h if (b, a) in darts else h[::-1]
                    stack.append(other)
    succ: dict[Dart, int] = {}
    for f in oriented.values():
        n = len(f)
        for i in range(n):
            a, w, b = f[i - 1], f[i], f[(i + 1) % n]
            if (w, a) in succ:
                raise HeawoodError("faces do not form an orientable closed surface")
            succ[(w, a)] = b
    rotation = []
    for v in graph.vertices:
        nbrs = graph.adjacency[v]
        if not nbrs:
            rotation.append(())
            continue
        start = min(nbrs)
        cyc = [start]
        while True:
            nxt = succ.get((v, cyc[-1]))
            if nxt is None:
                raise HeawoodError(f"faces leave a gap at vertex {v}")
            if nxt == start:
                break
            cyc.append(nxt)
        if len(cyc) != len(nbrs):
            raise HeawoodError(f"vertex {v} is pinched: its corners form several cycles")
        rotation.append(tuple(cyc))
    return RotationSystem(graph, tuple(rotation))


class RotationBuilder:
    """Mutable rotation system edited only by genus-preserving moves.

    An edge is either drawn inside one face (both ends on that face) or
    bridges two different components; neither changes the genus of the
    component that results.
    """

    def __init__(self, order: int = 0, labels: Sequence[str | None] | None = None) -> None:
        self.rot: list[list[int]] = [[] for _ in range(order)]
        self.labels: list[str | None] = list(labels) if labels is not None else [None] * order

    @classmethod
    def from_rotation(cls, rs: RotationSystem) -> RotationBuilder:
        b = cls(rs.graph.order, rs.graph.labels)
        b.rot = [list(r) for r in rs.rotation]
        return b

    def absorb(self, rs: RotationSystem) -> int:
        """Add a disjoint copy of ``rs``; returns the offset of its vertices."""
        off = len(self.rot)
        self.rot.extend([x + off for x in r] for r in rs.rotation)
        labels = rs.graph.labels or (None,) * rs.graph.order
        self.labels.extend(labels)
        return off

    def add_vertex(self, label: str | None = None) -> int:
        self.rot.append([])
        self.labels.append(label)
        return len(self.rot) - 1

    def face_from(self, dart: Dart) -> list[Dart]:
        walk = []
        d = dart
        while True:
            walk.append(d)
            a, b = d
            r = self.rot[b]
            d = (b, r[(r.index(a) + 1) % len(r)])
            if d == dart:
                return walk

    def corner(self, dart: Dart, v: int) -> Dart:
        """First dart of the face through ``dart`` that arrives at ``v``."""
        for d in self.face_from(dart):
            if d[1] == v:
                return d
        raise HeawoodError(f"vertex {v} is not on the face through {dart}")

    def _insert(self, v: int, after: int | None, new: int) -> None:
        r = self.rot[v]
        if new in r:
            raise HeawoodError(f"edge {v}-{new} already present")
        if after is None:
            if r:
                raise HeawoodError(f"vertex {v} needs a corner")
            r.append(new)
        else:
            r.insert(r.index(after) + 1, new)

    def add_edge_in_face(self, dart: Dart, u: int, v: int) -> Dart:
        """Draw ``u-v`` inside the face through ``dart``; returns dart ``u -> v``.

        A vertex with no edges yet may be either end; it is placed in the face.
        """
        cu = self.corner(dart, u)[0] if self.rot[u] else None
        cv = self.corner(dart, v)[0] if self.rot[v] else None
        self._insert(u, cu, v)
        self._insert(v, cv, u)
        return (u, v)

    def bridge(self, u_dart: Dart | None, u: int, v_dart: Dart | None, v: int) -> Dart:
        """Join two different components through the given faces."""
        cu = self.corner(u_dart, u)[0] if u_dart is not None else None
        cv = self.corner(v_dart, v)[0] if v_dart is not None else None
        self._insert(u, cu, v)
        self._insert(v, cv, u)
        return (u, v)

    def any_dart_into(self, v: int) -> Dart | None:
        r = self.rot[v]
        return (r[0], v) if r else None

    def build(self) -> RotationSystem:
        edges = sorted({(min(u, v), max(u, v)) for u, r in enumerate(self.rot) for v in r})
        labels = tuple(self.labels) if any(lab is not None for lab in self.labels) else None
        graph = Graph(len(self.rot), tuple(edges), labels)
        return RotationSystem(graph, tuple(tuple(r) for r in self.rot))

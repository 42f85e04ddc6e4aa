"""Planar complete m-pire graphs J(6m, m) built from Hamiltonian paths.

Three copies A, B, C of K_{2m} are split into Hamiltonian paths and every
path is drawn as its own copy of the vertices; copies of the same original
vertex form an empire. Each construction carries its own planar rotation
system, assembled from explicit face lists and genus-preserving edge
insertions, so no planarity test is needed afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from heawood.empire import EmpireGraph
from heawood.errors import HeawoodError
from heawood.graph import Graph, Path, hamiltonian_decomposition
from heawood.topology import RotationBuilder, RotationSystem, component_genera, rotation_from_faces

FAMILIES = ("A", "B", "C")


@dataclass(frozen=True)
class WesselGraph:
    """An empire graph together with a rotation system on the same base graph."""

    empire_graph: EmpireGraph
    rotation: RotationSystem

    def to_dict(self) -> dict:
        return {
            "empire_graph": self.empire_graph.to_dict(),
            "rotation_system": self.rotation.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> WesselGraph:
        eg = EmpireGraph.from_dict(data["empire_graph"])
        return cls(eg, RotationSystem.from_dict(data["rotation_system"]))


class _Layout:
    """Allocates vertex copies and records labels, empires and faces."""

    def __init__(self) -> None:
        self.labels: list[str] = []
        self.empires: list[str] = []
        self.edges: set[tuple[int, int]] = set()
        self.faces: list[tuple[int, ...]] = []

    def copy_path(self, family: str, path: Path, index: int) -> list[int]:
        ids = []
        for v in path:
            ids.append(len(self.labels))
            self.labels.append(f"{family}{v}.{index}")
            self.empires.append(f"{family}{v}")
        for u, v in zip(ids, ids[1:]):
            self.edges.add((u, v))
        return ids

    def join(self, apex: int, targets: Sequence[int]) -> None:
        for t in targets:
            self.edges.add((min(apex, t), max(apex, t)))

    def graph(self) -> Graph:
        return Graph(len(self.labels), tuple(sorted(self.edges)), tuple(self.labels))

    def rotation(self) -> RotationSystem:
        return rotation_from_faces(self.graph(), self.faces)

    def empire_graph(self, base: Graph) -> EmpireGraph:
        return EmpireGraph(base, tuple(self.empires))


def _diamond(lay: _Layout, path: list[int], top: int, bottom: int) -> None:
    """Join both apexes to every vertex of ``path``; record the triangles."""
    lay.join(top, path)
    lay.join(bottom, path)
    for x, y in zip(path, path[1:]):
        lay.faces.append((top, x, y))
        lay.faces.append((bottom, x, y))


def _block(lay: _Layout, copies: dict[str, list[int]]) -> None:
    """The six-path construction on already allocated path copies.

    ``copies`` maps ``a, a2, b, b2, c, c2`` to vertex lists. The first ends
    of the two A paths are joined to all of ``b``, the last ends to all of
    ``b2``; likewise B to C and C to A. The six joined regions meet at path
    endpoints in the pattern of an octahedron, whose eight faces become
    triangles, so the block is a triangulation of the sphere.
    """
    nxt = {"a": "b", "b": "c", "c": "a"}
    for fam in "abc":
        tgt = nxt[fam]
        p, q = copies[fam], copies[fam + "2"]
        _diamond(lay, copies[tgt], p[0], q[0])
        _diamond(lay, copies[tgt + "2"], p[-1], q[-1])

    def end(path: str, towards: str) -> int:
        ids = copies[path]
        return ids[0] if len(towards) == 1 else ids[-1]

    for x in ("a", "a2"):
        for y in ("b", "b2"):
            for z in ("c", "c2"):
                lay.faces.append((end(x, y), end(y, z), end(z, x)))


def _check_family(paths: Sequence[Path]) -> None:
    seen: set = set()
    for p in paths:
        shared = seen & set(p.edge_sequence)
        if shared:
            raise HeawoodError(f"paths of one family share edge {min(shared)}")
        seen |= set(p.edge_sequence)


def six_path_block(
    a: Path, a2: Path, b: Path, b2: Path, c: Path, c2: Path, indices: Sequence[int] = (0, 1)
) -> WesselGraph:
    """Wessel's six-path construction as a standalone planar empire graph.

    Same-family paths must be edge-disjoint, as paths from one Hamiltonian
    decomposition are. ``indices`` only affects the vertex labels.
    """
    for pair in ((a, a2), (b, b2), (c, c2)):
        _check_family(pair)
    lay = _Layout()
    copies = {}
    for fam, (p, q) in zip(FAMILIES, ((a, a2), (b, b2), (c, c2))):
        key = fam.lower()
        copies[key] = lay.copy_path(fam, p, indices[0])
        copies[key + "2"] = lay.copy_path(fam, q, indices[1])
    _block(lay, copies)
    rs = lay.rotation()
    return WesselGraph(lay.empire_graph(rs.graph), rs)


def _decompositions(m: int) -> list[list[Path]]:
    return [hamiltonian_decomposition(m) for _ in FAMILIES]


def _add_blocks(lay: _Layout, decs: list[list[Path]], count: int) -> list[dict[str, list[int]]]:
    blocks = []
    for k in range(count):
        copies = {}
        for fam, dec in zip(FAMILIES, decs):
            key = fam.lower()
            copies[key] = lay.copy_path(fam, dec[2 * k], 2 * k)
            copies[key + "2"] = lay.copy_path(fam, dec[2 * k + 1], 2 * k + 1)
        _block(lay, copies)
        blocks.append(copies)
    return blocks


def build_even(m: int, connect: bool = True) -> WesselGraph:
    """Planar J(6m, m) for even ``m``: ``m/2`` disjoint six-path blocks."""
    if m < 2 or m % 2:
        raise HeawoodError("build_even needs an even m >= 2")
    lay = _Layout()
    _add_blocks(lay, _decompositions(m), m // 2)
    rs = lay.rotation()
    result = WesselGraph(lay.empire_graph(rs.graph), rs)
    return connectify(result) if connect else result


def _face_dart(builder: RotationBuilder, u: int, v: int, witness: int) -> tuple[int, int]:
    """The dart along edge ``u-v`` whose face also passes through ``witness``."""
    for d in ((u, v), (v, u)):
        if any(x == witness for x, _ in builder.face_from(d)):
            return d
    raise HeawoodError(f"no face on edge {u}-{v} reaches vertex {witness}")


def _fan(builder: RotationBuilder, apex: int, targets: Sequence[int], face_dart: tuple[int, int]) -> None:
    """Bridge ``apex`` into the face through ``face_dart`` and join it to all
    ``targets``, which must lie on that face.

    Targets are joined in the order the face meets them, so each new edge
    cuts off a region that holds none of the targets still to come.
    """
    first = targets[0]
    start = builder.bridge(builder.any_dart_into(apex), apex, face_dart, first)
    wanted = set(targets[1:])
    order = []
    for _, w in builder.face_from(start):
        if w in wanted and w not in order:
            order.append(w)
    if len(order) != len(wanted):
        raise HeawoodError("fan targets are not all on one face")
    prev = start
    for t in order:
        prev = builder.add_edge_in_face(prev, apex, t)


def build_odd(m: int, connect: bool = True) -> WesselGraph:
    """Planar J(6m, m) for odd ``m >= 5``.

    ``m - 1`` paths per family go into ordinary blocks. The last path of
    each family forms a gadget: both ends of the A path see all of the B
    path, the first end of B sees all of C and the first end of C sees all
    of A. The second end of B is represented by its copy in block 0, drawn
    in a face of the gadget that contains the whole C path, and the second
    end of C by its copy in block 1, drawn in a face containing the whole
    A path.
    """
    if m < 5 or m % 2 == 0:
        raise HeawoodError("build_odd needs an odd m >= 5")
    decs = _decompositions(m)
    lay = _Layout()
    blocks = _add_blocks(lay, decs, (m - 1) // 2)
    last = m - 1
    a = lay.copy_path("A", decs[0][last], last)
    b = lay.copy_path("B", decs[1][last], last)
    c = lay.copy_path("C", decs[2][last], last)
    n = len(a)

    # both ends of A around the B path; the A path then splits the outer quad
    _diamond(lay, b, a[0], a[-1])
    lay.faces.append(tuple(a) + (b[-1],))
    # first end of C joined to all of A inside the other half
    lay.join(c[0], a)
    for x, y in zip(a, a[1:]):
        lay.faces.append((c[0], x, y))
    # first end of B joined to all of C, the C path hugging edge b0-c0
    lay.join(b[0], c)
    lay.faces.append((a[0], b[0], c[0]))
    for x, y in zip(c, c[1:]):
        lay.faces.append((b[0], x, y))
    lay.faces.append((b[0], a[-1]) + tuple(c))

    builder = RotationBuilder.from_rotation(lay.rotation())

    b_end = decs[1][last].end
    c_end = decs[2][last].end
    b_copy = _copy_of(blocks[0]["b"], decs[1][0], b_end)
    c_copy = _copy_of(blocks[1]["c"], decs[2][2], c_end)

    _fan(builder, b_copy, c, _face_dart(builder, c[0], c[1], a[-1]))
    _fan(builder, c_copy, a, _face_dart(builder, a[0], a[1], b[-1]))
    assert n == 2 * m

    rs = builder.build()
    result = WesselGraph(EmpireGraph(rs.graph, tuple(lay.empires)), rs)
    return connectify(result) if connect else result


def _copy_of(ids: list[int], path: Path, original: int) -> int:
    return ids[path.vertex_sequence.index(original)]


def build(m: int, connect: bool = True) -> WesselGraph:
    """Dispatch to the even or odd construction."""
    if m % 2 == 0:
        return build_even(m, connect)
    return build_odd(m, connect)


def connectify(wg: WesselGraph) -> WesselGraph:
    """Join components until connected, keeping the embedding planar.

    Consecutive components (ordered by smallest vertex) are bridged at
    their smallest vertices, entering each through the face before the
    first neighbour in its rotation.
    """
    rs = wg.rotation
    if any(gen != 0 for gen in component_genera(rs)):
        raise HeawoodError("connectify needs every component embedded in the sphere")
    comps = rs.graph.components()
    if len(comps) <= 1:
        return wg
    builder = RotationBuilder.from_rotation(rs)
    for left, right in zip(comps, comps[1:]):
        u, v = left[0], right[0]
        builder.bridge(builder.any_dart_into(u), u, builder.any_dart_into(v), v)
    out = builder.build()
    return WesselGraph(EmpireGraph(out.graph, wg.empire_graph.empires), out)

"""Empire graphs, their collapse, and checks for complete m-pire graphs."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Sequence

from heawood.errors import HeawoodError
from heawood.graph import Graph, degree_sequence, is_simple


@dataclass(frozen=True)
class EmpireGraph:
    """A graph whose vertices are partitioned into named empires.

    ``empires[v]`` is the empire of vertex ``v``. Empire ids are listed in
    order of first appearance. Simplicity and connectivity are reported by
    the verifiers rather than enforced here, so that faulty inputs and the
    disjoint unions some constructions produce can still be examined.
    """

    base: Graph
    empires: tuple[str, ...]
    warnings: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        emp = tuple(str(e) for e in self.empires)
        object.__setattr__(self, "empires", emp)
        if len(emp) != self.base.order:
            raise HeawoodError("every vertex needs exactly one empire")

    @property
    def empire_ids(self) -> tuple[str, ...]:
        return tuple(dict.fromkeys(self.empires))

    def members(self) -> dict[str, list[int]]:
        out: dict[str, list[int]] = {e: [] for e in self.empire_ids}
        for v, e in enumerate(self.empires):
            out[e].append(v)
        return out

    def empire_sizes(self) -> dict[str, int]:
        return {e: len(vs) for e, vs in self.members().items()}

    def to_dict(self) -> dict:
        data = self.base.to_dict()
        data["empires"] = {str(v): e for v, e in enumerate(self.empires)}
        return data

    @classmethod
    def from_dict(cls, data: dict) -> EmpireGraph:
        if "empire_graph" in data:
            data = data["empire_graph"]
        base = Graph.from_dict(data)
        raw = data.get("empires")
        if raw is None:
            return singleton_empires(base)
        try:
            empires = tuple(str(raw[str(v)]) for v in base.vertices)
        except KeyError as exc:
            raise HeawoodError(f"vertex {exc.args[0]} has no empire") from None
        return cls(base, empires)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def singleton_empires(g: Graph) -> EmpireGraph:
    """Every vertex its own empire, named by its label."""
    return EmpireGraph(g, tuple(g.label(v) for v in g.vertices))


@dataclass(frozen=True)
class CollapsedEmpireGraph:
    graph: Graph
    origin: tuple[str, ...]


def is_m_pire(eg: EmpireGraph, m: int) -> bool:
    return max(eg.empire_sizes().values(), default=0) <= m


def collapse(eg: EmpireGraph) -> CollapsedEmpireGraph:
    """Identify each empire to one vertex, then drop loops and repeated edges."""
    ids = eg.empire_ids
    index = {e: i for i, e in enumerate(ids)}
    pairs = set()
    for u, v in eg.base.edges:
        a, b = index[eg.empires[u]], index[eg.empires[v]]
        if a != b:
            pairs.add((min(a, b), max(a, b)))
    graph = Graph(len(ids), tuple(sorted(pairs)), ids)
    assert is_simple(graph)
    return CollapsedEmpireGraph(graph, ids)


def _cross_pair_counts(eg: EmpireGraph) -> Counter:
    counts: Counter = Counter()
    for u, v in eg.base.edges:
        a, b = eg.empires[u], eg.empires[v]
        if a != b:
            counts[frozenset((a, b))] += 1
    return counts


@dataclass
class JnmReport:
    """Outcome of checking the four sufficient conditions for J(n, m).

    With ``uniform`` set, also the two extra conditions of the uniform
    variant: exactly ``m`` vertices per empire and exactly one adjacent
    pair of vertices between any two empires.
    """

    n: int
    m: int
    simple: bool
    empire_count: int
    empire_count_ok: bool
    max_empire_size: int
    size_ok: bool
    all_pairs_adjacent: bool
    missing_pair: tuple[str, str] | None
    uniform: bool = False
    exact_size_violations: list[tuple[str, int]] = field(default_factory=list)
    repeated_pairs: list[tuple[str, str, int]] = field(default_factory=list)
    vertex_count: int = 0
    edge_count: int = 0

    @property
    def passed(self) -> bool:
        ok = self.simple and self.empire_count_ok and self.size_ok and self.all_pairs_adjacent
        if self.uniform:
            ok = ok and not self.exact_size_violations and not self.repeated_pairs
        return ok

    def conditions(self) -> dict[str, bool]:
        out = {
            "simple": self.simple,
            "empire_count": self.empire_count_ok,
            "empire_size": self.size_ok,
            "pairwise_adjacent": self.all_pairs_adjacent,
        }
        if self.uniform:
            out["exact_size"] = not self.exact_size_violations
            out["unique_adjacency"] = not self.repeated_pairs
        return out

    def to_dict(self) -> dict:
        data = asdict(self)
        data["passed"] = self.passed
        data["conditions"] = self.conditions()
        return data


def verify_jnm(eg: EmpireGraph, n: int, m: int) -> JnmReport:
    sizes = eg.empire_sizes()
    counts = _cross_pair_counts(eg)
    ids = eg.empire_ids
    missing = None
    for a, b in combinations(ids, 2):
        if frozenset((a, b)) not in counts:
            missing = (a, b)
            break
    biggest = max(sizes.values(), default=0)
    return JnmReport(
        n=n,
        m=m,
        simple=is_simple(eg.base),
        empire_count=len(ids),
        empire_count_ok=len(ids) == n,
        max_empire_size=biggest,
        size_ok=biggest <= m,
        all_pairs_adjacent=missing is None,
        missing_pair=missing,
        vertex_count=eg.base.order,
        edge_count=eg.base.size,
    )


def verify_uniform_jnm(eg: EmpireGraph, n: int, m: int) -> JnmReport:
    report = verify_jnm(eg, n, m)
    report.uniform = True
    report.exact_size_violations = [(e, s) for e, s in eg.empire_sizes().items() if s != m]
    counts = _cross_pair_counts(eg)
    for a, b in combinations(eg.empire_ids, 2):
        c = counts.get(frozenset((a, b)), 0)
        if c > 1:
            report.repeated_pairs.append((a, b, c))
    return report


def empire_degree_bound_check(eg: EmpireGraph, m: int) -> bool:
    """Whether the collapsed graph obeys the degree bound of spherical m-pire maps.

    True iff some collapsed vertex has degree at most ``6m - 1`` and the
    average collapsed degree is below ``6m``.
    """
    g = collapse(eg).graph
    degs = degree_sequence(g)
    if not degs:
        return True
    return min(degs) <= 6 * m - 1 and sum(degs) < 6 * m * len(degs)


# -- the J(14, 2) graph on the triple torus ---------------------------------

# Rows exactly as printed: vertex, then its listed neighbours.
J14_2_TABLE: tuple[tuple[str, str], ...] = (
    ("0", "1,2,3,4,5,6,7,8,9,10,11,12"),
    ("0'", "13'"),
    ("1", "0,2,4,8',9',10',11"),
    ("1'", "3',5,6,7,12',13"),
    ("2", "0,1,3,7',9',10',12"),
    ("2'", "4',5,6,8,11',13"),
    ("3", "0,2,4,6,10',11',12'"),
    ("3'", "1',5',7,8,9,13"),
    ("4", "0,1,3,5,9',11',12'"),
    ("4'", "2',6',7,8,10,13"),
    ("5", "0,1',2',4,6,8,12'"),
    ("5'", "3',7',9,10,11,13"),
    ("6", "0,1',2',3,5,7,11'"),
    ("6'", "4',8',9,10,12,13"),
    ("7", "0,1',3',4',6,8,10"),
    ("7'", "2,5',9',11,12,13"),
    ("8", "0,2',3',5,7,9"),
    ("8'", "1,4',6',10',11,12,13"),
    ("9", "0,3',5',6',8,10,12"),
    ("9'", "1,2,4,7',11',13"),
    ("10", "0,4',5',6',7,9,11"),
    ("10'", "1,2,3,8',12',13"),
    ("11", "0,1,5',7',8',10,12"),
    ("11'", "2',3,4,6,9',13"),
    ("12", "0,2,5,6',7',8',9,11"),
    ("12'", "1',3,4,10',13"),
    ("13", "0,1,2,3,4,5,6,7,8,9,10,11,12"),
)


def _empire_of(name: str) -> str:
    return name.rstrip("'")


def reconcile_table(rows: Sequence[tuple[str, Sequence[str]]]) -> tuple[dict[str, set[str]], list[str]]:
    """Turn a printed adjacency table into a symmetric adjacency relation.

    Entries naming a vertex that does not exist, or that do not list the
    row back, are redirected to the other vertex of the same empire when
    that one does list the row (the usual slip of writing ``x`` for
    ``x'``). Whatever remains one-sided is symmetrised. Every change is
    reported in the returned warning list.
    """
    adj = {v: list(nbrs) for v, nbrs in rows}
    names = list(adj)
    mates: dict[str, list[str]] = {}
    for v in names:
        mates.setdefault(_empire_of(v), []).append(v)
    warnings = []

    for v in names:
        fixed = []
        for w in adj[v]:
            if w not in adj:
                group = mates.get(_empire_of(w), [])
                if len(group) != 1:
                    raise HeawoodError(f"row {v} lists unknown vertex {w}")
                warnings.append(f"{v}: unknown vertex {w} read as {group[0]}")
                w = group[0]
            fixed.append(w)
        adj[v] = fixed

    for v in names:
        fixed = []
        for w in adj[v]:
            if v not in adj[w]:
                alt = [x for x in mates[_empire_of(w)] if x != w and v in adj[x]]
                if len(alt) == 1:
                    warnings.append(f"{v}: entry {w} read as {alt[0]} (only {alt[0]} lists {v})")
                    w = alt[0]
            fixed.append(w)
        adj[v] = fixed

    sym: dict[str, set[str]] = {v: set() for v in names}
    for v in names:
        for w in adj[v]:
            if v not in adj[w]:
                warnings.append(f"{v}-{w} listed on one side only; kept")
            sym[v].add(w)
            sym[w].add(v)
    return sym, warnings


def empire_graph_from_table(rows: Sequence[tuple[str, Sequence[str]]]) -> EmpireGraph:
    """Build an empire graph from named rows; ``x`` and ``x'`` share an empire."""
    sym, warnings = reconcile_table(rows)
    names = [v for v, _ in rows]
    index = {v: i for i, v in enumerate(names)}
    edges = sorted({(min(index[v], index[w]), max(index[v], index[w])) for v in names for w in sym[v]})
    base = Graph(len(names), tuple(edges), tuple(names))
    return EmpireGraph(base, tuple(_empire_of(v) for v in names), tuple(warnings))


def builtin_j14_2() -> EmpireGraph:
    """The 27-vertex J(14, 2) graph that embeds on the triple torus."""
    rows = [(v, tuple(s.split(","))) for v, s in J14_2_TABLE]
    return empire_graph_from_table(rows)

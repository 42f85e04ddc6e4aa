"""Exact and constructive colourings of graphs and empire graphs."""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Callable, Hashable, Mapping, Sequence

from heawood.empire import EmpireGraph, collapse, is_m_pire
from heawood.errors import HeawoodError, SolverCapError
from heawood.graph import Graph, degree_sequence, is_simple

DEFAULT_SOLVER_CAP = 64
SOLVER_CAP_ENV = "HEAWOOD_SOLVER_CAP"


def solver_cap() -> int:
    raw = os.environ.get(SOLVER_CAP_ENV)
    if raw is None:
        return DEFAULT_SOLVER_CAP
    try:
        return int(raw)
    except ValueError:
        raise HeawoodError(f"{SOLVER_CAP_ENV} must be an integer, got {raw!r}") from None


@dataclass(frozen=True)
class Colouring:
    assignment: Mapping[Hashable, int]

    @property
    def colour_count(self) -> int:
        return len(set(self.assignment.values()))

    def is_proper(self, g: Graph, keys: Sequence[Hashable] | None = None) -> bool:
        """Check against ``g``; ``keys[v]`` names vertex ``v`` in the assignment."""
        key = (lambda v: v) if keys is None else keys.__getitem__
        for u, v in g.edges:
            if u == v or self.assignment[key(u)] == self.assignment[key(v)]:
                return False
        return all(key(v) in self.assignment for v in g.vertices)

    def to_dict(self) -> dict:
        return {
            "colours": {str(k): c for k, c in self.assignment.items()},
            "count": self.colour_count,
        }


# -- ordering policies for greedy colouring ---------------------------------

def _order_natural(g: Graph) -> list[int]:
    return list(g.vertices)


def _order_largest_first(g: Graph) -> list[int]:
    deg = degree_sequence(g)
    return sorted(g.vertices, key=lambda v: (-deg[v], v))


def _order_smallest_last(g: Graph) -> list[int]:
    alive = set(g.vertices)
    deg = {v: len(g.adjacency[v]) for v in alive}
    removed = []
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        alive.remove(v)
        removed.append(v)
        for w in g.adjacency[v]:
            if w in alive:
                deg[w] -= 1
    return removed[::-1]


ORDER_POLICIES: dict[str, Callable[[Graph], list[int]]] = {
    "natural": _order_natural,
    "largest_first": _order_largest_first,
    "smallest_last": _order_smallest_last,
}


def greedy_colouring(g: Graph, order: str | Sequence[int] = "natural") -> list[int]:
    """Smallest free colour for each vertex in turn."""
    seq = ORDER_POLICIES[order](g) if isinstance(order, str) else list(order)
    if sorted(seq) != list(g.vertices):
        raise HeawoodError("ordering must list every vertex once")
    colour = [-1] * g.order
    for v in seq:
        used = {colour[w] for w in g.adjacency[v]}
        c = 0
        while c in used:
            c += 1
        colour[v] = c
    return colour


def greedy_upper_bound(g: Graph, order: str | Sequence[int] = "natural") -> int:
    if not is_simple(g):
        raise HeawoodError("colouring requires a simple graph")
    colours = greedy_colouring(g, order)
    return max(colours) + 1 if colours else 0


def greedy_clique(g: Graph) -> list[int]:
    """A maximal clique grown from each start vertex; the largest is kept."""
    best: list[int] = []
    deg = degree_sequence(g)
    for s in g.vertices:
        clique = [s]
        cand = set(g.adjacency[s])
        while cand:
            v = max(cand, key=lambda x: (len(g.adjacency[x] & cand), deg[x], -x))
            clique.append(v)
            cand &= g.adjacency[v]
        if len(clique) > len(best):
            best = sorted(clique)
    return best


def _dsatur_greedy(g: Graph) -> list[int]:
    n = g.order
    colour = [-1] * n
    sat: list[set[int]] = [set() for _ in range(n)]
    for _ in range(n):
        v = max(
            (u for u in g.vertices if colour[u] < 0),
            key=lambda u: (len(sat[u]), len(g.adjacency[u]), -u),
        )
        c = 0
        while c in sat[v]:
            c += 1
        colour[v] = c
        for w in g.adjacency[v]:
            sat[w].add(c)
    return colour


def _exact(g: Graph) -> list[int]:
    n = g.order
    if n == 0:
        return []
    best = _dsatur_greedy(g)
    best_k = max(best) + 1
    clique = greedy_clique(g)
    if best_k == len(clique):
        return best

    adj = g.adjacency
    colour = [-1] * n
    # counts[v][c]: number of coloured neighbours of v with colour c
    counts = [dict() for _ in range(n)]
    for i, v in enumerate(clique):
        colour[v] = i
        for w in adj[v]:
            counts[w][i] = counts[w].get(i, 0) + 1
    lower = len(clique)

    def pick() -> int:
        return max(
            (u for u in range(n) if colour[u] < 0),
            key=lambda u: (len(counts[u]), sum(colour[w] < 0 for w in adj[u]), -u),
        )

    def search(coloured: int, used: int) -> bool:
        nonlocal best, best_k
        if coloured == n:
            best, best_k = colour.copy(), used
            return best_k == lower
        v = pick()
        c = -1
        while True:
            c += 1
            if c >= min(used + 1, best_k - 1):
                return False
            if c in counts[v]:
                continue
            colour[v] = c
            for w in adj[v]:
                counts[w][c] = counts[w].get(c, 0) + 1
            done = search(coloured + 1, max(used, c + 1))
            for w in adj[v]:
                k = counts[w][c] - 1
                if k:
                    counts[w][c] = k
                else:
                    del counts[w][c]
            colour[v] = -1
            if done:
                return True

    search(len(clique), len(clique))
    return best


def chromatic_number(g: Graph, cap: int | None = None) -> tuple[int, Colouring]:
    """Exact chromatic number with a proper witness colouring.

    DSATUR branch and bound seeded with a greedy clique; the clique is
    precoloured, which fixes the colour symmetry without losing optimality.
    """
    cap = solver_cap() if cap is None else cap
    if not is_simple(g):
        raise HeawoodError("colouring requires a simple graph")
    if g.order > cap:
        raise SolverCapError(f"instance too large for exact solver ({g.order} > {cap} vertices)")
    colours = _exact(g)
    witness = Colouring({v: c for v, c in enumerate(colours)})
    assert witness.is_proper(g)
    return witness.colour_count, witness


def empire_chromatic_number(eg: EmpireGraph, cap: int | None = None) -> tuple[int, Colouring]:
    col = collapse(eg)
    k, witness = chromatic_number(col.graph, cap)
    return k, Colouring({col.origin[v]: c for v, c in witness.assignment.items()})


def six_m_colouring(eg: EmpireGraph, m: int) -> Colouring:
    """Colour the empires with at most ``6m`` colours by degeneracy peeling.

    Repeatedly removes a collapsed vertex of degree at most ``6m - 1``
    (lowest id first), then puts them back in reverse, each taking the
    smallest colour unused by its neighbours.
    """
    if m < 1:
        raise HeawoodError("m must be positive")
    if not is_m_pire(eg, m):
        raise HeawoodError(f"input is not an {m}-pire graph")
    col = collapse(eg)
    g = col.graph
    alive = set(g.vertices)
    deg = {v: len(g.adjacency[v]) for v in alive}
    removed = []
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        if deg[v] > 6 * m - 1:
            raise HeawoodError("degree precondition failed (non-spherical input?)")
        alive.remove(v)
        removed.append(v)
        for w in g.adjacency[v]:
            if w in alive:
                deg[w] -= 1
    colour: dict[int, int] = {}
    for v in reversed(removed):
        used = {colour[w] for w in g.adjacency[v] if w in colour}
        c = 0
        while c in used:
            c += 1
        colour[v] = c
    return Colouring({col.origin[v]: c for v, c in sorted(colour.items())})


def is_critical(g: Graph, cap: int = 12) -> bool:
    """Whether deleting any single vertex or edge lowers the chromatic number."""
    if not is_simple(g):
        raise HeawoodError("criticality is defined for simple graphs")
    if g.order > cap:
        raise SolverCapError(f"instance too large for criticality check ({g.order} > {cap} vertices)")
    k, _ = chromatic_number(g)
    for v in g.vertices:
        if chromatic_number(g.subgraph_without_vertex(v))[0] >= k:
            return False
    for i in range(g.size):
        if chromatic_number(g.without_edge_at(i))[0] >= k:
            return False
    return True

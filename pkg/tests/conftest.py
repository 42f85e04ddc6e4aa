from __future__ import annotations

import pytest

from heawood.graph import Graph, complete_graph
from heawood.topology import RotationSystem, rotation_from_faces

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


def cube_rotation() -> RotationSystem:
    # bottom square 0-3, top square 4-7, i above i+4
    edges = [(0, 1), (1, 2), (2, 3), (0, 3), (4, 5), (5, 6), (6, 7), (4, 7),
             (0, 4), (1, 5), (2, 6), (3, 7)]
    faces = [(0, 1, 2, 3), (7, 6, 5, 4), (0, 4, 5, 1), (1, 5, 6, 2), (2, 6, 7, 3), (3, 7, 4, 0)]
    return rotation_from_faces(Graph(8, tuple(edges)), faces)


def k4_rotation() -> RotationSystem:
    faces = [(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)]
    return rotation_from_faces(complete_graph(4), faces)


def k7_torus_rotation() -> RotationSystem:
    steps = (1, 3, 2, 6, 4, 5)
    return RotationSystem.from_lists(complete_graph(7), [[(i + d) % 7 for d in steps] for i in range(7)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, tuple(outer + spokes + inner))


def crown(n: int) -> Graph:
    """K_{n,n} minus a perfect matching."""
    return Graph(2 * n, tuple((i, n + j) for i in range(n) for j in range(n) if i != j))


@pytest.fixture
def cube():
    return cube_rotation()


@pytest.fixture
def k4_planar():
    return k4_rotation()


@pytest.fixture
def k7_torus():
    return k7_torus_rotation()

import json

import pytest

from heawood.colouring import empire_chromatic_number, six_m_colouring
from heawood.empire import verify_jnm
from heawood.errors import HeawoodError
from heawood.graph import Path, hamiltonian_decomposition
from heawood.topology import component_genera, genus_of
from heawood.wessel import WesselGraph, build, build_even, build_odd, connectify, six_path_block


def check(wg: WesselGraph, m: int) -> None:
    eg = wg.empire_graph
    assert verify_jnm(eg, 6 * m, m).passed
    assert wg.rotation.graph == eg.base
    assert genus_of(wg.rotation).genus == 0
    assert empire_chromatic_number(eg)[0] == 6 * m
    assert six_m_colouring(eg, m).colour_count == 6 * m


@pytest.mark.parametrize("m", [2, 4, 6])
def test_even(m):
    check(build_even(m), m)


@pytest.mark.parametrize("m", [5, 7, 9])
def test_odd(m):
    check(build_odd(m), m)


def test_vertex_count_is_6m_squared():
    for m in (2, 5):
        assert build(m).empire_graph.base.order == 6 * m * m


def test_odd_connectivity_before_joining():
    assert build_odd(5, connect=False).rotation.graph.is_connected()
    raw = build_odd(7, connect=False)
    assert not raw.rotation.graph.is_connected()
    assert set(component_genera(raw.rotation)) == {0}


def test_even_blocks_are_separate_spheres():
    raw = build_even(4, connect=False)
    assert len(raw.rotation.graph.components()) == 2
    assert component_genera(raw.rotation) == [0, 0]
    assert connectify(raw).rotation.graph.is_connected()


def test_argument_checks():
    with pytest.raises(HeawoodError):
        build_even(3)
    with pytest.raises(HeawoodError):
        build_odd(3)
    with pytest.raises(HeawoodError):
        build_odd(6)


def test_six_path_block_on_k4_paths():
    p, q = hamiltonian_decomposition(2)
    wg = six_path_block(p, q, p, q, p, q)
    assert wg.empire_graph.base.order == 24
    assert wg.empire_graph.base.size == 66
    assert verify_jnm(wg.empire_graph, 12, 2).passed
    assert genus_of(wg.rotation).genus == 0


def test_single_vertex_paths_give_octahedron():
    p = Path((0,))
    wg = six_path_block(p, Path((1,)), p, Path((1,)), p, Path((1,)))
    g = wg.empire_graph.base
    assert (g.order, g.size) == (6, 12)
    assert all(len(g.adjacency[v]) == 4 for v in g.vertices)


def test_same_family_paths_must_be_disjoint():
    p = Path((0, 1, 2, 3))
    q = Path((3, 1, 0, 2))
    with pytest.raises(HeawoodError, match="share edge"):
        six_path_block(p, q, p, Path((1, 3, 0, 2)), p, Path((1, 3, 0, 2)))


def test_round_trip():
    wg = build(2)
    back = WesselGraph.from_dict(json.loads(json.dumps(wg.to_dict())))
    assert back == wg


def test_deterministic():
    assert build(5).to_dict() == build(5).to_dict()

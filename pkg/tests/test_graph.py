from __future__ import annotations

import itertools
import json

import pytest
from hypothesis import given, strategies as st

import oracles
from conftest import random_graph
from lpa_lab import graph as gc
from lpa_lab.errors import BadGraphFile, IndexOutOfRange, NegativeMultiplicity, TooLarge, ZeroVertices
from lpa_lab.graph import TwoVertexSignature, build_graph, from_adjacency, two_vertex


def adj(rows):
    return from_adjacency(rows)


graphs = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(0, 3), min_size=n, max_size=n), min_size=n, max_size=n)
).map(from_adjacency)


# -- construction ---------------------------------------------------------------


def test_build_graph_examples():
    assert build_graph(2, []).adjacency == ((0, 0), (0, 0))
    assert build_graph(2, [(1, 1, 3), (1, 0, 2)]).adjacency == ((0, 0), (2, 3))
    assert build_graph(2, [(0, 1, 1), (0, 1, 1)]).adjacency == ((0, 2), (0, 0))


def test_build_graph_errors():
    with pytest.raises(IndexOutOfRange):
        build_graph(2, [(0, 2, 1)])
    with pytest.raises(ZeroVertices):
        build_graph(0, [])
    with pytest.raises(NegativeMultiplicity):
        build_graph(2, [(0, 1, 0)])
    with pytest.raises(NegativeMultiplicity):
        adj([[0, -1], [0, 0]])


def test_two_vertex_round_trip():
    g = two_vertex(5, 2, 3, 1)
    assert g.adjacency == ((5, 2), (1, 3))
    sig = TwoVertexSignature.of(g)
    assert (sig.first, sig.second) == ((3, 1), (5, 2))
    assert TwoVertexSignature.of(sig.graph()) == sig


def test_graph_json_and_compact_forms():
    text = json.dumps({"vertices": ["u", "v"], "edges": [{"from": "v", "to": "v", "count": 3},
                                                         {"from": "v", "to": "u", "count": 2}]})
    g = gc.parse_graph_text(text)
    assert g.adjacency == ((0, 0), (2, 3))
    assert g.labels == ("u", "v")
    assert gc.parse_graph_text("sig:0,0;3,2") == g
    assert gc.parse_graph_text("0,0;3,2") == g
    assert gc.parse_graph_text("sig:4").adjacency == ((4,),)
    assert gc.parse_graph_json(g.to_json()) == g
    # count defaults to one, indices work too
    assert gc.parse_graph_json({"vertices": 2, "edges": [{"from": 0, "to": 1}]}).adjacency == ((0, 1), (0, 0))


@pytest.mark.parametrize("text", ["{bad json", "sig:1,2;3", "sig:a,b;c,d", '{"edges": []}',
                                  '{"vertices": 2, "edges": [{"from": "x", "to": 0}]}',
                                  '{"vertices": 2, "edges": [{"from": 0, "to": 1, "count": 1.5}]}'])
def test_bad_graph_text(text):
    with pytest.raises(BadGraphFile):
        gc.parse_graph_text(text)


# -- vertex sets: worked examples -----------------------------------------------


def test_sinks_examples():
    assert gc.sinks(adj([[0, 0], [2, 3]])) == {0}
    assert gc.sinks(adj([[0, 0], [0, 0]])) == {0, 1}
    assert gc.sinks(adj([[1, 0], [0, 1]])) == set()


def test_line_point_examples():
    assert gc.line_points(adj([[0, 0], [2, 3]])) == {0}
    assert gc.line_points(adj([[0, 0], [0, 0]])) == {0, 1}
    assert gc.line_points(adj([[0, 1], [1, 0]])) == set()


def test_no_exit_cycle_examples():
    assert gc.no_exit_cycle_vertices(adj([[1, 0], [2, 3]])) == {0}
    assert gc.no_exit_cycle_vertices(adj([[0, 1], [1, 0]])) == {0, 1}
    assert gc.no_exit_cycle_vertices(adj([[2, 0], [0, 0]])) == set()


def test_extreme_cycle_examples():
    assert gc.extreme_cycle_vertices(adj([[2, 0], [0, 3]])) == {0, 1}
    assert gc.extreme_cycle_vertices(adj([[0, 1], [1, 0]])) == set()
    assert gc.extreme_cycle_vertices(adj([[2, 1], [0, 3]])) == {1}


def test_hereditary_saturated_examples():
    assert gc.hereditary_saturated_subsets(adj([[2, 1], [0, 3]])) == [set(), {1}, {0, 1}]
    assert gc.hereditary_saturated_subsets(adj([[2, 0], [0, 3]])) == [set(), {0}, {1}, {0, 1}]
    assert gc.hereditary_saturated_subsets(adj([[3, 2], [1, 2]])) == [set(), {0, 1}]


def test_hereditary_saturated_size_limit():
    with pytest.raises(TooLarge):
        gc.hereditary_saturated_subsets(from_adjacency([[0] * 21 for _ in range(21)]))


def test_connects_to_plec_examples():
    assert gc.connects_to_plec(adj([[0, 0], [0, 0]]))
    assert gc.connects_to_plec(adj([[1, 1], [1, 1]]))
    assert gc.extreme_cycle_vertices(adj([[1, 1], [1, 1]])) == {0, 1}


def test_canonical_form_examples():
    assert gc.canonical_form(adj([[3, 0], [0, 2]])).adjacency == ((2, 0), (0, 3))
    assert gc.canonical_form(adj([[0, 0], [2, 3]])).adjacency == ((0, 0), (2, 3))
    with pytest.raises(TooLarge):
        gc.canonical_form(from_adjacency([[0] * 9 for _ in range(9)]))


# -- brute-force oracles on small graphs ------------------------------------------


def _small_graphs(rng, count):
    for _ in range(count):
        n = rng.randint(1, 4)
        g = random_graph(rng, n, max_mult=2, density=0.45)
        if g.total_multiplicity <= 6:
            yield g


def test_sets_match_path_enumeration(rng):
    checked = 0
    for g in _small_graphs(rng, 3000):
        a = [list(r) for r in g.adjacency]
        assert gc.line_points(g) == oracles.line_points(a), a
        assert gc.no_exit_cycle_vertices(g) == oracles.no_exit_cycle_vertices(a), a
        assert gc.extreme_cycle_vertices(g) == oracles.extreme_cycle_vertices(a), a
        assert gc.hereditary_saturated_subsets(g) == oracles.hereditary_saturated(a), a
        checked += 1
    assert checked > 500


def test_exhaustive_two_vertex_sets():
    for entries in itertools.product(range(3), repeat=4):
        a = [list(entries[:2]), list(entries[2:])]
        g = from_adjacency(a)
        assert gc.line_points(g) == oracles.line_points(a)
        assert gc.no_exit_cycle_vertices(g) == oracles.no_exit_cycle_vertices(a)
        assert gc.extreme_cycle_vertices(g) == oracles.extreme_cycle_vertices(a)


def test_proper_hs_shortcut_matches_enumeration(rng):
    for g in _small_graphs(rng, 1500):
        full = len(gc.hereditary_saturated_subsets(g)) > 2
        assert gc.has_proper_hereditary_saturated(g) == full


def test_canonical_form_matches_oracle(rng):
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 4), max_mult=3)
        c = gc.canonical_form(g)
        assert c.flat() == oracles.canonical([list(r) for r in g.adjacency])
        assert gc.canonical_form(c) == c


def test_signature_equality_is_canonical_equality():
    sigs = list(itertools.product(range(3), repeat=4))
    for x in sigs[::7]:
        for y in sigs[::5]:
            gx, gy = two_vertex(*x), two_vertex(*y)
            same_sig = TwoVertexSignature.of(gx) == TwoVertexSignature.of(gy)
            assert same_sig == (gc.canonical_key(gx) == gc.canonical_key(gy))


# -- properties --------------------------------------------------------------------


@given(graphs)
def test_plec_sets_disjoint_and_cover(g):
    pl, pc, pec = gc.line_points(g), gc.no_exit_cycle_vertices(g), gc.extreme_cycle_vertices(g)
    assert not (pl & pc) and not (pl & pec) and not (pc & pec)
    assert gc.connects_to_plec(g)
    assert gc.sinks(g) <= pl


@given(graphs)
def test_hs_lattice_closed_under_intersection(g):
    hs = gc.hereditary_saturated_subsets(g)
    assert hs[0] == frozenset() and hs[-1] == frozenset(range(g.n))
    s = set(hs)
    for x, y in itertools.combinations(hs, 2):
        assert x & y in s


@given(graphs)
def test_undirected_components_partition(g):
    comps = gc.undirected_components(g)
    assert sorted(v for c in comps for v in c) == list(range(g.n))
    assert (len(comps) == 1) == oracles.undirected_connected([list(r) for r in g.adjacency])

import random

import pytest

from alphaindex.graphs import (
    Graph,
    Graph6Error,
    GraphError,
    NonEdgeError,
    emit_graph6,
    parse_graph6,
    profile,
)

from conftest import random_graph


def test_parse_single_edge():
    g = parse_graph6("A_")
    assert g.n == 2 and g.m == 1 and g.adjacent(0, 1)
    assert emit_graph6(g) == "A_"


def test_emit_one_vertex():
    assert emit_graph6(Graph.from_rows([0])) == "@"


def test_cycle4_string(c4):
    assert emit_graph6(c4) == "Cl"
    assert parse_graph6("Cl") == c4


def test_k23_string_hubs_first(k23):
    # Hand-packed from the upper-triangle bit order with hubs labeled 0, 1.
    assert emit_graph6(k23) == "D]o"
    assert parse_graph6("D]o") == k23


def test_star_decode():
    # "D?{" packs exactly the four bits x(i,4): the star K_{1,4}.
    g = parse_graph6("D?{")
    assert sorted(g.degrees()) == [1, 1, 1, 1, 4]


def test_nonzero_padding_rejected():
    with pytest.raises(Graph6Error) as err:
        parse_graph6("B~")
    assert err.value.offset == 1


def test_truncated_payload():
    with pytest.raises(Graph6Error, match="truncated"):
        parse_graph6("D?")


def test_trailing_bytes():
    with pytest.raises(Graph6Error, match="trailing"):
        parse_graph6("A_?")


def test_out_of_range_character():
    with pytest.raises(Graph6Error) as err:
        parse_graph6("A" + chr(30))
    assert err.value.offset == 1


def test_long_form_round_trip():
    rng = random.Random(5)
    g = random_graph(rng, 63, 0.05)
    text = emit_graph6(g)
    assert text.startswith("~")
    assert parse_graph6(text) == g


def test_header_optional_prefix(c4):
    assert parse_graph6(">>graph6<<Cl") == c4


def test_round_trip_random_order8():
    rng = random.Random(20240801)
    for _ in range(100):
        g = random_graph(rng, 8, rng.uniform(0.1, 0.9))
        assert parse_graph6(emit_graph6(g)) == g


def test_remove_edge_cycle_becomes_path(c4):
    g = c4.remove_edge(0, 1)
    assert g.m == 3
    assert sorted(g.degrees()) == [1, 1, 2, 2]
    assert c4.m == 4  # input untouched


def test_remove_edge_k23(k23):
    assert k23.remove_edge(0, 2).m == 5


def test_remove_nonedge_raises(c4):
    with pytest.raises(NonEdgeError):
        c4.remove_edge(0, 2)


def test_add_edge_value_semantics(c4):
    g = c4.add_edge(0, 2)
    assert g.m == 5 and not c4.adjacent(0, 2)
    with pytest.raises(NonEdgeError):
        g.add_edge(0, 2)
    with pytest.raises(GraphError):
        g.add_edge(1, 1)


def test_profile_k23(k23):
    p = profile(k23)
    assert sorted(p.degrees) == [2, 2, 2, 3, 3]
    assert p.min_degree == 2 and p.max_degree == 3


def test_profile_cycle_regular():
    c7 = Graph.from_edges(7, [(i, (i + 1) % 7) for i in range(7)])
    assert set(profile(c7).degrees) == {2}


def test_profile_sk24(sk24):
    assert sorted(profile(sk24).degrees) == [2, 2, 2, 2, 2, 4, 4]
    assert sk24.m == 9


def test_degree_sum_is_twice_edges():
    rng = random.Random(77)
    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 10), rng.random())
        assert sum(g.degrees()) == 2 * g.m


def test_relabel_permutation_checked(c4):
    with pytest.raises(GraphError):
        c4.relabel((0, 0, 1, 2))
    h = c4.relabel((1, 2, 3, 0))
    assert h.m == c4.m and sorted(h.degrees()) == sorted(c4.degrees())


def test_structural_validation():
    with pytest.raises(GraphError, match="self-loop"):
        Graph(2, (1, 2), 1)
    with pytest.raises(GraphError, match="asymmetric"):
        Graph(2, (2, 0), 1)
    with pytest.raises(GraphError, match="edge count"):
        Graph(2, (2, 1), 2)
    with pytest.raises(GraphError):
        Graph(0, (), 0)


def test_edges_iteration(k23):
    edges = list(k23.edges())
    assert len(edges) == k23.m
    assert all(u < v for u, v in edges)
    assert all(k23.adjacent(u, v) for u, v in edges)

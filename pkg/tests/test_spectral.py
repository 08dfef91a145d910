import math
import random

import numpy as np
import pytest

from alphaindex.connectivity import is_connected
from alphaindex.families import FamilyId, build, complete_bipartite, cycle, subdivided_k2
from alphaindex.graphs import Graph, GraphError
from alphaindex.spectral import (
    DisconnectedGraphError,
    alpha_index,
    alpha_matrix,
    closed_form_complete_bipartite,
    column_sum_certificate,
    components,
    induced_subgraph,
    jacobi_eigenvalues,
    lambda_max,
    lower_bound_max_degree,
    perron_symmetry_check,
    upper_bound_degree_average,
)

from conftest import random_graph


def connected_sample(rng, n_lo=2, n_hi=10):
    while True:
        g = random_graph(rng, rng.randint(n_lo, n_hi), rng.uniform(0.25, 0.75))
        if is_connected(g):
            return g


def test_alpha_matrix_triangle_half():
    k3 = cycle(3)
    m = alpha_matrix(k3, 0.5).entries
    assert np.allclose(np.diag(m), 1.0)
    off = m[~np.eye(3, dtype=bool)]
    assert np.allclose(off, 0.5)


def test_alpha_matrix_endpoints(k23):
    a0 = alpha_matrix(k23, 0.0).entries
    assert np.all(np.diag(a0) == 0)
    assert a0.sum() == 2 * k23.m
    a1 = alpha_matrix(k23, 1.0).entries
    assert np.all(a1 == np.diag(k23.degrees()))


def test_alpha_matrix_row_sums_are_degrees():
    rng = random.Random(3)
    for _ in range(20):
        g = random_graph(rng, rng.randint(2, 9), rng.random())
        for a in (0.0, 0.3, 0.5, 0.9, 1.0):
            sums = alpha_matrix(g, a).entries.sum(axis=1)
            assert np.allclose(sums, g.degrees(), atol=1e-12)


def test_alpha_matrix_range_checked(c4):
    with pytest.raises(ValueError):
        alpha_matrix(c4, 1.5)


def test_cycles_have_rho_two():
    for n in (3, 5, 8, 13):
        for a in (0.0, 0.25, 0.5, 0.9):
            assert abs(alpha_index(cycle(n), a).rho - 2.0) < 1e-11


def test_k23_half_exact(k23):
    result = alpha_index(k23, 0.5)
    assert abs(result.rho - 2.5) <= 1e-12
    assert abs(result.perron.sum() - 1.0) < 1e-12
    assert result.perron.min() > 0
    assert result.residual <= 1e-12 * max(result.rho, 1.0)


def test_sk24_half_value(sk24):
    assert abs(alpha_index(sk24, 0.5).rho - 2.9444847004446) < 1e-10


def test_single_vertex():
    one = Graph.from_rows([0])
    result = alpha_index(one, 0.5)
    assert result.rho == 0.0 and result.perron[0] == 1.0


def test_disconnected_rejected():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(DisconnectedGraphError):
        alpha_index(g, 0.5)
    assert abs(lambda_max(g, 0.5) - 1.0) < 1e-12


def test_alpha_one_rejected(c4):
    with pytest.raises(ValueError):
        alpha_index(c4, 1.0)


def test_convergence_error_carries_diagnostics(k23):
    from alphaindex.spectral import ConvergenceError

    with pytest.raises(ConvergenceError) as err:
        alpha_index(k23, 0.5, max_iterations=2)
    assert err.value.iterations == 2
    assert err.value.residual > 0


def test_tolerance_override_changes_effort(k23):
    loose = alpha_index(k23, 0.5, tol=1e-6)
    tight = alpha_index(k23, 0.5, tol=1e-12)
    assert loose.iterations <= tight.iterations
    assert abs(loose.rho - tight.rho) < 1e-5


def test_power_matches_jacobi_on_seeded_corpus():
    rng = random.Random(12345)
    worst = 0.0
    for _ in range(100):
        g = connected_sample(rng)
        for a in (0.5, 0.8):
            lam = jacobi_eigenvalues(alpha_matrix(g, a).entries)[-1]
            rho = alpha_index(g, a).rho
            worst = max(worst, abs(lam - rho))
    assert worst <= 1e-10


def test_jacobi_known_spectrum(c4):
    values = jacobi_eigenvalues(alpha_matrix(c4, 0.0).entries)
    assert np.allclose(values, [-2.0, 0.0, 0.0, 2.0], atol=1e-12)


def test_near_degenerate_top_pair_converges():
    # Two far-apart degree-3 hubs: the top gap shrinks steeply as alpha -> 1.
    theta = Graph.from_edges(11, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7),
                                  (7, 8), (8, 0), (0, 9), (9, 10), (10, 4)])
    result = alpha_index(theta, 0.999)
    lam = jacobi_eigenvalues(alpha_matrix(theta, 0.999).entries)[-1]
    assert abs(result.rho - lam) < 1e-10
    assert result.perron.min() > 0


def test_closed_form_reduction_to_order_form():
    for n in range(5, 12):
        for a in (0.5, 0.7, 0.9):
            direct = closed_form_complete_bipartite(n - 2, 2, a)
            reduced = 0.5 * (a * n + math.sqrt(a * a * n * n + 8 * (n - 2) * (1 - 2 * a)))
            assert abs(direct - reduced) < 1e-12


def test_closed_form_values():
    assert abs(closed_form_complete_bipartite(2, 2, 0.0) - 2.0) < 1e-14
    assert abs(closed_form_complete_bipartite(4, 2, 0.5) - 3.0) < 1e-14
    with pytest.raises(ValueError):
        closed_form_complete_bipartite(2, 4, 0.5)
    with pytest.raises(ValueError):
        closed_form_complete_bipartite(2, 2, 1.5)


def test_closed_form_matches_eigensolver_sample():
    for a, b in ((3, 2), (5, 5), (7, 1), (12, 12)):
        g = complete_bipartite(a, b)
        for alpha in (0.0, 0.25, 0.5, 0.75, 0.9):
            assert abs(closed_form_complete_bipartite(a, b, alpha)
                       - alpha_index(g, alpha).rho) <= 1e-10


def test_upper_bound_k23(k23):
    assert abs(upper_bound_degree_average(k23, 0.5) - 2.5) < 1e-12


def test_upper_bound_regular_equality():
    for n in (5, 9):
        for a in (0.6, 0.75, 0.9):
            assert abs(upper_bound_degree_average(cycle(n), a) - 2.0) < 1e-12


def test_upper_bound_star():
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert abs(upper_bound_degree_average(star, 0.5) - 2.0) < 1e-12
    assert upper_bound_degree_average(star, 0.5) >= alpha_index(star, 0.5).rho - 1e-10


def test_upper_bound_isolated_vertex_rejected():
    g = Graph.from_edges(3, [(0, 1)])
    with pytest.raises(GraphError):
        upper_bound_degree_average(g, 0.5)


def test_lower_bound_k23(k23):
    assert abs(lower_bound_max_degree(k23, 0.5) - 2.0) < 1e-12


def test_lower_bound_branches_meet_at_half():
    for delta_graph in (cycle(6), complete_bipartite(3, 2)):
        delta = max(delta_graph.degrees())
        below = lower_bound_max_degree(delta_graph, 0.5 - 1e-12)
        above = lower_bound_max_degree(delta_graph, 0.5)
        assert abs(below - above) < 1e-9
        assert abs(above - (delta / 2 + 0.5)) < 1e-12


def test_lower_bound_cycle_below_two():
    for a in (0.5, 0.7, 0.9):
        assert lower_bound_max_degree(cycle(8), a) <= 2.0 + 1e-12


def test_sandwich_on_random_graphs():
    rng = random.Random(999)
    for _ in range(80):
        g = connected_sample(rng, 2, 8)
        for a in (0.5, 0.75, 0.9):
            rho = alpha_index(g, a).rho
            assert lower_bound_max_degree(g, a) <= rho + 1e-10
            assert upper_bound_degree_average(g, a) >= rho - 1e-10


def test_rho_between_degree_extremes():
    rng = random.Random(808)
    for _ in range(60):
        g = connected_sample(rng, 2, 9)
        for a in (0.0, 0.5, 0.9):
            rho = alpha_index(g, a).rho
            assert min(g.degrees()) - 1e-10 <= rho <= max(g.degrees()) + 1e-10


def test_edge_addition_strictly_increases_rho():
    rng = random.Random(55)
    for _ in range(30):
        g = connected_sample(rng, 3, 8)
        non_edges = [(u, v) for u in range(g.n) for v in range(u + 1, g.n)
                     if not g.adjacent(u, v)]
        if not non_edges:
            continue
        u, v = rng.choice(non_edges)
        for a in (0.0, 0.5, 0.9):
            assert alpha_index(g.add_edge(u, v), a).rho > alpha_index(g, a).rho


def test_column_sums_vanish_on_k2b(k23):
    # K_{2,n-2} is the equality case: every column of B sums to zero.
    for a in (0.5, 0.6, 0.75, 0.9):
        cert = column_sum_certificate(k23, a, "order")
        assert cert.parameter == 5
        assert max(abs(v) for v in cert.column_sums) < 1e-12
    k24 = complete_bipartite(2, 4)
    for a in (0.5, 0.7):
        cert = column_sum_certificate(k24, a, "size")
        assert cert.parameter == 8
        assert max(abs(v) for v in cert.column_sums) < 1e-12


def test_column_sums_c5_strictly_negative(c5):
    cert = column_sum_certificate(c5, 0.6, "order")
    assert all(abs(v - (-0.8)) < 1e-12 for v in cert.column_sums)


def test_column_sums_cross_checked_on_random_graphs():
    rng = random.Random(6060)
    for _ in range(100):
        g = random_graph(rng, rng.randint(2, 9), rng.random())
        for variant in ("order", "size"):
            column_sum_certificate(g, rng.choice((0.5, 0.6, 0.75, 0.9)), variant)


def test_column_sum_variant_checked(c4):
    with pytest.raises(ValueError):
        column_sum_certificate(c4, 0.5, "girth")


def test_perron_symmetry_families():
    for text, alphas in (("SK2,4", (0.7,)), ("K3,3", (0.5, 0.9)), ("C8", (0.5, 0.9))):
        from alphaindex.families import parse_family

        g, orbits = build(parse_family(text))
        for a in alphas:
            assert perron_symmetry_check(g, orbits, a)


def test_perron_symmetry_detects_asymmetry(c5):
    from alphaindex.families import OrbitPartition

    bad = OrbitPartition(blocks=((0, 1), (2, 3, 4)))
    path4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    fake = OrbitPartition(blocks=((0, 1),))
    assert not perron_symmetry_check(path4, fake, 0.5)
    assert perron_symmetry_check(c5, bad, 0.5)  # vertex-transitive: any blocks pass


def test_components_and_induced():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (3, 4)])
    comps = components(g)
    assert sorted(len(c) for c in comps) == [2, 3]
    sub = induced_subgraph(g, [0, 1, 2])
    assert sub.n == 3 and sub.m == 2

import math
from fractions import Fraction
from itertools import permutations

import numpy as np
import pytest

from api.certify import corollary_product_bound, min_degree_bound, theorem41_bound
from api.errors import DomainError, InvalidArgumentError, ResourceLimitError
from api.graphs import (BipartiteGraph, MultiGraph, complete_bipartite, h_abc, random_bipartite_graph,
                        random_connected_multigraph, star)
from api.permtutte import (_sampling_plan, activity_profile, check_gluing, conjecture_scan, fkg_lower_bound,
                           fkg_weighted_bound, glue, perm_tutte_exact, perm_tutte_mc, star_closed_form,
                           verify_transfer_identity)
from api.polynomial import BivariatePolynomial as P

TWO, ZERO = Fraction(2), Fraction(0)


def brute_force(graph: BipartiteGraph) -> P:
    counts = {}
    for order in permutations(range(graph.vertex_count)):
        ranks = [0] * graph.vertex_count
        for position, v in enumerate(order):
            ranks[v] = position
        profile = activity_profile(graph, ranks)
        key = (profile.ia, profile.ea)
        counts[key] = counts.get(key, 0) + 1
    return P.from_counts(counts, math.factorial(graph.vertex_count))


def small_graphs(count, max_vertices, min_degree=0, seed=0):
    rng = np.random.default_rng(seed)
    return [random_bipartite_graph(rng, max_vertices, min_degree) for _ in range(count)]


# --- exact polynomial ---

def test_star_closed_form(s4):
    polynomial = perm_tutte_exact(s4)
    assert polynomial == star_closed_form(4)
    assert polynomial == (P.x() ** 3 + P.x() ** 2 + P.x() + P.y()).scale(Fraction(1, 4))
    assert polynomial.evaluate(TWO, ZERO) == Fraction(7, 2)
    assert polynomial.evaluate(ZERO, Fraction(7, 3)) == Fraction(7, 12)


def test_star_with_centre_in_a():
    assert perm_tutte_exact(star(4, leaves_in_a=False)) == star_closed_form(4, leaves_in_a=False)
    assert star_closed_form(4, leaves_in_a=False) == star_closed_form(4).transpose()


def test_pendant_star_product_exceeds_one():
    x = Fraction(11, 5)
    polynomial = perm_tutte_exact(star(4))
    value = polynomial.evaluate(x, ZERO) * polynomial.evaluate(ZERO, x) / x
    assert value == (x ** 3 + x ** 2 + x) / 16
    assert value > 1


def test_isolated_pair_is_always_active():
    assert perm_tutte_exact(BipartiteGraph.from_edges(1, 1, [])) == P.x() * P.y()


@pytest.mark.parametrize("graph", [star(3), complete_bipartite(2, 2), h_abc(1, 2, 1),
                                   BipartiteGraph.from_edges(2, 3, [(0, 2), (0, 3), (1, 3), (1, 4)])])
def test_matches_brute_force(graph):
    assert perm_tutte_exact(graph) == brute_force(graph)


@pytest.mark.parametrize("graph", small_graphs(40, 8))
def test_structural_invariants(graph):
    polynomial = perm_tutte_exact(graph)
    assert polynomial.is_nonnegative()
    assert polynomial.total() == 1
    assert perm_tutte_exact(graph.swap_parts()) == polynomial.transpose()


def test_disjoint_union_multiplies():
    first, second = star(3), complete_bipartite(2, 2)
    assert perm_tutte_exact(first.disjoint_union(second)) == perm_tutte_exact(first) * perm_tutte_exact(second)


def test_exact_vertex_cap():
    with pytest.raises(ResourceLimitError):
        perm_tutte_exact(complete_bipartite(6, 6))


def test_exact_cap_applies_per_component():
    graph = star(6).disjoint_union(star(6, leaves_in_a=False))
    assert graph.vertex_count == 12
    expected = star_closed_form(6) * star_closed_form(6, leaves_in_a=False)
    assert perm_tutte_exact(graph) == expected


# --- Monte Carlo ---

def test_mc_is_reproducible_and_worker_independent(s4):
    single = perm_tutte_mc(s4, 2.0, 0.0, samples=10_000, seed=11, block_size=1_000)
    again = perm_tutte_mc(s4, 2.0, 0.0, samples=10_000, seed=11, block_size=1_000)
    pooled = perm_tutte_mc(s4, 2.0, 0.0, samples=10_000, seed=11, workers=4, block_size=1_000)
    assert single == again == pooled
    assert single.to_dict() == {"mean": single.mean, "stderr": single.stderr, "samples": 10_000, "seed": 11}


def test_mc_calibration(s4):
    exact = 3.5
    covered = 0
    for seed in range(50):
        estimate = perm_tutte_mc(s4, 2.0, 0.0, samples=20_000, seed=seed)
        if abs(estimate.mean - exact) <= 4 * estimate.stderr:
            covered += 1
    assert covered >= 48


@pytest.mark.parametrize("x, y", [(2.0, 0.0), (0.0, 2.0), (1.5, 0.5)])
def test_leaf_integration_is_unbiased(x, y):
    graph = h_abc(2, 2, 2)
    exact = float(perm_tutte_exact(graph).evaluate(Fraction(x), Fraction(y)))
    plain = perm_tutte_mc(graph, x, y, samples=100_000, seed=3)
    integrated = perm_tutte_mc(graph, x, y, samples=100_000, seed=3, integrate_leaves=True)
    assert abs(integrated.mean - exact) <= 5 * integrated.stderr
    assert abs(plain.mean - exact) <= 5 * plain.stderr
    if y == 0.0:
        assert integrated.stderr <= plain.stderr


def test_shared_neighbourhoods_are_grouped():
    plan = _sampling_plan(h_abc(3, 3, 3), integrate_leaves=True)
    assert len(plan.core) == 6
    assert len({plan.groups[v] for v in plan.core}) == 2
    assert sum(plan.leaf_counts) == 3


def test_mc_on_complete_bipartite_matches_exact():
    graph = complete_bipartite(3, 3)
    exact = float(perm_tutte_exact(graph).evaluate(Fraction(2), Fraction(0)))
    estimate = perm_tutte_mc(graph, 2.0, 0.0, samples=100_000, seed=5, workers=2, block_size=10_000)
    assert abs(estimate.mean - exact) <= 5 * estimate.stderr


def test_mc_argument_checks(s4):
    with pytest.raises(InvalidArgumentError):
        perm_tutte_mc(s4, 2.0, 0.0, samples=0, seed=0)
    with pytest.raises(InvalidArgumentError):
        perm_tutte_mc(s4, -1.0, 0.0, samples=10, seed=0)


# --- lower bounds ---

@pytest.mark.parametrize("graph", small_graphs(200, 8, seed=7))
def test_fkg_bound_below_exact(graph):
    polynomial = perm_tutte_exact(graph)
    for x, y in ((2, 0), (3, 0), (2, Fraction(1, 2)), (0, 2)):
        assert fkg_lower_bound(graph, x, y) <= polynomial.evaluate(Fraction(x), Fraction(y))


def test_fkg_equality_on_isolated_vertices():
    graph = BipartiteGraph.from_edges(2, 1, [])
    assert fkg_lower_bound(graph, 3, Fraction(1, 2)) == perm_tutte_exact(graph).evaluate(Fraction(3), Fraction(1, 2))


def test_fkg_domain():
    with pytest.raises(DomainError):
        fkg_lower_bound(star(3), 2, 2)


def test_fkg_weighted_bound_reduces_to_uniform_weights(s4):
    assert fkg_weighted_bound(s4, [2, 2, 2], [0]) == fkg_lower_bound(s4, 2, 0)
    with pytest.raises(InvalidArgumentError):
        fkg_weighted_bound(s4, [2, 2], [0])
    with pytest.raises(DomainError):
        fkg_weighted_bound(s4, [2, 2, 2], [2])


@pytest.mark.parametrize("graph", small_graphs(100, 8, min_degree=1, seed=21))
def test_product_bounds_below_exact(graph):
    polynomial = perm_tutte_exact(graph)
    for x in (Fraction(2), Fraction(471, 200)):
        lower = polynomial.evaluate(x, ZERO)
        product = lower * polynomial.evaluate(ZERO, x)
        for s in (Fraction(k, 10) for k in range(1, 10)):
            assert theorem41_bound(graph, x, s) <= lower
            assert corollary_product_bound(graph, x, s) <= product


@pytest.mark.parametrize("graph", small_graphs(60, 10, min_degree=2, seed=5))
def test_min_degree_bound_below_product(graph):
    x, s = Fraction(471, 200), Fraction(39, 50)
    polynomial = perm_tutte_exact(graph)
    product = polynomial.evaluate(x, ZERO) * polynomial.evaluate(ZERO, x)
    assert min_degree_bound(graph.degrees, x, s, 2) <= corollary_product_bound(graph, x, s) <= product


@pytest.mark.slow
def test_product_bounds_on_many_graphs():
    for graph in small_graphs(1000, 8, min_degree=1, seed=99):
        polynomial = perm_tutte_exact(graph)
        lower = polynomial.evaluate(TWO, ZERO)
        assert fkg_lower_bound(graph, 2, 0) <= lower
        assert theorem41_bound(graph, TWO, Fraction(1, 2)) <= lower


# --- transfer identity ---

def test_transfer_identity_on_c4(c4):
    report = verify_transfer_identity(c4)
    assert report.holds
    assert report.tree_count == 4
    assert str(report.tutte) == "x^3 + x^2 + x + y"


def test_transfer_identity_on_six_vertex(six_vertex):
    report = verify_transfer_identity(six_vertex)
    assert report.holds
    assert report.residual.is_zero()


@pytest.mark.parametrize("seed", range(100))
def test_transfer_identity_on_random_multigraphs(seed):
    rng = np.random.default_rng(seed)
    vertices = int(rng.integers(1, 6))
    edges = int(rng.integers(max(vertices - 1, 1), 9))
    assert verify_transfer_identity(random_connected_multigraph(rng, vertices, edges)).holds


def test_transfer_identity_limits():
    with pytest.raises(ResourceLimitError):
        verify_transfer_identity(MultiGraph.from_pairs(2, [(0, 1)] * 9))
    with pytest.raises(DomainError):
        verify_transfer_identity(MultiGraph.from_pairs(3, [(0, 1)]))


# --- gluing ---

def test_glue_two_stars_at_centres(s4):
    glued, shared = glue(s4, 3, s4, 3)
    assert glued == star(7)
    assert shared == 6
    report = check_gluing(s4, 3, s4, 3, 2, 0)
    assert not report.root_in_a
    assert report.glued_value == 18
    assert report.rhs == Fraction(49, 4)
    assert report.holds


def test_glue_at_leaves(s4):
    report = check_gluing(s4, 0, s4, 0, 2, 0)
    assert report.root_in_a
    assert (report.glued.a_size, report.glued.b_size) == (5, 2)
    assert report.lhs == 2 * report.glued_value
    assert report.holds


@pytest.mark.parametrize("seed", range(30))
def test_gluing_inequality_on_random_graphs(seed):
    rng = np.random.default_rng(seed)
    first = random_bipartite_graph(rng, 5, 1)
    second = random_bipartite_graph(rng, 5, 1)
    root_in_a = bool(rng.integers(0, 2))
    first_root = 0 if root_in_a else first.a_size
    second_root = 0 if root_in_a else second.a_size
    for x, y in ((2, 0), (3, Fraction(1, 2)), (1, 1)):
        assert check_gluing(first, first_root, second, second_root, x, y).holds


def test_gluing_rejects_mixed_parts_and_domain(s4):
    with pytest.raises(InvalidArgumentError):
        glue(s4, 0, s4, 3)
    with pytest.raises(DomainError):
        check_gluing(s4, 3, s4, 3, 2, 2)


# --- conjecture scan ---

def test_conjecture_scan_is_seeded():
    first = conjecture_scan(2, trials=20, seed=4, max_vertices=8)
    second = conjecture_scan(2, trials=20, seed=4, max_vertices=8)
    assert first == second
    with pytest.raises(InvalidArgumentError):
        conjecture_scan(0, trials=1, seed=0)

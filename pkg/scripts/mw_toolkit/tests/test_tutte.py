from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from api.errors import DomainError, InvalidArgumentError, ResourceLimitError
from api.graphs import MultiGraph, random_connected_multigraph
from api.matroids import cycle_matroid, direct_sum, dual, parallel_double, uniform
from api.polynomial import BivariatePolynomial as P
from api.tutte import merino_welsh_check, tutte_by_activities, tutte_deletion_contraction, tutte_matroid

X, Y = P.x(), P.y()


def all_methods(graph):
    return [
        tutte_deletion_contraction(graph),
        tutte_by_activities(graph),
        tutte_matroid(cycle_matroid(graph)),
    ]


def test_c4(c4):
    for polynomial in all_methods(c4):
        assert str(polynomial) == "x^3 + x^2 + x + y"


@pytest.mark.parametrize("name, expected", [
    ("theta3.json", X + Y + Y ** 2),
    ("triangle_loop.json", X ** 2 * Y + X * Y + Y ** 2),
    ("path4.json", X ** 3),
])
def test_small_multigraphs(bundled_multigraph, name, expected):
    for polynomial in all_methods(bundled_multigraph(name)):
        assert polynomial == expected


def test_six_vertex_methods_agree(six_vertex):
    first, *others = all_methods(six_vertex)
    assert all(other == first for other in others)
    assert first.has_integer_coefficients() and first.is_nonnegative()


@pytest.mark.parametrize("seed", range(5))
def test_activities_do_not_depend_on_the_labeling(six_vertex, seed):
    labeling = [int(v) + 1 for v in np.random.default_rng(seed).permutation(six_vertex.edge_count)]
    assert tutte_by_activities(six_vertex, labeling) == tutte_deletion_contraction(six_vertex)


def test_labeling_must_be_a_permutation(c4):
    with pytest.raises(InvalidArgumentError):
        tutte_by_activities(c4, [1, 1, 2, 3])


@pytest.mark.parametrize("seed", range(25))
def test_random_multigraphs(seed):
    rng = np.random.default_rng(1000 + seed)
    vertices = int(rng.integers(1, 6))
    graph = random_connected_multigraph(rng, vertices, int(rng.integers(vertices - 1 if vertices > 1 else 0, 9)))
    first, *others = all_methods(graph)
    assert all(other == first for other in others)


def test_uniform_matroids():
    assert tutte_matroid(uniform(4, 2)) == X ** 2 + 2 * X + 2 * Y + Y ** 2
    assert tutte_matroid(uniform(3, 3)) == X ** 3
    assert tutte_matroid(uniform(2, 0)) == Y ** 2


@pytest.mark.parametrize("matroid", [uniform(5, 2), parallel_double(uniform(3, 2)), uniform(6, 3)])
def test_duality_transposes(matroid):
    assert tutte_matroid(dual(matroid)) == tutte_matroid(matroid).transpose()


def random_graphic(seed, vertices):
    rng = np.random.default_rng(seed)
    return cycle_matroid(random_connected_multigraph(rng, vertices, vertices + 1))


small_matroids = st.one_of(
    st.integers(0, 4).flatmap(lambda m: st.builds(uniform, st.just(m), st.integers(0, m))),
    st.builds(random_graphic, st.integers(0, 2 ** 32 - 1), st.integers(1, 4)),
)


@given(small_matroids, small_matroids)
def test_direct_sum_multiplies(first, second):
    assert tutte_matroid(direct_sum(first, second)) == tutte_matroid(first) * tutte_matroid(second)


def test_direct_sum_of_cycle_and_uniform(c4):
    combined = direct_sum(cycle_matroid(c4), uniform(2, 1))
    assert tutte_matroid(combined) == (X ** 3 + X ** 2 + X + Y) * (X + Y)


def test_merino_welsh_check_on_c4(c4):
    check = merino_welsh_check(tutte_deletion_contraction(c4))
    assert (check.bases, check.acyclic, check.totally_cyclic) == (4, 14, 2)
    assert check.max_version_holds
    assert check.product_version_holds
    assert check.product_margin == Fraction(12)


def test_limits_and_domains():
    many = MultiGraph.from_pairs(2, [(0, 1)] * 17)
    with pytest.raises(ResourceLimitError):
        tutte_by_activities(many)
    with pytest.raises(DomainError):
        tutte_by_activities(MultiGraph.from_pairs(3, [(0, 1)]))

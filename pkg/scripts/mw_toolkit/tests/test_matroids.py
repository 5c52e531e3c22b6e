import networkx as nx
import numpy as np
import pytest
from hypothesis import given, strategies as st

from api.errors import DomainError, InvalidArgumentError, ResourceLimitError
from api.graphs import (MultiGraph, connected_components, cycle_multigraph, h_abc, random_connected_multigraph,
                        star)
from api.matroids import (bases, circuits, cycle_matroid, direct_sum, dual, find_isomorphism,
                          fundamental_circuit, is_isomorphic, local_basis_exchange, parallel_double,
                          parse_matroid, uniform)


def as_networkx(graph):
    result = nx.Graph()
    result.add_nodes_from(range(graph.vertex_count))
    result.add_edges_from(graph.edges())
    return result


def test_uniform_matroid():
    matroid = uniform(4, 2)
    assert matroid.full_rank == 2
    assert len(bases(matroid)) == 6
    found = circuits(matroid)
    assert len(found) == 4 and all(len(c) == 3 for c in found)
    with pytest.raises(InvalidArgumentError):
        uniform(3, 4)


def test_cycle_matroid_of_c4(c4):
    matroid = cycle_matroid(c4)
    assert matroid.full_rank == 3
    assert len(bases(matroid)) == 4
    assert circuits(matroid) == [frozenset({0, 1, 2, 3})]


def test_loops_and_coloops(bundled_multigraph):
    with_loop = cycle_matroid(bundled_multigraph("triangle_loop.json"))
    assert with_loop.loops() == [3]
    path = cycle_matroid(MultiGraph.from_pairs(4, [(0, 1), (1, 2), (2, 3)]))
    assert path.coloops() == [0, 1, 2]


def test_dual_and_sums():
    assert dual(uniform(5, 2)).full_rank == 3
    assert len(bases(dual(uniform(4, 2)))) == 6
    combined = direct_sum(uniform(2, 1), uniform(3, 3))
    assert (combined.ground_size, combined.full_rank) == (5, 4)
    doubled = parallel_double(uniform(3, 2))
    assert (doubled.ground_size, doubled.full_rank) == (6, 2)
    assert doubled.rank_of([0, 1]) == 1
    assert doubled.rank_of([0, 2]) == 2


def test_enumeration_caps():
    with pytest.raises(ResourceLimitError):
        circuits(uniform(21, 3))
    with pytest.raises(ResourceLimitError):
        bases(uniform(25, 3))


def test_local_basis_exchange_on_c4(c4):
    exchange = local_basis_exchange(cycle_matroid(c4), [0, 1, 2])
    assert (exchange.a_size, exchange.b_size) == (3, 1)
    assert exchange.edge_count == 3
    assert exchange.labels == (0, 1, 2, 3)
    with pytest.raises(DomainError):
        local_basis_exchange(cycle_matroid(c4), [0, 1])


def test_fundamental_circuit(c4):
    matroid = cycle_matroid(c4)
    assert fundamental_circuit(matroid, [0, 1, 2], 3) == frozenset({0, 1, 2, 3})
    with pytest.raises(InvalidArgumentError):
        fundamental_circuit(matroid, [0, 1, 2], 1)


@pytest.mark.parametrize("n", [2, 4])
def test_doubled_uniform_exchange_graphs_are_h_nnn(n):
    matroid = parallel_double(uniform(3 * n // 2, n))
    target = h_abc(n, n, n)
    found = bases(matroid)
    assert found
    for basis in found:
        exchange = local_basis_exchange(matroid, basis)
        assert is_isomorphic(exchange, target)
        assert is_isomorphic(exchange, target.swap_parts(), respect_parts=True)
        assert nx.is_isomorphic(as_networkx(exchange), as_networkx(target))


def test_find_isomorphism_preserves_adjacency():
    first = h_abc(2, 3, 2)
    second = first.swap_parts()
    mapping = find_isomorphism(first, second)
    assert mapping is not None
    for i, j in first.edges():
        assert mapping[j] in second.adjacency[mapping[i]]


def test_isomorphism_respecting_parts():
    assert is_isomorphic(star(4), star(4, leaves_in_a=False))
    assert not is_isomorphic(star(4), star(4, leaves_in_a=False), respect_parts=True)
    assert not is_isomorphic(star(4), star(5))


def test_parse_matroid():
    loader = {"c4.json": cycle_multigraph(4)}.__getitem__
    assert parse_matroid("dual(uniform:4,1)", loader).full_rank == 3
    combined = parse_matroid("sum(uniform:2,1,uniform:3,3)", loader)
    assert (combined.ground_size, combined.full_rank) == (5, 4)
    graphic = parse_matroid("double(graphic:c4.json)", loader)
    assert (graphic.ground_size, graphic.full_rank) == (8, 3)
    assert graphic.descriptor == "double(graphic:c4.json)"
    for bad in ("bogus", "uniform:4,2)", "dual(uniform:4,2", "uniform:4"):
        with pytest.raises(InvalidArgumentError):
            parse_matroid(bad, loader)


# --- structural properties ---

def graphic(seed: int, vertices: int, extra: int):
    rng = np.random.default_rng(seed)
    return cycle_matroid(random_connected_multigraph(rng, vertices, vertices - 1 + extra))


small_uniform = st.integers(0, 6).flatmap(lambda m: st.builds(uniform, st.just(m), st.integers(0, m)))
small_graphic = st.builds(graphic, st.integers(0, 2 ** 32 - 1), st.integers(1, 5), st.integers(0, 3))
small_matroids = st.one_of(small_uniform, small_graphic, st.builds(dual, small_graphic),
                           st.builds(parallel_double, st.builds(uniform, st.integers(1, 3), st.just(1))))


def assert_rank_axioms(matroid):
    full = matroid.full_mask
    for mask in range(full + 1):
        size = bin(mask).count("1")
        rank = matroid.rank(mask)
        assert 0 <= rank <= size
        assert matroid.is_independent([e for e in range(matroid.ground_size) if mask >> e & 1]) == (rank == size)
        for e in range(matroid.ground_size):
            if mask >> e & 1:
                continue
            grown = matroid.rank(mask | 1 << e)
            assert rank <= grown <= rank + 1
            for f in range(e + 1, matroid.ground_size):
                if mask >> f & 1:
                    continue
                assert grown + matroid.rank(mask | 1 << f) >= matroid.rank(mask | 1 << e | 1 << f) + rank


@given(small_matroids)
def test_rank_axioms(matroid):
    assert matroid.rank(0) == 0
    assert_rank_axioms(matroid)


@pytest.mark.parametrize("matroid", [
    parallel_double(cycle_matroid(cycle_multigraph(6))),
    direct_sum(uniform(6, 3), dual(uniform(6, 2))),
    cycle_matroid(MultiGraph.from_pairs(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2),
                                            (1, 3), (2, 4), (3, 0), (4, 1), (0, 0), (1, 2)])),
], ids=["double-c6", "sum", "k5-plus"])
def test_rank_axioms_on_twelve_elements(matroid):
    assert matroid.ground_size == 12
    assert_rank_axioms(matroid)


@given(small_matroids)
def test_dual_bases_are_complements(matroid):
    ground = frozenset(range(matroid.ground_size))
    assert set(bases(dual(matroid))) == {ground - basis for basis in bases(matroid)}


@given(small_matroids)
def test_isolated_exchange_vertices_are_loops_or_coloops(matroid):
    loops, coloops = set(matroid.loops()), set(matroid.coloops())
    for basis in bases(matroid):
        exchange = local_basis_exchange(matroid, basis)
        isolated = {exchange.label(v) for v in exchange.isolated_vertices()}
        assert isolated == loops | coloops


@given(small_matroids)
def test_fundamental_circuit_size_is_exchange_degree_plus_one(matroid):
    found = set(circuits(matroid))
    for basis in bases(matroid):
        exchange = local_basis_exchange(matroid, basis)
        for v in range(exchange.a_size, exchange.vertex_count):
            circuit = fundamental_circuit(matroid, basis, exchange.label(v))
            assert len(circuit) == exchange.degree(v) + 1
            assert circuit in found


@pytest.mark.parametrize("graph", [
    cycle_multigraph(2),
    cycle_multigraph(3),
    cycle_multigraph(6),
    MultiGraph.from_pairs(2, [(0, 1), (0, 1), (0, 1)]),
    MultiGraph.from_pairs(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    MultiGraph.from_pairs(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]),
], ids=["c2", "c3", "c6", "theta3", "k4", "k23"])
def test_two_connected_graphs_have_connected_exchange_graphs(graph):
    simple = nx.Graph([(u, v) for u, v, _ in graph.edges])
    assert simple.number_of_nodes() < 3 or nx.is_biconnected(simple)
    matroid = cycle_matroid(graph)
    for basis in bases(matroid):
        exchange = local_basis_exchange(matroid, basis)
        assert len(connected_components(exchange)) == 1

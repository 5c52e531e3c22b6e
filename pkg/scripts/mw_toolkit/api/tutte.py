"""
Tutte Polynomials

Three independent computations used as mutual oracles:
- tutte_deletion_contraction: recursion on a MultiGraph
- tutte_matroid: corank-nullity expansion over all subsets of a rank oracle
- tutte_by_activities: internal/external activities of spanning trees

merino_welsh_check evaluates the max and product inequalities on a result.
"""
import logging
from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import DomainError, InvalidArgumentError, ResourceLimitError
from .graphs import MultiGraph, component_count, is_connected, spanning_trees
from .matroids import Matroid
from .polynomial import BivariatePolynomial

log = logging.getLogger(__name__)

MAX_RECURSION_EDGES = 24
MAX_SUBSET_GROUND = 24
MAX_ACTIVITY_EDGES = 16

Edge = Tuple[int, int, int]


def _is_bridge(vertex_count: int, edges: Sequence[Edge], edge: Edge) -> bool:
    others = [other for other in edges if other[2] != edge[2]]
    return component_count(vertex_count, others) > component_count(vertex_count, edges)


def _contract(edges: Sequence[Edge], edge: Edge) -> Tuple[Edge, ...]:
    keep, gone = edge[0], edge[1]
    contracted = []
    for u, v, label in edges:
        if label == edge[2]:
            continue
        contracted.append((keep if u == gone else u, keep if v == gone else v, label))
    return tuple(contracted)


def _deletion_contraction(vertex_count: int, edges: Tuple[Edge, ...]) -> Counter:
    for edge in sorted(edges, key=lambda e: e[2], reverse=True):
        if edge[0] == edge[1] or _is_bridge(vertex_count, edges, edge):
            continue
        deleted = tuple(other for other in edges if other[2] != edge[2])
        result = _deletion_contraction(vertex_count, deleted)
        result.update(_deletion_contraction(vertex_count, _contract(edges, edge)))
        return result
    loops = sum(1 for u, v, _ in edges if u == v)
    return Counter({(len(edges) - loops, loops): 1})


def tutte_deletion_contraction(graph: MultiGraph) -> BivariatePolynomial:
    """T_G by splitting on the highest-labelled edge that is neither a loop nor a bridge."""
    if graph.edge_count > MAX_RECURSION_EDGES:
        raise ResourceLimitError(f"deletion-contraction is capped at {MAX_RECURSION_EDGES} edges, got {graph.edge_count}")
    counts = _deletion_contraction(graph.vertex_count, tuple(graph.edges))
    return BivariatePolynomial.from_counts(counts)


def tutte_matroid(matroid: Matroid) -> BivariatePolynomial:
    """Sum over S of (x-1)^(r(E)-r(S)) (y-1)^(|S|-r(S)), with integer counts per (corank, nullity)."""
    if matroid.ground_size > MAX_SUBSET_GROUND:
        raise ResourceLimitError(f"subset expansion is capped at {MAX_SUBSET_GROUND} elements, got {matroid.ground_size}")
    full_rank = matroid.full_rank
    counts: Dict[Tuple[int, int], int] = Counter()
    for mask in range(1 << matroid.ground_size):
        r = matroid.rank(mask)
        counts[(full_rank - r, bin(mask).count("1") - r)] += 1
    log.debug("expanded %d subsets of %s", 1 << matroid.ground_size, matroid.descriptor)
    return BivariatePolynomial.from_corank_nullity(counts)


def _tree_side(vertex_count: int, tree_edges: List[Edge], removed: Edge) -> List[bool]:
    """Two-colour T - e: True for the vertices reachable from the first endpoint of e."""
    neighbors: List[List[int]] = [[] for _ in range(vertex_count)]
    for u, v, label in tree_edges:
        if label != removed[2]:
            neighbors[u].append(v)
            neighbors[v].append(u)
    side = [False] * vertex_count
    side[removed[0]] = True
    queue = deque([removed[0]])
    while queue:
        v = queue.popleft()
        for u in neighbors[v]:
            if not side[u]:
                side[u] = True
                queue.append(u)
    return side


def _tree_path(vertex_count: int, tree_edges: List[Edge], start: int, end: int) -> List[int]:
    """Labels on the tree path from start to end."""
    neighbors: List[List[Tuple[int, int]]] = [[] for _ in range(vertex_count)]
    for u, v, label in tree_edges:
        neighbors[u].append((v, label))
        neighbors[v].append((u, label))
    previous: Dict[int, Tuple[int, int]] = {start: (start, 0)}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        if v == end:
            break
        for u, label in neighbors[v]:
            if u not in previous:
                previous[u] = (v, label)
                queue.append(u)
    path = []
    v = end
    while v != start:
        v, label = previous[v]
        path.append(label)
    return path


def tutte_by_activities(graph: MultiGraph, labeling: Optional[Sequence[int]] = None) -> BivariatePolynomial:
    """
    T_G as the sum over spanning trees of x^ia(T) y^ea(T).

    labeling[k-1] is the rank given to the edge labelled k (a permutation of
    1..m); the identity is used when omitted.
    """
    if graph.edge_count > MAX_ACTIVITY_EDGES:
        raise ResourceLimitError(f"activity counting is capped at {MAX_ACTIVITY_EDGES} edges, got {graph.edge_count}")
    if not is_connected(graph):
        raise DomainError("activities need a connected graph")
    if labeling is None:
        labeling = list(range(1, graph.edge_count + 1))
    if sorted(labeling) != list(range(1, graph.edge_count + 1)):
        raise InvalidArgumentError("labeling must be a permutation of the edge labels 1..m")
    rank = {label: labeling[label - 1] for label in range(1, graph.edge_count + 1)}

    counts: Counter = Counter()
    for tree in spanning_trees(graph):
        tree_edges = [edge for edge in graph.edges if edge[2] in tree]
        internal = 0
        for edge in tree_edges:
            side = _tree_side(graph.vertex_count, tree_edges, edge)
            cut = [other[2] for other in graph.edges if side[other[0]] != side[other[1]]]
            if rank[edge[2]] == max(rank[label] for label in cut):
                internal += 1
        external = 0
        for edge in graph.edges:
            if edge[2] in tree:
                continue
            cycle = _tree_path(graph.vertex_count, tree_edges, edge[0], edge[1]) + [edge[2]]
            if rank[edge[2]] == max(rank[label] for label in cycle):
                external += 1
        counts[(internal, external)] += 1
    return BivariatePolynomial.from_counts(counts)


@dataclass(frozen=True)
class MerinoWelshCheck:
    """T(1,1), T(2,0), T(0,2) and both forms of the inequality."""

    bases: Fraction
    acyclic: Fraction
    totally_cyclic: Fraction

    @property
    def max_version_holds(self) -> bool:
        return max(self.acyclic, self.totally_cyclic) >= self.bases

    @property
    def product_version_holds(self) -> bool:
        return self.acyclic * self.totally_cyclic >= self.bases ** 2

    @property
    def product_margin(self) -> Fraction:
        return self.acyclic * self.totally_cyclic - self.bases ** 2


def merino_welsh_check(polynomial: BivariatePolynomial) -> MerinoWelshCheck:
    return MerinoWelshCheck(
        bases=polynomial.evaluate(Fraction(1), Fraction(1)),
        acyclic=polynomial.evaluate(Fraction(2), Fraction(0)),
        totally_cyclic=polynomial.evaluate(Fraction(0), Fraction(2)),
    )

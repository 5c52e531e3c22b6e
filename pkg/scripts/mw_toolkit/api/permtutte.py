"""
Permutation Tutte Polynomial

For a bipartite graph H on m vertices, T~_H(x, y) = (1/m!) sum over orderings
of x^ia * y^ea, where a vertex is active when it is larger than all of its
neighbours (a vertex without neighbours is always active).

Provides exact evaluation, the star closed form, seeded Monte Carlo
estimation, the product lower bounds, the transfer identity check against
Tutte polynomials, the gluing inequality check and a random conjecture scan.
"""
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .errors import DomainError, InvalidArgumentError, ResourceLimitError
from .graphs import (BipartiteGraph, MultiGraph, connected_components, is_connected,
                     random_bipartite_graph, spanning_trees)
from .matroids import cycle_matroid, local_basis_exchange
from .polynomial import BivariatePolynomial, poly_add, poly_eval, poly_product
from .tutte import tutte_deletion_contraction

log = logging.getLogger(__name__)

MAX_EXACT_VERTICES = 11
MAX_TRANSFER_EDGES = 8
MC_BLOCK_SIZE = 1 << 16
SCAN_MAX_VERTICES = 10


@dataclass(frozen=True)
class ActivityProfile:
    ia: int
    ea: int


@dataclass(frozen=True)
class McEstimate:
    mean: float
    stderr: float
    samples: int
    seed: int

    def to_dict(self) -> Dict[str, object]:
        return {"mean": self.mean, "stderr": self.stderr, "samples": self.samples, "seed": self.seed}


def activity_profile(graph: BipartiteGraph, ranks: Sequence) -> ActivityProfile:
    """Active vertices per part for one ordering; ranks[v] is the position of v."""
    ia = ea = 0
    for v, neighbors in enumerate(graph.adjacency):
        if all(ranks[v] > ranks[u] for u in neighbors):
            if graph.in_part_a(v):
                ia += 1
            else:
                ea += 1
    return ActivityProfile(ia, ea)


def perm_tutte_exact(graph: BipartiteGraph) -> BivariatePolynomial:
    """Exact T~_H as the product of T~ over the connected components."""
    components = connected_components(graph)
    if len(components) == 1:
        return _perm_tutte_connected(graph)
    return poly_product(_perm_tutte_connected(component) for component in components)


def _perm_tutte_connected(graph: BipartiteGraph) -> BivariatePolynomial:
    """
    Exact T~_H with denominator m!.

    Orderings are built smallest-first over vertex subsets: a vertex added to
    the set S of smaller vertices is active exactly when all its neighbours
    are already in S, so counts per (ia, ea) only depend on S.
    """
    m = graph.vertex_count
    if m > MAX_EXACT_VERTICES:
        raise ResourceLimitError(
            f"exact permutation Tutte is capped at {MAX_EXACT_VERTICES} vertices per component, got {m}")
    neighbor_masks = [sum(1 << u for u in neighbors) for neighbors in graph.adjacency]
    a_mask = (1 << graph.a_size) - 1
    layers: List[Dict[Tuple[int, int], int]] = [dict() for _ in range(1 << m)]
    layers[0][(0, 0)] = 1
    for subset in range(1 << m):
        counts = layers[subset]
        if not counts:
            continue
        for v in range(m):
            bit = 1 << v
            if subset & bit:
                continue
            target = layers[subset | bit]
            active = neighbor_masks[v] & ~subset == 0
            shift = (1, 0) if active and a_mask & bit else (0, 1) if active else (0, 0)
            for (ia, ea), count in counts.items():
                key = (ia + shift[0], ea + shift[1])
                target[key] = target.get(key, 0) + count
        if subset != (1 << m) - 1:
            layers[subset] = {}
    return BivariatePolynomial.from_counts(layers[(1 << m) - 1], math.factorial(m))


def star_closed_form(k: int, leaves_in_a: bool = True) -> BivariatePolynomial:
    """(x^(k-1) + ... + x + y)/k for leaves in A; the transpose for the centre in A."""
    if k < 2:
        raise InvalidArgumentError(f"a star needs k >= 2 vertices, got {k}")
    terms = {(i, 0): Fraction(1, k) for i in range(1, k)}
    terms[(0, 1)] = Fraction(1, k)
    polynomial = BivariatePolynomial(terms)
    return polynomial if leaves_in_a else polynomial.transpose()


# --- Monte Carlo ---

@dataclass(frozen=True)
class _SamplingPlan:
    """Per-vertex data for vectorised activity checks; vertices with equal neighbourhoods share a group."""

    a_size: int
    vertex_count: int
    core: Tuple[int, ...]
    neighbors: Tuple[np.ndarray, ...]
    groups: Tuple[int, ...]
    leaf_counts: Tuple[int, ...]


def _sampling_plan(graph: BipartiteGraph, integrate_leaves: bool) -> _SamplingPlan:
    pendant = set()
    if integrate_leaves:
        pendant = {v for v, neighbors in enumerate(graph.adjacency)
                   if len(neighbors) == 1 and graph.degree(neighbors[0]) >= 2}
    core = tuple(v for v in range(graph.vertex_count) if v not in pendant)
    kept = [tuple(u for u in graph.adjacency[v] if u not in pendant) for v in range(graph.vertex_count)]
    group_of: Dict[Tuple[int, ...], int] = {}
    groups = tuple(group_of.setdefault(neighbors, len(group_of)) for neighbors in kept)
    neighbors = tuple(np.array(neighbors, dtype=np.int64) for neighbors in kept)
    leaf_counts = tuple(sum(1 for u in graph.adjacency[v] if u in pendant) for v in range(graph.vertex_count))
    return _SamplingPlan(graph.a_size, graph.vertex_count, core, neighbors, groups, leaf_counts)


def _block_generator(seed: int, block: int) -> np.random.Generator:
    sequence = np.random.SeedSequence(entropy=seed % (1 << 128), spawn_key=(block,))
    return np.random.Generator(np.random.Philox(sequence))


def _block_weights(plan: _SamplingPlan, x: float, y: float, seed: int, block: int, count: int) -> np.ndarray:
    uniforms = _block_generator(seed, block).random((count, plan.vertex_count))
    weights = np.ones(count)
    largest_by_group: Dict[int, np.ndarray] = {}
    for v in plan.core:
        own = uniforms[:, v]
        neighbors = plan.neighbors[v]
        if neighbors.size:
            largest = largest_by_group.get(plan.groups[v])
            if largest is None:
                largest = uniforms[:, neighbors].max(axis=1)
                largest_by_group[plan.groups[v]] = largest
            active = own > largest
            ties = own == largest
            if ties.any():
                # equal uniforms: the larger vertex index wins
                others = uniforms[ties][:, neighbors]
                beats = (own[ties, None] > others) | ((own[ties, None] == others) & (v > neighbors))
                active[ties] = beats.all(axis=1)
        else:
            active = np.ones(count, dtype=bool)
        base, leaf_base = (x, y) if v < plan.a_size else (y, x)
        leaves = plan.leaf_counts[v]
        if leaves == 0:
            weights *= np.where(active, base, 1.0)
        else:
            # leaves of v integrated out given U_v
            mixed = (own + leaf_base * (1.0 - own)) ** leaves
            all_below = own ** leaves
            weights *= np.where(active, base * all_below + mixed - all_below, mixed)
    return weights


def _block_moments(plan: _SamplingPlan, x: float, y: float, seed: int, block: int, count: int):
    weights = _block_weights(plan, x, y, seed, block, count)
    mean = float(weights.mean())
    return count, mean, float(((weights - mean) ** 2).sum())


def perm_tutte_mc(graph: BipartiteGraph, x: float, y: float, samples: int, seed: int,
                  workers: int = 1, integrate_leaves: bool = False,
                  block_size: int = MC_BLOCK_SIZE) -> McEstimate:
    """
    Estimate T~_H(x, y) as the mean of x^I(A) y^I(B) under i.i.d. uniform labels.

    Samples are split into fixed blocks; block b draws from a Philox stream
    keyed by (seed, b), and block moments are merged in block order, so the
    result depends only on (seed, samples, block_size).
    """
    if samples < 1:
        raise InvalidArgumentError(f"samples must be at least 1, got {samples}")
    if x < 0 or y < 0:
        raise InvalidArgumentError(f"x and y must be non-negative, got ({x}, {y})")
    if block_size < 1:
        raise InvalidArgumentError(f"block size must be at least 1, got {block_size}")
    plan = _sampling_plan(graph, integrate_leaves)
    x, y = float(x), float(y)
    blocks = [(b, min(block_size, samples - b * block_size)) for b in range((samples + block_size - 1) // block_size)]

    if workers > 1 and len(blocks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            moments = list(pool.map(lambda item: _block_moments(plan, x, y, seed, item[0], item[1]), blocks))
    else:
        moments = [_block_moments(plan, x, y, seed, b, count) for b, count in blocks]

    total, mean, squares = 0, 0.0, 0.0
    for count, block_mean, block_squares in moments:
        combined = total + count
        delta = block_mean - mean
        mean += delta * count / combined
        squares += block_squares + delta * delta * total * count / combined
        total = combined
    stderr = math.sqrt(squares / (total - 1)) / math.sqrt(total) if total > 1 else 0.0
    log.debug("mc estimate %.6g +/- %.2g over %d blocks", mean, stderr, len(blocks))
    return McEstimate(mean=mean, stderr=stderr, samples=samples, seed=seed)


# --- lower bounds ---

def fkg_lower_bound(graph: BipartiteGraph, x, y) -> Fraction:
    """Product of (1 + (x-1)/(d+1)) over A and (1 + (y-1)/(d+1)) over B."""
    x, y = Fraction(x), Fraction(y)
    if not ((0 <= x <= 1 and y >= 1) or (0 <= y <= 1 and x >= 1)):
        raise DomainError(f"the product bound needs one of x, y in [0, 1] and the other >= 1, got ({x}, {y})")
    bound = Fraction(1)
    for v in range(graph.vertex_count):
        value = x if graph.in_part_a(v) else y
        bound *= 1 + (value - 1) / (graph.degree(v) + 1)
    return bound


def fkg_weighted_bound(graph: BipartiteGraph, x_weights: Sequence, y_weights: Sequence) -> Fraction:
    """Product of (x_i + d_i)/(d_i + 1) over A and (y_j + d_j)/(d_j + 1) over B."""
    if len(x_weights) != graph.a_size or len(y_weights) != graph.b_size:
        raise InvalidArgumentError(
            f"expected {graph.a_size} x-weights and {graph.b_size} y-weights, got {len(x_weights)} and {len(y_weights)}")
    x_weights = [Fraction(w) for w in x_weights]
    y_weights = [Fraction(w) for w in y_weights]
    if any(w < 1 for w in x_weights):
        raise DomainError("x-weights must be at least 1")
    if any(not 0 <= w <= 1 for w in y_weights):
        raise DomainError("y-weights must lie in [0, 1]")
    bound = Fraction(1)
    for v in range(graph.vertex_count):
        weight = x_weights[v] if graph.in_part_a(v) else y_weights[v - graph.a_size]
        d = graph.degree(v)
        bound *= (weight + d) / (d + 1)
    return bound


# --- transfer identity ---

@dataclass(frozen=True)
class TransferReport:
    holds: bool
    residual: BivariatePolynomial
    tutte: BivariatePolynomial
    transfer_sum: BivariatePolynomial
    tree_count: int


def verify_transfer_identity(graph: MultiGraph) -> TransferReport:
    """T_G against the sum of T~ over the exchange graphs H[T] of all spanning trees."""
    if graph.edge_count > MAX_TRANSFER_EDGES:
        raise ResourceLimitError(f"transfer identity check is capped at {MAX_TRANSFER_EDGES} edges, got {graph.edge_count}")
    if not is_connected(graph):
        raise DomainError("the transfer identity needs a connected graph")
    tutte = tutte_deletion_contraction(graph)
    matroid = cycle_matroid(graph)
    total = BivariatePolynomial.zero()
    trees = spanning_trees(graph)
    for tree in trees:
        exchange = local_basis_exchange(matroid, [label - 1 for label in tree])
        total = poly_add(total, perm_tutte_exact(exchange))
    residual = tutte - total
    return TransferReport(residual.is_zero(), residual, tutte, total, len(trees))


# --- gluing ---

def glue(first: BipartiteGraph, first_root: int, second: BipartiteGraph, second_root: int) -> Tuple[BipartiteGraph, int]:
    """Identify first_root with second_root; returns the glued graph and the index of the shared vertex."""
    for graph, root, name in ((first, first_root, "root1"), (second, second_root, "root2")):
        if not 0 <= root < graph.vertex_count:
            raise InvalidArgumentError(f"{name}={root} is not a vertex of its graph")
    root_in_a = first.in_part_a(first_root)
    if root_in_a != second.in_part_a(second_root):
        raise InvalidArgumentError("glued roots must lie in the same part")

    a_size = first.a_size + second.a_size - (1 if root_in_a else 0)
    b_size = first.b_size + second.b_size - (0 if root_in_a else 1)

    def first_index(v: int) -> int:
        return v if first.in_part_a(v) else a_size + (v - first.a_size)

    second_a = [v for v in range(second.a_size) if not (root_in_a and v == second_root)]
    second_b = [v for v in range(second.a_size, second.vertex_count) if not (not root_in_a and v == second_root)]
    position = {v: first.a_size + t for t, v in enumerate(second_a)}
    position.update({v: a_size + first.b_size + t for t, v in enumerate(second_b)})
    position[second_root] = first_index(first_root)

    edges = [(first_index(i), first_index(j)) for i, j in first.edges()]
    edges += [(position[i], position[j]) for i, j in second.edges()]
    return BipartiteGraph.from_edges(a_size, b_size, edges), first_index(first_root)


@dataclass(frozen=True)
class GluingReport:
    root_in_a: bool
    glued: BipartiteGraph
    glued_value: Fraction
    first_value: Fraction
    second_value: Fraction
    lhs: Fraction
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs >= self.rhs


def check_gluing(first: BipartiteGraph, first_root: int, second: BipartiteGraph, second_root: int,
                 x, y) -> GluingReport:
    """x*T~_H >= T~_H1 T~_H2 for a root in A, T~_H >= T~_H1 T~_H2 for a root in B."""
    x, y = Fraction(x), Fraction(y)
    if x < 1 or not 0 <= y <= 1:
        raise DomainError(f"the gluing inequality needs x >= 1 and 0 <= y <= 1, got ({x}, {y})")
    glued, _ = glue(first, first_root, second, second_root)
    root_in_a = first.in_part_a(first_root)
    glued_value = poly_eval(perm_tutte_exact(glued), x, y)
    first_value = poly_eval(perm_tutte_exact(first), x, y)
    second_value = poly_eval(perm_tutte_exact(second), x, y)
    lhs = x * glued_value if root_in_a else glued_value
    return GluingReport(root_in_a, glued, glued_value, first_value, second_value, lhs, first_value * second_value)


# --- conjecture scan ---

def conjecture_scan(min_degree: int, trials: int, seed: int,
                    max_vertices: int = SCAN_MAX_VERTICES) -> List[BipartiteGraph]:
    """Random graphs of the given minimum degree with T~(2,0) T~(0,2) < 1."""
    if min_degree < 1:
        raise InvalidArgumentError(f"min_degree must be at least 1, got {min_degree}")
    rng = np.random.default_rng(seed)
    two, zero = Fraction(2), Fraction(0)
    violations = []
    for trial in range(trials):
        graph = random_bipartite_graph(rng, max_vertices, min_degree)
        polynomial = perm_tutte_exact(graph)
        if polynomial.evaluate(two, zero) * polynomial.evaluate(zero, two) < 1:
            log.info("trial %d: violation on %d+%d vertices", trial, graph.a_size, graph.b_size)
            violations.append(graph)
    return violations

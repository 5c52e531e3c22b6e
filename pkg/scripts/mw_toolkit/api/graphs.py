"""
Graph Containers and Named Families

- BipartiteGraph: parts A (indices 0..a_size-1) and B (a_size..), cross-part adjacency only
- MultiGraph: labelled edges 1..m, loops and parallel edges allowed
- Families: complete bipartite K_{a,b}, stars S_k, H_{a,b,c} (K_{a,b} plus pendant leaves)
- Spanning tree enumeration, components, JSON codecs and seeded random generators
"""
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from .errors import DomainError, InvalidArgumentError


@dataclass(frozen=True)
class BipartiteGraph:
    """Simple bipartite graph; A occupies the low index range, B the high one."""

    a_size: int
    b_size: int
    adjacency: Tuple[Tuple[int, ...], ...]
    labels: Optional[Tuple[Any, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        if self.a_size < 0 or self.b_size < 0:
            raise InvalidArgumentError("part sizes must be non-negative")
        n = self.a_size + self.b_size
        if len(self.adjacency) != n:
            raise InvalidArgumentError(f"adjacency has {len(self.adjacency)} rows for {n} vertices")
        if self.labels is not None and len(self.labels) != n:
            raise InvalidArgumentError(f"labels has {len(self.labels)} entries for {n} vertices")
        for v, neighbors in enumerate(self.adjacency):
            if list(neighbors) != sorted(set(neighbors)):
                raise InvalidArgumentError(f"neighbors of vertex {v} must be sorted and distinct")
            for u in neighbors:
                if not 0 <= u < n:
                    raise InvalidArgumentError(f"vertex {v} has out-of-range neighbor {u}")
                if self.in_part_a(u) == self.in_part_a(v):
                    raise InvalidArgumentError(f"edge ({v}, {u}) does not cross the parts")
                if v not in self.adjacency[u]:
                    raise InvalidArgumentError(f"adjacency is not symmetric at ({v}, {u})")

    @classmethod
    def from_edges(cls, a_size: int, b_size: int, edges, labels=None) -> "BipartiteGraph":
        """Build from (i, j) pairs with i in A and j in B (absolute index)."""
        n = a_size + b_size
        neighbor_sets = [set() for _ in range(n)]
        for i, j in edges:
            if not (0 <= i < a_size and a_size <= j < n):
                raise InvalidArgumentError(f"edge [{i}, {j}] must join an A-index to a B-index")
            if j in neighbor_sets[i]:
                raise InvalidArgumentError(f"edge [{i}, {j}] is repeated")
            neighbor_sets[i].add(j)
            neighbor_sets[j].add(i)
        adjacency = tuple(tuple(sorted(neighbors)) for neighbors in neighbor_sets)
        return cls(a_size, b_size, adjacency, tuple(labels) if labels is not None else None)

    @property
    def vertex_count(self) -> int:
        return self.a_size + self.b_size

    @property
    def edge_count(self) -> int:
        return sum(len(self.adjacency[v]) for v in range(self.a_size))

    def in_part_a(self, v: int) -> bool:
        return v < self.a_size

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(len(neighbors) for neighbors in self.adjacency)

    def edges(self) -> List[Tuple[int, int]]:
        return [(i, j) for i in range(self.a_size) for j in self.adjacency[i]]

    def isolated_vertices(self) -> List[int]:
        return [v for v, neighbors in enumerate(self.adjacency) if not neighbors]

    def label(self, v: int):
        return self.labels[v] if self.labels is not None else v

    def swap_parts(self) -> "BipartiteGraph":
        """The same graph with the roles of A and B exchanged."""
        order = list(range(self.a_size, self.vertex_count)) + list(range(self.a_size))
        position = {old: new for new, old in enumerate(order)}
        edges = [(position[j], position[i]) for i, j in self.edges()]
        labels = [self.label(v) for v in order] if self.labels is not None else None
        return BipartiteGraph.from_edges(self.b_size, self.a_size, edges, labels)

    def disjoint_union(self, other: "BipartiteGraph") -> "BipartiteGraph":
        """Place `other` beside this graph, keeping both part assignments."""
        a_size = self.a_size + other.a_size
        b_size = self.b_size + other.b_size

        def relocate(graph: "BipartiteGraph", v: int, a_offset: int, b_offset: int) -> int:
            if graph.in_part_a(v):
                return v + a_offset
            return a_size + b_offset + (v - graph.a_size)

        edges = [(relocate(self, i, 0, 0), relocate(self, j, 0, 0)) for i, j in self.edges()]
        edges += [(relocate(other, i, self.a_size, self.b_size), relocate(other, j, self.a_size, self.b_size))
                  for i, j in other.edges()]
        return BipartiteGraph.from_edges(a_size, b_size, edges)


@dataclass(frozen=True)
class MultiGraph:
    """Multigraph with edges (u, v, label); labels are 1..m in list order."""

    vertex_count: int
    edges: Tuple[Tuple[int, int, int], ...]

    def __post_init__(self):
        if self.vertex_count < 1:
            raise InvalidArgumentError("a multigraph needs at least one vertex")
        labels = sorted(label for _, _, label in self.edges)
        if labels != list(range(1, len(self.edges) + 1)):
            raise InvalidArgumentError("edge labels must be exactly 1..m")
        for u, v, label in self.edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise InvalidArgumentError(f"edge {label} has an endpoint outside 0..{self.vertex_count - 1}")

    @classmethod
    def from_pairs(cls, vertex_count: int, pairs: Sequence[Tuple[int, int]]) -> "MultiGraph":
        return cls(vertex_count, tuple((int(u), int(v), label) for label, (u, v) in enumerate(pairs, start=1)))

    @property
    def edge_count(self) -> int:
        return len(self.edges)


# --- union-find ---

def _find(parent: List[int], v: int) -> int:
    while parent[v] != v:
        parent[v] = parent[parent[v]]
        v = parent[v]
    return v


def component_count(vertex_count: int, edges) -> int:
    """Number of components of the graph on vertex_count vertices with the given (u, v, ...) edges."""
    parent = list(range(vertex_count))
    components = vertex_count
    for edge in edges:
        root_u, root_v = _find(parent, edge[0]), _find(parent, edge[1])
        if root_u != root_v:
            parent[root_u] = root_v
            components -= 1
    return components


def is_connected(graph: MultiGraph) -> bool:
    return component_count(graph.vertex_count, graph.edges) == 1


# --- named families ---

def complete_bipartite(a: int, b: int) -> BipartiteGraph:
    if a < 1 or b < 1:
        raise InvalidArgumentError(f"K_(a,b) needs a, b >= 1, got ({a}, {b})")
    return BipartiteGraph.from_edges(a, b, [(i, a + j) for i in range(a) for j in range(b)])


def star(k: int, leaves_in_a: bool = True) -> BipartiteGraph:
    """S_k: a centre of degree k-1 and k-1 leaves; leaves_in_a puts the leaves in part A."""
    if k < 2:
        raise InvalidArgumentError(f"a star needs k >= 2 vertices, got {k}")
    if leaves_in_a:
        return BipartiteGraph.from_edges(k - 1, 1, [(i, k - 1) for i in range(k - 1)])
    return BipartiteGraph.from_edges(1, k - 1, [(0, j) for j in range(1, k)])


def h_abc(a: int, b: int, c: int) -> BipartiteGraph:
    """
    H_{a,b,c}: K_{a,b} with c pendant leaves on the first c vertices of B.

    Part A holds the a complete-side vertices followed by the c leaves,
    so the part sizes are (a + c, b).
    """
    if a < 1 or b < 1:
        raise InvalidArgumentError(f"H_(a,b,c) needs a, b >= 1, got ({a}, {b})")
    if not 0 <= c <= b:
        raise InvalidArgumentError(f"H_(a,b,c) needs 0 <= c <= b, got c={c}, b={b}")
    a_size = a + c
    edges = [(i, a_size + j) for i in range(a) for j in range(b)]
    edges += [(a + t, a_size + t) for t in range(c)]
    return BipartiteGraph.from_edges(a_size, b, edges)


def cycle_multigraph(n: int) -> MultiGraph:
    """C_n with edge t+1 joining t and t+1 (mod n); n = 1 is a loop, n = 2 a parallel pair."""
    if n < 1:
        raise InvalidArgumentError(f"a cycle needs n >= 1, got {n}")
    return MultiGraph.from_pairs(n, [(t, (t + 1) % n) for t in range(n)])


# --- structure ---

def connected_components(graph: BipartiteGraph) -> List[BipartiteGraph]:
    """Maximal connected pieces, re-indexed with A first; labels record the original names."""
    seen = [False] * graph.vertex_count
    components = []
    for start in range(graph.vertex_count):
        if seen[start]:
            continue
        seen[start] = True
        members = [start]
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in graph.adjacency[v]:
                if not seen[u]:
                    seen[u] = True
                    members.append(u)
                    queue.append(u)
        a_members = sorted(v for v in members if graph.in_part_a(v))
        b_members = sorted(v for v in members if not graph.in_part_a(v))
        position = {old: new for new, old in enumerate(a_members + b_members)}
        edges = [(position[i], position[j]) for i in a_members for j in graph.adjacency[i]]
        labels = [graph.label(v) for v in a_members + b_members]
        components.append(BipartiteGraph.from_edges(len(a_members), len(b_members), edges, labels))
    return components


def spanning_trees(graph: MultiGraph) -> List[FrozenSet[int]]:
    """All spanning trees as sets of edge labels, by include/exclude recursion over the edge list."""
    if not is_connected(graph):
        raise DomainError("spanning trees need a connected graph")
    needed = graph.vertex_count - 1
    edges = graph.edges
    trees: List[FrozenSet[int]] = []

    def extend(index: int, chosen: List[int], parent: List[int]) -> None:
        if len(chosen) == needed:
            trees.append(frozenset(chosen))
            return
        if len(edges) - index < needed - len(chosen):
            return
        u, v, label = edges[index]
        root_u, root_v = _find(parent, u), _find(parent, v)
        if root_u != root_v:
            merged = list(parent)
            merged[root_u] = root_v
            extend(index + 1, chosen + [label], merged)
        extend(index + 1, chosen, parent)

    extend(0, [], list(range(graph.vertex_count)))
    return trees


# --- JSON codecs ---

def _require_int(data: Dict[str, Any], key: str, minimum: int = 0) -> int:
    if key not in data:
        raise InvalidArgumentError(f"missing field '{key}'")
    value = data[key]
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise InvalidArgumentError(f"field '{key}' must be an integer >= {minimum}, got {value!r}")
    return value


def _require_pairs(data: Dict[str, Any], key: str = "edges") -> List[Tuple[int, int]]:
    if key not in data:
        raise InvalidArgumentError(f"missing field '{key}'")
    pairs = data[key]
    if not isinstance(pairs, list):
        raise InvalidArgumentError(f"field '{key}' must be a list of [u, v] pairs")
    result = []
    for position, pair in enumerate(pairs):
        if (not isinstance(pair, (list, tuple)) or len(pair) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in pair)):
            raise InvalidArgumentError(f"field '{key}[{position}]' must be a two-element integer array")
        result.append((pair[0], pair[1]))
    return result


def bipartite_from_dict(data: Dict[str, Any]) -> BipartiteGraph:
    if not isinstance(data, dict):
        raise InvalidArgumentError("a bipartite graph must be a JSON object")
    a_size = _require_int(data, "a_size")
    b_size = _require_int(data, "b_size")
    edges = _require_pairs(data)
    for position, (i, j) in enumerate(edges):
        if not (0 <= i < a_size and a_size <= j < a_size + b_size):
            raise InvalidArgumentError(f"field 'edges[{position}]' = [{i}, {j}] must join an A-index to a B-index")
    return BipartiteGraph.from_edges(a_size, b_size, edges)


def bipartite_to_dict(graph: BipartiteGraph) -> Dict[str, Any]:
    return {"a_size": graph.a_size, "b_size": graph.b_size, "edges": [list(edge) for edge in graph.edges()]}


def multigraph_from_dict(data: Dict[str, Any]) -> MultiGraph:
    if not isinstance(data, dict):
        raise InvalidArgumentError("a multigraph must be a JSON object")
    vertices = _require_int(data, "vertices", minimum=1)
    pairs = _require_pairs(data)
    for position, (u, v) in enumerate(pairs):
        if not (0 <= u < vertices and 0 <= v < vertices):
            raise InvalidArgumentError(f"field 'edges[{position}]' = [{u}, {v}] has an endpoint outside 0..{vertices - 1}")
    return MultiGraph.from_pairs(vertices, pairs)


def multigraph_to_dict(graph: MultiGraph) -> Dict[str, Any]:
    ordered = sorted(graph.edges, key=lambda edge: edge[2])
    return {"vertices": graph.vertex_count, "edges": [[u, v] for u, v, _ in ordered]}


# --- random generation ---

def random_connected_multigraph(rng: np.random.Generator, vertices: int, edges: int) -> MultiGraph:
    """Random spanning tree on `vertices` vertices plus extra uniformly chosen edges (loops and parallels allowed)."""
    if vertices < 1 or edges < vertices - 1:
        raise InvalidArgumentError(f"cannot build a connected graph with {vertices} vertices and {edges} edges")
    order = [int(v) for v in rng.permutation(vertices)]
    pairs = [(order[t], order[int(rng.integers(0, t))]) for t in range(1, vertices)]
    while len(pairs) < edges:
        pairs.append((int(rng.integers(0, vertices)), int(rng.integers(0, vertices))))
    shuffled = [pairs[int(t)] for t in rng.permutation(len(pairs))]
    return MultiGraph.from_pairs(vertices, shuffled)


def random_bipartite_graph(rng: np.random.Generator, max_vertices: int, min_degree: int = 0,
                           edge_probability: float = 0.5) -> BipartiteGraph:
    """
    Random bipartite graph on at most max_vertices vertices whose minimum degree is at least min_degree.

    Part sizes are drawn so both parts can meet the degree bound; vertices
    short of min_degree are then joined to random non-neighbours.
    """
    smallest_part = max(1, min_degree)
    if max_vertices < 2 * smallest_part:
        raise InvalidArgumentError(
            f"min degree {min_degree} needs at least {2 * smallest_part} vertices, cap is {max_vertices}")
    total = int(rng.integers(2 * smallest_part, max_vertices + 1))
    a_size = int(rng.integers(smallest_part, total - smallest_part + 1))
    b_size = total - a_size
    neighbor_sets = [set() for _ in range(total)]
    for i in range(a_size):
        for j in range(a_size, total):
            if rng.random() < edge_probability:
                neighbor_sets[i].add(j)
                neighbor_sets[j].add(i)
    for v in range(total):
        others = list(range(a_size, total)) if v < a_size else list(range(a_size))
        missing = [u for u in others if u not in neighbor_sets[v]]
        while len(neighbor_sets[v]) < min_degree:
            u = missing.pop(int(rng.integers(0, len(missing))))
            neighbor_sets[v].add(u)
            neighbor_sets[u].add(v)
    edges = [(i, j) for i in range(a_size) for j in sorted(neighbor_sets[i])]
    return BipartiteGraph.from_edges(a_size, b_size, edges)

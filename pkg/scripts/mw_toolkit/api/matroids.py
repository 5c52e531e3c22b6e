"""
Matroids as Rank Oracles

A Matroid is a ground set 0..m-1 plus a rank function over bitmasks.
Element i of a graphic matroid is the edge labelled i+1.

Provides:
- constructors: uniform, cycle_matroid, dual, parallel_double, direct_sum
- enumeration: bases, circuits (capped), fundamental_circuit
- local_basis_exchange: the bipartite exchange graph H[A] of a basis A
- is_isomorphic / find_isomorphism for small bipartite graphs
- parse_matroid: the CLI descriptor grammar
"""
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional

from .errors import DomainError, InvalidArgumentError, ResourceLimitError
from .graphs import BipartiteGraph, MultiGraph, component_count

MAX_BASIS_GROUND = 24
MAX_CIRCUIT_GROUND = 20


@dataclass(frozen=True)
class Matroid:
    """Ground set size, rank oracle over bitmasks and a provenance tag."""

    ground_size: int
    rank: Callable[[int], int]
    descriptor: str

    @property
    def full_mask(self) -> int:
        return (1 << self.ground_size) - 1

    @property
    def full_rank(self) -> int:
        return self.rank(self.full_mask)

    def rank_of(self, elements: Iterable[int]) -> int:
        return self.rank(to_mask(elements))

    def is_independent(self, elements: Iterable[int]) -> bool:
        mask = to_mask(elements)
        return self.rank(mask) == bin(mask).count("1")

    def is_basis(self, elements: Iterable[int]) -> bool:
        mask = to_mask(elements)
        size = bin(mask).count("1")
        return size == self.full_rank and self.rank(mask) == size

    def loops(self) -> List[int]:
        return [e for e in range(self.ground_size) if self.rank(1 << e) == 0]

    def coloops(self) -> List[int]:
        full = self.full_rank
        return [e for e in range(self.ground_size) if self.rank(self.full_mask & ~(1 << e)) < full]


def to_mask(elements: Iterable[int]) -> int:
    mask = 0
    for e in elements:
        mask |= 1 << e
    return mask


def _cached(rank: Callable[[int], int]) -> Callable[[int], int]:
    return lru_cache(maxsize=1 << 16)(rank)


# --- constructors ---

def uniform(m: int, n: int) -> Matroid:
    if m < 0 or not 0 <= n <= m:
        raise InvalidArgumentError(f"uniform matroid needs 0 <= n <= m, got m={m}, n={n}")
    return Matroid(m, lambda mask: min(bin(mask).count("1"), n), f"uniform:{m},{n}")


def cycle_matroid(graph: MultiGraph, descriptor: Optional[str] = None) -> Matroid:
    """rank(S) = |V| - components of (V, S)."""
    ordered = sorted(graph.edges, key=lambda edge: edge[2])

    def rank(mask: int) -> int:
        chosen = [ordered[e] for e in range(len(ordered)) if mask >> e & 1]
        return graph.vertex_count - component_count(graph.vertex_count, chosen)

    return Matroid(graph.edge_count, _cached(rank), descriptor or f"graphic:{graph.vertex_count}v{graph.edge_count}e")


def dual(matroid: Matroid) -> Matroid:
    full = matroid.full_mask
    full_rank = matroid.full_rank

    def rank(mask: int) -> int:
        return bin(mask).count("1") - full_rank + matroid.rank(full & ~mask)

    return Matroid(matroid.ground_size, _cached(rank), f"dual({matroid.descriptor})")


def parallel_double(matroid: Matroid) -> Matroid:
    """M^(2): element i becomes the parallel pair 2i, 2i+1."""

    def rank(mask: int) -> int:
        projected = 0
        for i in range(matroid.ground_size):
            if mask >> (2 * i) & 3:
                projected |= 1 << i
        return matroid.rank(projected)

    return Matroid(2 * matroid.ground_size, _cached(rank), f"double({matroid.descriptor})")


def direct_sum(first: Matroid, second: Matroid) -> Matroid:
    """Elements of `second` follow those of `first`."""
    low = first.full_mask
    shift = first.ground_size

    def rank(mask: int) -> int:
        return first.rank(mask & low) + second.rank(mask >> shift)

    return Matroid(first.ground_size + second.ground_size, _cached(rank),
                   f"sum({first.descriptor},{second.descriptor})")


# --- enumeration ---

def bases(matroid: Matroid) -> List[FrozenSet[int]]:
    if matroid.ground_size > MAX_BASIS_GROUND:
        raise ResourceLimitError(f"basis enumeration is capped at {MAX_BASIS_GROUND} elements, got {matroid.ground_size}")
    r = matroid.full_rank
    return [frozenset(combo) for combo in combinations(range(matroid.ground_size), r)
            if matroid.is_independent(combo)]


def circuits(matroid: Matroid) -> List[FrozenSet[int]]:
    """Minimal dependent sets, in order of size then lexicographically."""
    if matroid.ground_size > MAX_CIRCUIT_GROUND:
        raise ResourceLimitError(f"circuit enumeration is capped at {MAX_CIRCUIT_GROUND} elements, got {matroid.ground_size}")
    found = []
    for size in range(1, matroid.ground_size + 1):
        for combo in combinations(range(matroid.ground_size), size):
            mask = to_mask(combo)
            if matroid.rank(mask) != size - 1:
                continue
            if all(matroid.rank(mask & ~(1 << e)) == size - 1 for e in combo):
                found.append(frozenset(combo))
    return found


def _require_basis(matroid: Matroid, basis: Iterable[int]) -> FrozenSet[int]:
    basis = frozenset(basis)
    if any(not 0 <= e < matroid.ground_size for e in basis):
        raise InvalidArgumentError(f"basis elements must lie in 0..{matroid.ground_size - 1}")
    if not matroid.is_basis(basis):
        raise DomainError(f"{sorted(basis)} is not a basis of {matroid.descriptor}")
    return basis


def local_basis_exchange(matroid: Matroid, basis: Iterable[int]) -> BipartiteGraph:
    """
    H[A]: e in A adjacent to f outside A iff A - e + f is a basis.

    Part A of the result is the basis side; labels carry the matroid elements.
    """
    basis = _require_basis(matroid, basis)
    inside = sorted(basis)
    outside = [e for e in range(matroid.ground_size) if e not in basis]
    basis_mask = to_mask(inside)
    r = matroid.full_rank
    edges = []
    for i, e in enumerate(inside):
        for j, f in enumerate(outside):
            if matroid.rank((basis_mask & ~(1 << e)) | (1 << f)) == r:
                edges.append((i, len(inside) + j))
    return BipartiteGraph.from_edges(len(inside), len(outside), edges, inside + outside)


def fundamental_circuit(matroid: Matroid, basis: Iterable[int], element: int) -> FrozenSet[int]:
    """The unique circuit inside A + f."""
    if not 0 <= element < matroid.ground_size:
        raise InvalidArgumentError(f"element {element} is outside the ground set")
    if element in frozenset(basis):
        raise InvalidArgumentError(f"element {element} already lies in the basis")
    basis = _require_basis(matroid, basis)
    basis_mask = to_mask(basis)
    r = matroid.full_rank
    members = [e for e in basis if matroid.rank((basis_mask & ~(1 << e)) | (1 << element)) == r]
    return frozenset(members + [element])


# --- isomorphism ---

def find_isomorphism(first: BipartiteGraph, second: BipartiteGraph,
                     respect_parts: bool = False) -> Optional[Dict[int, int]]:
    """
    Vertex map first -> second preserving adjacency, or None.

    Vertices are matched in breadth-first order from the highest degree so
    each new vertex already has mapped neighbours; candidates must agree in
    degree (and part, when respect_parts is set).
    """
    if first.vertex_count != second.vertex_count or first.edge_count != second.edge_count:
        return None
    if sorted(first.degrees) != sorted(second.degrees):
        return None
    if respect_parts and (first.a_size != second.a_size
                          or sorted(first.degrees[:first.a_size]) != sorted(second.degrees[:second.a_size])):
        return None

    order: List[int] = []
    placed = set()
    for root in sorted(range(first.vertex_count), key=lambda v: -first.degree(v)):
        if root in placed:
            continue
        placed.add(root)
        frontier = [root]
        while frontier:
            v = frontier.pop(0)
            order.append(v)
            for u in sorted(first.adjacency[v], key=lambda w: -first.degree(w)):
                if u not in placed:
                    placed.add(u)
                    frontier.append(u)

    second_neighbors = [set(neighbors) for neighbors in second.adjacency]
    mapping: Dict[int, int] = {}
    used = set()

    def compatible(v: int, w: int) -> bool:
        if first.degree(v) != second.degree(w) or w in used:
            return False
        if respect_parts and first.in_part_a(v) != second.in_part_a(w):
            return False
        for u in first.adjacency[v]:
            if u in mapping and mapping[u] not in second_neighbors[w]:
                return False
        mapped_neighbors = sum(1 for u in first.adjacency[v] if u in mapping)
        return mapped_neighbors == sum(1 for x in second_neighbors[w] if x in used)

    def extend(position: int) -> bool:
        if position == len(order):
            return True
        v = order[position]
        for w in range(second.vertex_count):
            if compatible(v, w):
                mapping[v] = w
                used.add(w)
                if extend(position + 1):
                    return True
                del mapping[v]
                used.discard(w)
        return False

    return dict(mapping) if extend(0) else None


def is_isomorphic(first: BipartiteGraph, second: BipartiteGraph, respect_parts: bool = False) -> bool:
    return find_isomorphism(first, second, respect_parts) is not None


# --- descriptor grammar ---

def parse_matroid(descriptor: str, graph_loader: Callable[[str], MultiGraph]) -> Matroid:
    """
    Parse "uniform:m,n", "graphic:<path>", "dual(<d>)", "double(<d>)" or "sum(<d>,<d>)".

    graph_loader turns a graphic path into a MultiGraph.
    """
    parser = _DescriptorParser(descriptor, graph_loader)
    matroid = parser.parse()
    if parser.position != len(parser.text):
        raise InvalidArgumentError(f"unexpected text '{parser.text[parser.position:]}' in matroid descriptor")
    return matroid


class _DescriptorParser:
    def __init__(self, text: str, graph_loader: Callable[[str], MultiGraph]):
        self.text = text.strip()
        self.position = 0
        self.graph_loader = graph_loader

    def _consume(self, token: str) -> bool:
        if self.text.startswith(token, self.position):
            self.position += len(token)
            return True
        return False

    def _expect(self, token: str) -> None:
        if not self._consume(token):
            raise InvalidArgumentError(f"expected '{token}' at position {self.position} of matroid descriptor '{self.text}'")

    def _integer(self) -> int:
        start = self.position
        while self.position < len(self.text) and self.text[self.position].isdigit():
            self.position += 1
        if start == self.position:
            raise InvalidArgumentError(f"expected an integer at position {start} of matroid descriptor '{self.text}'")
        return int(self.text[start:self.position])

    def parse(self) -> Matroid:
        if self._consume("uniform:"):
            m = self._integer()
            self._expect(",")
            return uniform(m, self._integer())
        if self._consume("graphic:"):
            start = self.position
            while self.position < len(self.text) and self.text[self.position] not in ",)":
                self.position += 1
            path = self.text[start:self.position]
            if not path:
                raise InvalidArgumentError("graphic matroid descriptor needs a path")
            return cycle_matroid(self.graph_loader(path), f"graphic:{path}")
        for name, build in (("dual(", dual), ("double(", parallel_double)):
            if self._consume(name):
                inner = self.parse()
                self._expect(")")
                return build(inner)
        if self._consume("sum("):
            first = self.parse()
            self._expect(",")
            second = self.parse()
            self._expect(")")
            return direct_sum(first, second)
        raise InvalidArgumentError(f"unknown matroid descriptor '{self.text[self.position:]}'")

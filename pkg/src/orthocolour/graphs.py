"""Simple undirected graphs, standard families, and graph products.

Vertices are the integers 0..num_vertices-1.  Edges are unordered pairs,
stored canonically as (u, v) tuples with u < v.  Graphs are immutable and
hashable, so certificates can reference them and they can be shared
between threads freely.
"""

import enum
from dataclasses import dataclass

from .errors import SchemaError


class ProductKind(enum.Enum):
    """Selector for the three standard products on V(g) x V(h)."""

    TENSOR = "tensor"
    CARTESIAN = "cartesian"
    STRONG = "strong"


VertexMap = tuple[int, ...]
"""Total map source vertex -> target vertex, indexed by source vertex id."""


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices 0..num_vertices-1."""

    num_vertices: int
    edges: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        if self.num_vertices < 0:
            raise ValueError("num_vertices must be non-negative")
        canonical = set()
        for edge in self.edges:
            u, v = edge
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.num_vertices and 0 <= v < self.num_vertices):
                raise ValueError(
                    f"edge ({u}, {v}) out of range for {self.num_vertices} vertices"
                )
            canonical.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", frozenset(canonical))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges or (v, u) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def adjacency(self) -> tuple[frozenset[int], ...]:
        """Neighbour sets indexed by vertex."""
        nbrs: list[set[int]] = [set() for _ in range(self.num_vertices)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    def __repr__(self):
        return f"Graph(num_vertices={self.num_vertices}, num_edges={self.num_edges})"


def complete_graph(n: int) -> Graph:
    """K_n: every pair of distinct vertices is adjacent."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle_graph(n: int) -> Graph:
    """C_n: vertex i is adjacent to (i + 1) mod n.  Requires n >= 3."""
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def edgeless_graph(n: int) -> Graph:
    """n isolated vertices."""
    return Graph(n)


def product(g: Graph, h: Graph, kind: ProductKind) -> Graph:
    """Product of g and h on the vertex set V(g) x V(h).

    The pair (u, v) is stored as the integer u * |V(h)| + v (row-major).
    Adjacency between (u1, v1) and (u2, v2) depends on the kind:

    - TENSOR: u1u2 in E(g) and v1v2 in E(h);
    - CARTESIAN: u1 = u2 and v1v2 in E(h), or v1 = v2 and u1u2 in E(g);
    - STRONG: the union of the tensor and Cartesian edge sets.
    """
    m = h.num_vertices
    edges: set[tuple[int, int]] = set()

    def add(a: int, b: int) -> None:
        edges.add((a, b) if a < b else (b, a))

    if kind is not ProductKind.CARTESIAN:
        for u1, u2 in g.edges:
            for v1, v2 in h.edges:
                add(u1 * m + v1, u2 * m + v2)
                add(u1 * m + v2, u2 * m + v1)
    if kind is not ProductKind.TENSOR:
        for u in range(g.num_vertices):
            for v1, v2 in h.edges:
                add(u * m + v1, u * m + v2)
        for u1, u2 in g.edges:
            for v in range(m):
                add(u1 * m + v, u2 * m + v)
    return Graph(g.num_vertices * m, frozenset(edges))


def check_embedding(src: Graph, dst: Graph, mapping: VertexMap) -> bool:
    """True iff mapping is injective and sends every src edge to a dst edge.

    The mapping must assign a dst vertex to every src vertex; partial or
    out-of-range maps are rejected outright.
    """
    if len(mapping) != src.num_vertices:
        raise ValueError("mapping must be total on the source vertex set")
    for image in mapping:
        if not 0 <= image < dst.num_vertices:
            raise ValueError(f"mapped vertex {image} outside the target graph")
    if len(set(mapping)) != len(mapping):
        return False
    return all(dst.has_edge(mapping[u], mapping[v]) for u, v in src.edges)


def graph_to_dict(g: Graph) -> dict:
    """Interchange form {"num_vertices": N, "edges": [[u, v], ...]}, edges sorted."""
    return {
        "num_vertices": g.num_vertices,
        "edges": [[u, v] for u, v in g.sorted_edges()],
    }


def _expect_int(value, field: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(f"{field}: expected an integer")
    return value


def graph_from_dict(obj) -> Graph:
    if not isinstance(obj, dict):
        raise SchemaError("graph: expected a JSON object")
    nv = _expect_int(obj.get("num_vertices"), "num_vertices")
    if nv < 0:
        raise SchemaError("num_vertices: must be non-negative")
    raw = obj.get("edges")
    if not isinstance(raw, list):
        raise SchemaError("edges: expected a list of [u, v] pairs")
    edges = set()
    for i, entry in enumerate(raw):
        if not isinstance(entry, list) or len(entry) != 2:
            raise SchemaError(f"edges[{i}]: expected a pair [u, v]")
        u = _expect_int(entry[0], f"edges[{i}]")
        v = _expect_int(entry[1], f"edges[{i}]")
        if u == v:
            raise SchemaError(f"edges[{i}]: self-loop at vertex {u}")
        if not (0 <= u < nv and 0 <= v < nv):
            raise SchemaError(f"edges[{i}]: endpoint outside 0..{nv - 1}")
        edges.add((u, v) if u < v else (v, u))
    return Graph(nv, frozenset(edges))

"""k-fold vertex colourings and the predicates that certify them.

A k-fold colouring assigns every vertex one colour from a shared palette
in each of k colourings.  Two colourings are mutually orthogonal when no
two vertices agree in both, i.e. every colour pair is used at most once.
The colouring is perfect when additionally every colouring is proper, the
graph has palette^2 vertices, and every colour pair occurs exactly once
for every pair of colourings.

All predicates here recompute from scratch; claims carried by a
certificate are never trusted.
"""

import math
from dataclasses import dataclass

from .errors import SchemaError
from .graphs import Graph, graph_from_dict, graph_to_dict


def ceil_sqrt(n: int) -> int:
    """Smallest integer s with s * s >= n."""
    if n < 0:
        raise ValueError("n must be non-negative")
    root = math.isqrt(n)
    return root if root * root == n else root + 1


@dataclass(frozen=True)
class KOrthogonalColouring:
    """k total colour assignments over one palette.

    assignments[r][v] is the colour of vertex v in the r-th colouring;
    colours are dense integers 0..palette-1.
    """

    palette: int
    assignments: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.assignments)
        object.__setattr__(self, "assignments", rows)
        if self.palette < 1:
            raise ValueError("palette must be at least 1")
        if not rows:
            raise ValueError("need at least one colouring")
        width = len(rows[0])
        for r, row in enumerate(rows):
            if len(row) != width:
                raise ValueError(
                    f"colouring {r} has {len(row)} entries, expected {width}"
                )
            for v, colour in enumerate(row):
                if not 0 <= colour < self.palette:
                    raise ValueError(
                        f"colouring {r}: colour {colour} at vertex {v} "
                        f"outside palette {self.palette}"
                    )

    @property
    def k(self) -> int:
        return len(self.assignments)

    @property
    def num_vertices(self) -> int:
        return len(self.assignments[0])

    def __repr__(self):
        return (
            f"KOrthogonalColouring(k={self.k}, palette={self.palette}, "
            f"num_vertices={self.num_vertices})"
        )


@dataclass(frozen=True)
class VerifyFlags:
    proper: bool
    orthogonal: bool
    perfect: bool

    def to_dict(self) -> dict:
        return {
            "proper": self.proper,
            "orthogonal": self.orthogonal,
            "perfect": self.perfect,
        }


@dataclass(frozen=True)
class ColouringCertificate:
    """A graph, a colouring of it, and the properties the producer claims."""

    graph: Graph
    colouring: KOrthogonalColouring
    claims: VerifyFlags

    def __post_init__(self):
        if self.colouring.num_vertices != self.graph.num_vertices:
            raise ValueError(
                f"colouring covers {self.colouring.num_vertices} vertices, "
                f"graph has {self.graph.num_vertices}"
            )


def _require_defined_on(g: Graph, col: KOrthogonalColouring) -> None:
    if col.num_vertices != g.num_vertices:
        raise ValueError(
            f"colouring covers {col.num_vertices} vertices, "
            f"graph has {g.num_vertices}"
        )


def is_proper(g: Graph, col: KOrthogonalColouring) -> bool:
    """No edge is monochromatic in any of the k colourings."""
    _require_defined_on(g, col)
    for u, v in g.edges:
        for row in col.assignments:
            if row[u] == row[v]:
                return False
    return True


def _pairwise_orthogonal(col: KOrthogonalColouring) -> bool:
    for r1 in range(col.k):
        for r2 in range(r1 + 1, col.k):
            pairs = set(zip(col.assignments[r1], col.assignments[r2]))
            if len(pairs) != col.num_vertices:
                return False
    return True


def is_mutually_orthogonal(col: KOrthogonalColouring) -> bool:
    """Every colour pair occurs at most once, for every pair of colourings."""
    if col.k < 2:
        raise ValueError("mutual orthogonality needs at least two colourings")
    return _pairwise_orthogonal(col)


def _every_pair_exactly_once(col: KOrthogonalColouring) -> bool:
    # Caller guarantees num_vertices == palette^2, so "all palette^2 pairs
    # seen" is the same as "each pair exactly once".
    want = col.palette**2
    for r1 in range(col.k):
        for r2 in range(r1 + 1, col.k):
            if len(set(zip(col.assignments[r1], col.assignments[r2]))) != want:
                return False
    return True


def verify(g: Graph, col: KOrthogonalColouring) -> VerifyFlags:
    """Recompute all three certificate flags structurally.

    perfect demands palette^2 vertices with palette = ceil(sqrt(|V|)) and,
    for every pair of colourings, every colour pair used exactly once.
    With a single colouring the orthogonality conditions hold vacuously.
    """
    _require_defined_on(g, col)
    proper = is_proper(g, col)
    orthogonal = _pairwise_orthogonal(col) if col.k >= 2 else True
    perfect = (
        proper
        and orthogonal
        and g.num_vertices == col.palette**2
        and col.palette == ceil_sqrt(g.num_vertices)
        and _every_pair_exactly_once(col)
    )
    return VerifyFlags(proper=proper, orthogonal=orthogonal, perfect=perfect)


def sqrt_lower_bound(g: Graph) -> int:
    """Counting bound on the palette: c colours give only c^2 colour pairs,
    and orthogonality needs a distinct pair per vertex."""
    return ceil_sqrt(g.num_vertices)


def certificate_to_dict(cert: ColouringCertificate) -> dict:
    return {
        "graph": graph_to_dict(cert.graph),
        "k": cert.colouring.k,
        "palette": cert.colouring.palette,
        "colourings": [list(row) for row in cert.colouring.assignments],
        "claims": cert.claims.to_dict(),
    }


def certificate_from_dict(obj) -> ColouringCertificate:
    if not isinstance(obj, dict):
        raise SchemaError("certificate: expected a JSON object")
    graph = graph_from_dict(obj.get("graph"))

    k = obj.get("k")
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise SchemaError("k: expected a positive integer")
    palette = obj.get("palette")
    if isinstance(palette, bool) or not isinstance(palette, int) or palette < 1:
        raise SchemaError("palette: expected a positive integer")

    colourings = obj.get("colourings")
    if not isinstance(colourings, list) or len(colourings) != k:
        raise SchemaError(f"colourings: expected a list of k = {k} colourings")
    rows = []
    for r, row in enumerate(colourings):
        if not isinstance(row, list) or len(row) != graph.num_vertices:
            raise SchemaError(
                f"colourings[{r}]: expected {graph.num_vertices} colours"
            )
        for v, colour in enumerate(row):
            if isinstance(colour, bool) or not isinstance(colour, int):
                raise SchemaError(f"colourings[{r}][{v}]: expected an integer")
            if not 0 <= colour < palette:
                raise SchemaError(
                    f"colourings[{r}][{v}]: colour {colour} outside palette {palette}"
                )
        rows.append(tuple(row))

    claims = obj.get("claims")
    if not isinstance(claims, dict):
        raise SchemaError("claims: expected an object")
    values = {}
    for name in ("proper", "orthogonal", "perfect"):
        flag = claims.get(name)
        if not isinstance(flag, bool):
            raise SchemaError(f"claims.{name}: expected a boolean")
        values[name] = flag

    colouring = KOrthogonalColouring(palette, tuple(rows))
    return ColouringCertificate(graph, colouring, VerifyFlags(**values))

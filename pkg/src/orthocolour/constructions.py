"""Constructive sources of (perfect) k-orthogonal colourings.

Everything here is deterministic and built from first principles on top of
the graph and colouring modules.  None of the guarantees stated below are
trusted by the rest of the package: the test suite re-checks each output
with `verify`.
"""

import math

from .colouring import KOrthogonalColouring, verify
from .graphs import Graph, ProductKind, VertexMap, complete_graph, product


def is_prime(n: int) -> bool:
    """Deterministic trial division; meant for desk-scale moduli."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _exact_sqrt(count: int, what: str) -> int:
    root = math.isqrt(count)
    if root * root != count:
        raise ValueError(f"{what} must have a square number of vertices, got {count}")
    return root


def knkn_perfect_colouring(n: int) -> tuple[Graph, KOrthogonalColouring]:
    """The tensor product K_n x K_n with its canonical perfect colouring.

    Vertex (i, j), stored as i * n + j, gets colour i in the first colouring
    and colour j in the second.  Two vertices are adjacent exactly when they
    differ in both coordinates, so neither colouring has a conflict, and
    every colour pair labels exactly one vertex.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    g = product(complete_graph(n), complete_graph(n), ProductKind.TENSOR)
    rows = (
        tuple(v // n for v in range(n * n)),
        tuple(v % n for v in range(n * n)),
    )
    return g, KOrthogonalColouring(n, rows)


def embed_into_knkn(g: Graph, col: KOrthogonalColouring) -> VertexMap:
    """Map v -> (c0(v), c1(v)) realising g as a subgraph of K_n x K_n.

    Orthogonality makes the map injective; properness makes adjacent
    vertices differ in both coordinates, landing them on a tensor edge.
    The target graph is knkn_perfect_colouring(col.palette)[0] with the
    usual row-major vertex ids.
    """
    if col.k != 2:
        raise ValueError("embedding requires exactly two colourings")
    flags = verify(g, col)
    if not (flags.proper and flags.orthogonal):
        raise ValueError("colouring must be proper and mutually orthogonal")
    n = col.palette
    first, second = col.assignments
    return tuple(first[v] * n + second[v] for v in range(g.num_vertices))


def grid_shift_compose(
    g: Graph, f: KOrthogonalColouring, h: Graph
) -> KOrthogonalColouring:
    """Perfect 2-orthogonal colouring of product(g, h, TENSOR), palette n*m.

    g must carry a perfect 2-orthogonal colouring f (so |V(g)| = n^2) and h
    must have m^2 vertices, read here as grid cells (i, j) in row-major
    rank.  The copy of g sitting over cell (i, j) reuses f shifted into its
    own colour block:

        c0(v, w) = f0(v) + i * n,    c1(v, w) = f1(v) + j * n.

    Distinct cells occupy disjoint colour blocks in each coordinate and
    every block inherits f's pair-uniqueness, so the result is perfect no
    matter what h's edges are.
    """
    if f.k != 2:
        raise ValueError("base colouring must have exactly two colourings")
    n = _exact_sqrt(g.num_vertices, "g")
    m = _exact_sqrt(h.num_vertices, "h")
    if m < 1:
        raise ValueError("h must have at least one vertex")
    if not verify(g, f).perfect:
        raise ValueError("base colouring must verify as perfect")
    f0, f1 = f.assignments
    first: list[int] = []
    second: list[int] = []
    for v in range(g.num_vertices):
        for w in range(h.num_vertices):
            i, j = divmod(w, m)
            first.append(f0[v] + i * n)
            second.append(f1[v] + j * n)
    return KOrthogonalColouring(n * m, (tuple(first), tuple(second)))


def product_compose_k(
    g: Graph,
    cg: KOrthogonalColouring,
    h: Graph,
    ch: KOrthogonalColouring,
    kind: ProductKind,
) -> KOrthogonalColouring:
    """Colour product(g, h, kind) by pairing colour classes coordinatewise.

    Vertex (u, w) receives cg_r(u) * m + ch_r(w) in the r-th colouring,
    with m = ch.palette.  Both inputs must be proper and mutually
    orthogonal with the same k; the result is then proper and mutually
    orthogonal with palette cg.palette * m, and perfect whenever both
    inputs are perfect.

    Every edge of any of the three products moves at least one coordinate
    along an edge of its factor, whose colouring is proper, so the same
    class construction is proper for tensor, Cartesian and strong products
    alike; `kind` records which product the caller is colouring.
    """
    if cg.k != ch.k:
        raise ValueError("inputs must have the same number of colourings")
    fg = verify(g, cg)
    if not (fg.proper and fg.orthogonal):
        raise ValueError(
            "colouring of the first factor must be proper and mutually orthogonal"
        )
    fh = verify(h, ch)
    if not (fh.proper and fh.orthogonal):
        raise ValueError(
            "colouring of the second factor must be proper and mutually orthogonal"
        )
    m = ch.palette
    rows = []
    for r in range(cg.k):
        a = cg.assignments[r]
        b = ch.assignments[r]
        rows.append(
            tuple(
                a[u] * m + b[w]
                for u in range(g.num_vertices)
                for w in range(h.num_vertices)
            )
        )
    return KOrthogonalColouring(cg.palette * m, tuple(rows))


def prime_line_compose(
    g: Graph, cg: KOrthogonalColouring, h: Graph, p: int
) -> KOrthogonalColouring:
    """Perfect k-orthogonal colouring of product(g, h, TENSOR), palette n*p.

    h's p^2 vertices are read as grid cells (i, j) over Z_p.  In the r-th
    colouring the second coordinate's class is the slope-r line through
    (i, j), identified by its intercept, and paired with cg's class:

        colour_r(v, (i, j)) = cg_r(v) * p + (j - i * r) mod p.

    Lines of distinct slopes meet in exactly one cell because Z_p is a
    field; that intersection property is what makes the k colourings
    mutually orthogonal, hence the requirements that p be prime and
    k <= p.  cg must be perfect (so |V(g)| = n^2 with n = cg.palette).
    """
    if not is_prime(p):
        raise ValueError("p must be prime")
    if cg.k > p:
        raise ValueError(f"number of colourings ({cg.k}) must not exceed p ({p})")
    if h.num_vertices != p * p:
        raise ValueError(
            f"h must have exactly p^2 = {p * p} vertices, got {h.num_vertices}"
        )
    if not verify(g, cg).perfect:
        raise ValueError("colouring of the first factor must verify as perfect")
    rows = []
    for r in range(cg.k):
        a = cg.assignments[r]
        row: list[int] = []
        for v in range(g.num_vertices):
            base = a[v] * p
            for w in range(h.num_vertices):
                i, j = divmod(w, p)
                row.append(base + (j - i * r) % p)
        rows.append(tuple(row))
    return KOrthogonalColouring(cg.palette * p, tuple(rows))


def mols_colourings(p: int, k: int) -> KOrthogonalColouring:
    """Perfect k-orthogonal colouring of p^2 isolated vertices from cyclic
    Latin squares over Z_p.

    Cell (i, j), stored as i * p + j, gets colour i (rows), colour j
    (columns), and then (s * i + j) mod p for slopes s = 1..k-2.  Any two
    of these agree on at most one cell because nonzero slope differences
    are invertible mod p.  Supports 2 <= k <= p + 1.
    """
    if not is_prime(p):
        raise ValueError("p must be prime")
    if not 2 <= k <= p + 1:
        raise ValueError(f"k must satisfy 2 <= k <= p + 1, got k = {k}")
    cells = [(i, j) for i in range(p) for j in range(p)]
    rows = [
        tuple(i for i, _ in cells),
        tuple(j for _, j in cells),
    ]
    for slope in range(1, k - 1):
        rows.append(tuple((slope * i + j) % p for i, j in cells))
    return KOrthogonalColouring(p, tuple(rows))


def caro_yuster_graph(p: int, k: int) -> tuple[Graph, KOrthogonalColouring]:
    """The largest graph on p^2 vertices keeping mols_colourings(p, k) proper.

    Starting from the complete graph, each of the k colourings removes the
    clique on every one of its colour classes (k edge-disjoint covers by
    p-cliques; disjoint because two vertices never share a class in two
    colourings).  What survives is exactly the pairs separated by all k
    colourings, so the returned colouring is perfect on the graph and
    adding back any removed edge would break properness.
    """
    col = mols_colourings(p, k)
    nv = p * p
    edges = frozenset(
        (u, v)
        for u in range(nv)
        for v in range(u + 1, nv)
        if all(row[u] != row[v] for row in col.assignments)
    )
    return Graph(nv, edges), col

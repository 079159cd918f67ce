"""Shared test utilities: strategies, naive oracles, small-graph catalogues."""

import io
import itertools
import random
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path

from hypothesis import strategies as st

from orthocolour.colouring import KOrthogonalColouring
from orthocolour.graphs import Graph, ProductKind

REPO_ROOT = Path(__file__).resolve().parent.parent
FIXTURE_DIR = REPO_ROOT / "fixtures"
K3XK3_FIXTURE = FIXTURE_DIR / "k3xk3_perfect.json"
C9XK2_FIXTURE = FIXTURE_DIR / "c9xk2_palette5.json"


@st.composite
def graphs(draw, min_vertices=0, max_vertices=5):
    n = draw(st.integers(min_vertices, max_vertices))
    pairs = list(itertools.combinations(range(n), 2))
    if pairs:
        chosen = draw(st.frozensets(st.sampled_from(pairs)))
    else:
        chosen = frozenset()
    return Graph(n, chosen)


def random_graph(rng: random.Random, num_vertices: int, edge_prob: float = 0.5) -> Graph:
    edges = frozenset(
        (u, v)
        for u in range(num_vertices)
        for v in range(u + 1, num_vertices)
        if rng.random() < edge_prob
    )
    return Graph(num_vertices, edges)


def all_graphs_up_to(max_vertices: int):
    """Every labelled graph on 0..max_vertices vertices."""
    for n in range(max_vertices + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for bits in range(2 ** len(pairs)):
            yield Graph(
                n, frozenset(p for i, p in enumerate(pairs) if bits >> i & 1)
            )


def nonisomorphic_graphs(n: int) -> list[Graph]:
    """All isomorphism classes on n vertices, by canonical-form deduplication."""
    pairs = list(itertools.combinations(range(n), 2))
    perms = list(itertools.permutations(range(n)))
    seen = set()
    out = []
    for bits in range(2 ** len(pairs)):
        edges = frozenset(p for i, p in enumerate(pairs) if bits >> i & 1)
        canon = min(
            tuple(sorted(tuple(sorted((pm[u], pm[v]))) for u, v in edges))
            for pm in perms
        )
        if canon not in seen:
            seen.add(canon)
            out.append(Graph(n, edges))
    return out


def induced_subgraph(g: Graph, vertices: list[int]) -> Graph:
    index = {v: i for i, v in enumerate(vertices)}
    edges = frozenset(
        (index[u], index[v]) for u, v in g.edges if u in index and v in index
    )
    return Graph(len(vertices), edges)


def restrict_colouring(col: KOrthogonalColouring, vertices) -> KOrthogonalColouring:
    return KOrthogonalColouring(
        col.palette,
        tuple(tuple(row[v] for v in vertices) for row in col.assignments),
    )


def product_adjacent(kind: ProductKind, g: Graph, h: Graph, a: int, b: int) -> bool:
    """Textbook product adjacency between row-major ids a and b."""
    m = h.num_vertices
    u1, v1 = divmod(a, m)
    u2, v2 = divmod(b, m)
    tensor = g.has_edge(u1, u2) and h.has_edge(v1, v2)
    cartesian = (u1 == u2 and h.has_edge(v1, v2)) or (
        v1 == v2 and g.has_edge(u1, u2)
    )
    if kind is ProductKind.TENSOR:
        return tensor
    if kind is ProductKind.CARTESIAN:
        return cartesian
    return tensor or cartesian


def brute_product_edges(kind: ProductKind, g: Graph, h: Graph) -> frozenset:
    nv = g.num_vertices * h.num_vertices
    return frozenset(
        (a, b)
        for a in range(nv)
        for b in range(a + 1, nv)
        if product_adjacent(kind, g, h, a, b)
    )


def naive_feasible(g: Graph, k: int, palette: int) -> bool:
    """Ground truth by full enumeration of palette^(k|V|) assignments."""
    tuples = list(itertools.product(range(palette), repeat=k))
    for assign in itertools.product(tuples, repeat=g.num_vertices):
        if _assignment_ok(g, k, assign):
            return True
    return False


def _assignment_ok(g: Graph, k: int, assign) -> bool:
    for u, v in g.edges:
        for r in range(k):
            if assign[u][r] == assign[v][r]:
                return False
    for r1 in range(k):
        for r2 in range(r1 + 1, k):
            pairs = {(a[r1], a[r2]) for a in assign}
            if len(pairs) != len(assign):
                return False
    return True


def naive_optimum(g: Graph, k: int) -> int:
    palette = 1
    while True:
        if naive_feasible(g, k, palette):
            return palette
        palette += 1


def greedy_clique(g: Graph) -> list[int]:
    adjacency = g.adjacency()
    order = sorted(range(g.num_vertices), key=lambda v: (-len(adjacency[v]), v))
    clique: list[int] = []
    for v in order:
        if all(v in adjacency[u] for u in clique):
            clique.append(v)
    return clique


def run_cli(argv) -> tuple[int, str, str]:
    """Invoke the CLI in-process; returns (exit code, stdout, stderr)."""
    from orthocolour import cli

    out = io.StringIO()
    err = io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = cli.main(argv)
    return code, out.getvalue(), err.getvalue()

"""Exact backtracking search for k-orthogonal colourings of small graphs.

This is the ground-truth oracle of the package: deterministic, exhaustive
within its budget, and deliberately simple.  Vertices receive whole colour
tuples in descending-degree order (ties by vertex id).  Pruning uses
per-colouring properness against already-coloured neighbours plus the used
colour-pair set of every colouring pair.  The only symmetry breaking is
pinning the first vertex to the all-zero tuple, which is safe because
colour names can be permuted independently within each colouring.
"""

import enum
import itertools
import time
from dataclasses import dataclass

from .colouring import KOrthogonalColouring, ceil_sqrt, verify
from .graphs import Graph


class SolveStatus(enum.Enum):
    OPTIMAL = "Optimal"
    FEASIBLE = "Feasible"
    INFEASIBLE = "Infeasible"
    BUDGET_EXHAUSTED = "BudgetExhausted"


@dataclass(frozen=True)
class SolveBudget:
    """Caps on the search: node count and, optionally, wall-clock seconds."""

    max_nodes: int = 10_000_000
    time_limit_s: float | None = None

    def __post_init__(self):
        if self.max_nodes < 1:
            raise ValueError("max_nodes must be at least 1")
        if self.time_limit_s is not None and self.time_limit_s <= 0:
            raise ValueError("time_limit_s must be positive")


@dataclass(frozen=True)
class SolveResult:
    status: SolveStatus
    value: int | None = None
    witness: KOrthogonalColouring | None = None
    nodes: int = 0


class _BudgetExceeded(Exception):
    pass


def decide_k_orthogonal(
    g: Graph, k: int, palette: int, budget: SolveBudget | None = None
) -> SolveResult:
    """Decide whether g has a proper k-orthogonal colouring with `palette`
    colours.

    Returns FEASIBLE with a witness, INFEASIBLE once the search space is
    exhausted, or BUDGET_EXHAUSTED.  A palette below ceil(sqrt(|V|)) is
    infeasible without search: a pair of colourings can separate at most
    palette^2 vertices.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if palette < 1:
        raise ValueError("palette must be at least 1")
    if budget is None:
        budget = SolveBudget()
    nv = g.num_vertices
    if palette < ceil_sqrt(nv):
        return SolveResult(SolveStatus.INFEASIBLE)

    adjacency = g.adjacency()
    order = sorted(range(nv), key=lambda v: (-len(adjacency[v]), v))
    rank = {v: i for i, v in enumerate(order)}
    earlier = [
        [w for w in adjacency[v] if rank[w] < i] for i, v in enumerate(order)
    ]
    pair_slots = list(itertools.combinations(range(k), 2))
    used_pairs: list[set[tuple[int, int]]] = [set() for _ in pair_slots]
    colours = [[-1] * nv for _ in range(k)]
    deadline = (
        None
        if budget.time_limit_s is None
        else time.monotonic() + budget.time_limit_s
    )
    nodes = 0

    def candidates(idx: int):
        if idx == 0:
            yield (0,) * k
            return
        allowed = []
        for r in range(k):
            row = colours[r]
            blocked = {row[w] for w in earlier[idx]}
            allowed.append([c for c in range(palette) if c not in blocked])
        yield from itertools.product(*allowed)

    def extend(idx: int) -> bool:
        nonlocal nodes
        if idx == nv:
            return True
        v = order[idx]
        for tup in candidates(idx):
            nodes += 1
            if nodes > budget.max_nodes:
                raise _BudgetExceeded
            if deadline is not None and nodes % 256 == 0:
                if time.monotonic() > deadline:
                    raise _BudgetExceeded
            added = []
            clash = False
            for slot, (r1, r2) in enumerate(pair_slots):
                pair = (tup[r1], tup[r2])
                if pair in used_pairs[slot]:
                    clash = True
                    break
                added.append((slot, pair))
            if clash:
                continue
            for slot, pair in added:
                used_pairs[slot].add(pair)
            for r in range(k):
                colours[r][v] = tup[r]
            if extend(idx + 1):
                return True
            for slot, pair in added:
                used_pairs[slot].discard(pair)
            for r in range(k):
                colours[r][v] = -1
        return False

    try:
        found = extend(0)
    except _BudgetExceeded:
        return SolveResult(SolveStatus.BUDGET_EXHAUSTED, nodes=nodes)
    if not found:
        return SolveResult(SolveStatus.INFEASIBLE, nodes=nodes)
    witness = KOrthogonalColouring(palette, tuple(tuple(row) for row in colours))
    flags = verify(g, witness)
    if not (flags.proper and flags.orthogonal):  # pragma: no cover
        raise AssertionError("search produced an invalid witness")
    return SolveResult(SolveStatus.FEASIBLE, palette, witness, nodes)


def solve_exact(g: Graph, k: int, budget: SolveBudget | None = None) -> SolveResult:
    """Smallest palette admitting a proper k-orthogonal colouring of g.

    Sweeps palettes upward from the counting bound; the budget spans the
    whole sweep.  Giving every vertex its own colour in every colouring is
    always feasible, so the sweep never needs to pass |V|.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if budget is None:
        budget = SolveBudget()
    start = time.monotonic()
    nodes_used = 0
    first = max(1, ceil_sqrt(g.num_vertices))
    last = max(1, g.num_vertices)
    for palette in range(first, last + 1):
        remaining = budget.max_nodes - nodes_used
        if remaining < 1:
            return SolveResult(SolveStatus.BUDGET_EXHAUSTED, nodes=nodes_used)
        time_left = None
        if budget.time_limit_s is not None:
            time_left = budget.time_limit_s - (time.monotonic() - start)
            if time_left <= 0:
                return SolveResult(SolveStatus.BUDGET_EXHAUSTED, nodes=nodes_used)
        result = decide_k_orthogonal(g, k, palette, SolveBudget(remaining, time_left))
        nodes_used += result.nodes
        if result.status is SolveStatus.FEASIBLE:
            return SolveResult(
                SolveStatus.OPTIMAL, palette, result.witness, nodes_used
            )
        if result.status is SolveStatus.BUDGET_EXHAUSTED:
            return SolveResult(SolveStatus.BUDGET_EXHAUSTED, nodes=nodes_used)
    raise AssertionError("palette sweep ended without a feasible palette")

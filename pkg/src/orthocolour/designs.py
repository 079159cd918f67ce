"""Transversal designs extracted from perfect k-orthogonal colourings.

A TD(n, k, 1) has kn points split into k groups of n, and n^2 blocks with
one point per group such that every cross-group point pair lies in exactly
one block.  Points here are (group index, colour) pairs; group r is the
colour set of the r-th colouring.
"""

import itertools
from collections import Counter
from dataclasses import dataclass

from .colouring import KOrthogonalColouring, verify
from .graphs import Graph

Point = tuple[int, int]


@dataclass(frozen=True)
class TransversalDesign:
    """Blocks are k-tuples of (group, colour) points.

    The container stays permissive so that verify_design can judge
    malformed instances; the TD(n, k, 1) laws live in verify_design.
    """

    n: int
    k: int
    blocks: tuple[tuple[Point, ...], ...]

    def __post_init__(self):
        if self.n < 0 or self.k < 0:
            raise ValueError("n and k must be non-negative")
        normal = tuple(
            tuple((point[0], point[1]) for point in block) for block in self.blocks
        )
        object.__setattr__(self, "blocks", normal)

    @property
    def groups(self) -> tuple[frozenset[Point], ...]:
        return tuple(
            frozenset((r, colour) for colour in range(self.n)) for r in range(self.k)
        )


def to_transversal_design(g: Graph, col: KOrthogonalColouring) -> TransversalDesign:
    """One block per vertex: the k (colouring, colour) points it carries.

    Requires a perfect colouring.  Pair-uniqueness across colourings is
    exactly the lambda = 1 coverage law, and perfection makes the coverage
    exhaustive over all n^2 colour combinations of each group pair.
    """
    if col.k < 2:
        raise ValueError("a transversal design needs at least two groups")
    if not verify(g, col).perfect:
        raise ValueError("colouring must verify as perfect")
    blocks = sorted(
        tuple((r, col.assignments[r][v]) for r in range(col.k))
        for v in range(g.num_vertices)
    )
    return TransversalDesign(col.palette, col.k, tuple(blocks))


def verify_design(design: TransversalDesign) -> bool:
    """Exhaustive TD(n, k, 1) check.

    True iff there are n^2 blocks, each block holds exactly one point of
    every group, and every cross-group point pair is covered by exactly
    one block.
    """
    n, k = design.n, design.k
    if len(design.blocks) != n * n:
        return False
    for block in design.blocks:
        if len(block) != k:
            return False
        if sorted(group for group, _ in block) != list(range(k)):
            return False
        if any(not 0 <= colour < n for _, colour in block):
            return False
    coverage: Counter = Counter()
    for block in design.blocks:
        for p1, p2 in itertools.combinations(block, 2):
            if p1[0] > p2[0]:
                p1, p2 = p2, p1
            coverage[(p1, p2)] += 1
    if any(count != 1 for count in coverage.values()):
        return False
    return len(coverage) == n * n * k * (k - 1) // 2


def design_to_dict(design: TransversalDesign) -> dict:
    """{"n": n, "k": k, "blocks": [[colour per group], ...]}, blocks sorted.

    Groups are implicit: position r in a block vector is the colour drawn
    from group r.
    """
    vectors = sorted(
        [colour for _, colour in sorted(block)] for block in design.blocks
    )
    return {"n": design.n, "k": design.k, "blocks": vectors}

#!/usr/bin/env python3
"""Regenerate the golden certificates in fixtures/.

k3xk3_perfect.json is the canonical perfect colouring of the tensor square
of K_3: vertex (i, j) coloured (i, j).

c9xk2_palette5.json colours the tensor product of C_9 with K_2 (an 18-cycle)
with 5 colours, the counting lower bound for 18 vertices.  Its colour pairs
are pinned below rather than derived; 18 of the 25 possible pairs appear,
each once, so the colouring is proper and mutually orthogonal but not
perfect.
"""

import argparse
import json
from pathlib import Path

from orthocolour.colouring import (
    ColouringCertificate,
    KOrthogonalColouring,
    certificate_to_dict,
    verify,
)
from orthocolour.constructions import knkn_perfect_colouring
from orthocolour.graphs import ProductKind, complete_graph, cycle_graph, product

# Colours for C_9 x K_2, indexed by 2*u + s for u on the 9-cycle, s in K_2.
C9XK2_FIRST = (0, 4, 0, 1, 2, 1, 2, 3, 4, 3, 4, 0, 1, 0, 1, 2, 3, 3)
C9XK2_SECOND = (0, 0, 2, 1, 2, 3, 4, 3, 4, 0, 1, 1, 2, 3, 4, 3, 4, 1)


def build_k3xk3() -> ColouringCertificate:
    graph, colouring = knkn_perfect_colouring(3)
    flags = verify(graph, colouring)
    assert flags.proper and flags.orthogonal and flags.perfect
    return ColouringCertificate(graph, colouring, flags)


def build_c9xk2() -> ColouringCertificate:
    graph = product(cycle_graph(9), complete_graph(2), ProductKind.TENSOR)
    colouring = KOrthogonalColouring(5, (C9XK2_FIRST, C9XK2_SECOND))
    flags = verify(graph, colouring)
    assert flags.proper and flags.orthogonal and not flags.perfect
    return ColouringCertificate(graph, colouring, flags)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--out",
        type=Path,
        default=Path(__file__).resolve().parent.parent / "fixtures",
    )
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    targets = {
        "k3xk3_perfect.json": build_k3xk3(),
        "c9xk2_palette5.json": build_c9xk2(),
    }
    for name, cert in targets.items():
        path = args.out / name
        path.write_text(
            json.dumps(certificate_to_dict(cert), indent=2) + "\n", encoding="utf-8"
        )
        print(f"wrote {path}")


if __name__ == "__main__":
    main()

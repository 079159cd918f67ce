#!/usr/bin/env python3
"""Exact orthogonal chromatic numbers of small bipartite double covers.

The double cover of a graph G is its tensor product with K_2.  For C_9 the
classwise composition of optimal colourings gives an upper bound of
3 * 2 = 6 colours, while the counting bound is ceil(sqrt(18)) = 5.  This
script settles such gaps at desk scale by exact search and prints one JSON
line per instance.  The output is evidence from a bounded run; nothing in
the library or the test suite assumes these values.
"""

import argparse
import json

from orthocolour.graphs import ProductKind, complete_graph, cycle_graph, product
from orthocolour.solver import SolveBudget, solve_exact


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--k", type=int, default=2)
    parser.add_argument("--max-nodes", type=int, default=5_000_000)
    parser.add_argument("--time-limit", type=float, default=None)
    parser.add_argument(
        "--kn-max",
        type=int,
        default=4,
        help="also probe K_n x K_2 for n from 2 up to this",
    )
    args = parser.parse_args()
    budget = SolveBudget(args.max_nodes, args.time_limit)

    k2 = complete_graph(2)
    instances = [("C_9 x K_2", product(cycle_graph(9), k2, ProductKind.TENSOR))]
    for n in range(2, args.kn_max + 1):
        instances.append(
            (f"K_{n} x K_2", product(complete_graph(n), k2, ProductKind.TENSOR))
        )

    for name, graph in instances:
        result = solve_exact(graph, args.k, budget)
        print(
            json.dumps(
                {
                    "instance": name,
                    "num_vertices": graph.num_vertices,
                    "status": result.status.value,
                    "value": result.value,
                    "nodes": result.nodes,
                }
            )
        )


if __name__ == "__main__":
    main()

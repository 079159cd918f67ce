"""Command-line interface.

Subcommands:

    product    product of two graph files (tensor/cartesian/strong)
    construct  emit a colouring certificate from a built-in construction
    verify     recheck a certificate's claims
    solve      exact minimum palette for k orthogonal colourings
    design     extract a transversal design from a perfect certificate

Exit codes: 0 success, 1 refuted claim, 2 malformed input, 3 violated
precondition.  Results go to stdout, diagnostics to stderr.  Emitted JSON
is byte-stable: fixed field order, edges and blocks sorted.
"""

import argparse
import json
import sys

from .colouring import (
    ColouringCertificate,
    KOrthogonalColouring,
    certificate_from_dict,
    certificate_to_dict,
    verify,
)
from .constructions import (
    caro_yuster_graph,
    grid_shift_compose,
    knkn_perfect_colouring,
    mols_colourings,
    prime_line_compose,
    product_compose_k,
)
from .designs import design_to_dict, to_transversal_design
from .errors import SchemaError
from .graphs import (
    Graph,
    ProductKind,
    edgeless_graph,
    graph_from_dict,
    graph_to_dict,
    product,
)
from .solver import SolveBudget, solve_exact


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise SchemaError(f"{path}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON ({exc})") from exc


def _emit(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _certificate_payload(graph: Graph, colouring: KOrthogonalColouring) -> dict:
    cert = ColouringCertificate(graph, colouring, verify(graph, colouring))
    return certificate_to_dict(cert)


def _cmd_product(args) -> int:
    g = graph_from_dict(_load_json(args.g))
    h = graph_from_dict(_load_json(args.h))
    _emit(graph_to_dict(product(g, h, ProductKind(args.kind))))
    return 0


def _cmd_construct_knkn(args) -> int:
    g, col = knkn_perfect_colouring(args.n)
    _emit(_certificate_payload(g, col))
    return 0


def _cmd_construct_thm2(args) -> int:
    cert = certificate_from_dict(_load_json(args.g_cert))
    h = graph_from_dict(_load_json(args.h_graph))
    col = grid_shift_compose(cert.graph, cert.colouring, h)
    _emit(_certificate_payload(product(cert.graph, h, ProductKind.TENSOR), col))
    return 0


def _cmd_construct_product_k(args) -> int:
    cg = certificate_from_dict(_load_json(args.g_cert))
    ch = certificate_from_dict(_load_json(args.h_cert))
    kind = ProductKind(args.kind)
    col = product_compose_k(cg.graph, cg.colouring, ch.graph, ch.colouring, kind)
    _emit(_certificate_payload(product(cg.graph, ch.graph, kind), col))
    return 0


def _cmd_construct_thm5(args) -> int:
    cert = certificate_from_dict(_load_json(args.g_cert))
    h = graph_from_dict(_load_json(args.h_graph))
    col = prime_line_compose(cert.graph, cert.colouring, h, args.p)
    _emit(_certificate_payload(product(cert.graph, h, ProductKind.TENSOR), col))
    return 0


def _cmd_construct_mols(args) -> int:
    col = mols_colourings(args.p, args.k)
    _emit(_certificate_payload(edgeless_graph(args.p * args.p), col))
    return 0


def _cmd_construct_caro_yuster(args) -> int:
    g, col = caro_yuster_graph(args.p, args.k)
    _emit(_certificate_payload(g, col))
    return 0


def _cmd_verify(args) -> int:
    cert = certificate_from_dict(_load_json(args.certificate))
    recomputed = verify(cert.graph, cert.colouring)
    refuted = [
        name
        for name in ("proper", "orthogonal", "perfect")
        if getattr(cert.claims, name) and not getattr(recomputed, name)
    ]
    _emit(
        {
            "claimed": cert.claims.to_dict(),
            "recomputed": recomputed.to_dict(),
            "verdict": "refuted" if refuted else "confirmed",
        }
    )
    if refuted:
        print(f"refuted claims: {', '.join(refuted)}", file=sys.stderr)
        return 1
    return 0


def _cmd_solve(args) -> int:
    g = graph_from_dict(_load_json(args.graph))
    budget = SolveBudget(max_nodes=args.max_nodes, time_limit_s=args.time_limit)
    result = solve_exact(g, args.k, budget)
    witness = None
    if result.witness is not None:
        witness = _certificate_payload(g, result.witness)
    _emit(
        {
            "status": result.status.value,
            "value": result.value,
            "witness": witness,
            "nodes": result.nodes,
        }
    )
    return 0


def _cmd_design(args) -> int:
    cert = certificate_from_dict(_load_json(args.certificate))
    if not verify(cert.graph, cert.colouring).perfect:
        raise ValueError("certificate is not perfect")
    design = to_transversal_design(cert.graph, cert.colouring)
    _emit(design_to_dict(design))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orthocolour",
        description=(
            "k-orthogonal graph colourings: products, certificates, exact "
            "solving, and transversal designs"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    kinds = [kind.value for kind in ProductKind]

    p_product = sub.add_parser("product", help="product of two graph files")
    p_product.add_argument("g", help="first graph JSON file")
    p_product.add_argument("h", help="second graph JSON file")
    p_product.add_argument("--kind", required=True, choices=kinds)
    p_product.set_defaults(handler=_cmd_product)

    p_construct = sub.add_parser("construct", help="emit a colouring certificate")
    c_sub = p_construct.add_subparsers(dest="construction", required=True)

    c = c_sub.add_parser(
        "knkn", help="canonical perfect colouring of the tensor square of K_n"
    )
    c.add_argument("--n", type=int, required=True)
    c.set_defaults(handler=_cmd_construct_knkn)

    c = c_sub.add_parser(
        "thm2",
        help="grid-shift composition: perfect base times a square-order graph",
    )
    c.add_argument(
        "--g-cert",
        required=True,
        help="certificate carrying a perfect 2-orthogonal colouring",
    )
    c.add_argument(
        "--h-graph", required=True, help="graph with a square number of vertices"
    )
    c.set_defaults(handler=_cmd_construct_thm2)

    c = c_sub.add_parser(
        "product-k",
        help="classwise composition of two proper orthogonal certificates",
    )
    c.add_argument("--g-cert", required=True)
    c.add_argument("--h-cert", required=True)
    c.add_argument("--kind", required=True, choices=kinds)
    c.set_defaults(handler=_cmd_construct_product_k)

    c = c_sub.add_parser(
        "thm5",
        help="prime-line composition: perfect base times a p^2-vertex graph",
    )
    c.add_argument("--g-cert", required=True)
    c.add_argument("--h-graph", required=True)
    c.add_argument("--p", type=int, required=True)
    c.set_defaults(handler=_cmd_construct_thm5)

    c = c_sub.add_parser(
        "mols", help="cyclic Latin-square colourings of p^2 isolated vertices"
    )
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c.set_defaults(handler=_cmd_construct_mols)

    c = c_sub.add_parser(
        "caro-yuster",
        help="maximal graph admitting the cyclic Latin-square colourings",
    )
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c.set_defaults(handler=_cmd_construct_caro_yuster)

    p_verify = sub.add_parser("verify", help="recheck a certificate's claims")
    p_verify.add_argument("certificate", help="certificate JSON file")
    p_verify.set_defaults(handler=_cmd_verify)

    p_solve = sub.add_parser(
        "solve", help="exact minimum palette for k orthogonal colourings"
    )
    p_solve.add_argument("graph", help="graph JSON file")
    p_solve.add_argument("--k", type=int, default=2)
    p_solve.add_argument("--max-nodes", type=int, default=SolveBudget().max_nodes)
    p_solve.add_argument("--time-limit", type=float, default=None)
    p_solve.set_defaults(handler=_cmd_solve)

    p_design = sub.add_parser(
        "design", help="extract a transversal design from a perfect certificate"
    )
    p_design.add_argument("certificate", help="certificate JSON file")
    p_design.set_defaults(handler=_cmd_design)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3

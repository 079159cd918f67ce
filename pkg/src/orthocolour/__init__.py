"""k-orthogonal graph colourings.

Graphs and their tensor/Cartesian/strong products, colouring certificates
with structural verification, constructive compositions of perfect
colourings, an exact backtracking solver, and extraction of transversal
designs from perfect colourings.
"""

from .colouring import (
    ColouringCertificate,
    KOrthogonalColouring,
    VerifyFlags,
    ceil_sqrt,
    certificate_from_dict,
    certificate_to_dict,
    is_mutually_orthogonal,
    is_proper,
    sqrt_lower_bound,
    verify,
)
from .constructions import (
    caro_yuster_graph,
    embed_into_knkn,
    grid_shift_compose,
    is_prime,
    knkn_perfect_colouring,
    mols_colourings,
    prime_line_compose,
    product_compose_k,
)
from .designs import (
    TransversalDesign,
    design_to_dict,
    to_transversal_design,
    verify_design,
)
from .errors import SchemaError
from .graphs import (
    Graph,
    ProductKind,
    VertexMap,
    check_embedding,
    complete_graph,
    cycle_graph,
    edgeless_graph,
    graph_from_dict,
    graph_to_dict,
    product,
)
from .solver import (
    SolveBudget,
    SolveResult,
    SolveStatus,
    decide_k_orthogonal,
    solve_exact,
)

__all__ = [
    "ColouringCertificate",
    "Graph",
    "KOrthogonalColouring",
    "ProductKind",
    "SchemaError",
    "SolveBudget",
    "SolveResult",
    "SolveStatus",
    "TransversalDesign",
    "VertexMap",
    "VerifyFlags",
    "caro_yuster_graph",
    "ceil_sqrt",
    "certificate_from_dict",
    "certificate_to_dict",
    "check_embedding",
    "complete_graph",
    "cycle_graph",
    "decide_k_orthogonal",
    "design_to_dict",
    "edgeless_graph",
    "embed_into_knkn",
    "graph_from_dict",
    "graph_to_dict",
    "grid_shift_compose",
    "is_mutually_orthogonal",
    "is_prime",
    "is_proper",
    "knkn_perfect_colouring",
    "mols_colourings",
    "prime_line_compose",
    "product",
    "product_compose_k",
    "solve_exact",
    "sqrt_lower_bound",
    "to_transversal_design",
    "verify",
    "verify_design",
]

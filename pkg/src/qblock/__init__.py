"""qblock: quantum automorphism groups of forests, outerplanar and block graphs."""

from .blocks import (
    BlockTree,
    RootedGraph,
    biconnected_components,
    block_tree,
    cut_vertices,
    subgraph_below,
)
from .canon import (
    CanonCode,
    ClassicalPermGroup,
    automorphism_group,
    brute_force_isomorphism,
    canon_code,
    orbits,
)
from .classrec import CycleStructure, GraphClass, classify, classify_edges, hamiltonian_cycle
from .engine import (
    QutResult,
    has_quantum_symmetry,
    qut,
    qut_block_atom,
    qut_central_block,
    qut_central_cut,
    qut_connected,
    qut_rooted_block,
    qut_rooted_cut,
)
from .errors import QBlockError
from .graph import (
    ColoredGraph,
    complement,
    connected_components,
    induced_subgraph,
    make_graph,
    parse_graph,
    render_graph,
)
from .qexpr import (
    TRIVIAL,
    Classical,
    FreeProduct,
    FreeWreath,
    InhomFreeWreath,
    QGroupExpr,
    SymQ,
    Trivial,
    classical_shadow_order,
    free_product,
    free_wreath,
    from_json,
    inhom_free_wreath,
    is_classical,
    normalize,
    quantum_orbits,
    render,
    symq,
)
from .wl import PairColoring, initial_coloring, refine, same_wl_class, stable_coloring

__version__ = "0.1.0"

__all__ = [
    "BlockTree",
    "CanonCode",
    "Classical",
    "ClassicalPermGroup",
    "ColoredGraph",
    "CycleStructure",
    "FreeProduct",
    "FreeWreath",
    "GraphClass",
    "InhomFreeWreath",
    "PairColoring",
    "QBlockError",
    "QGroupExpr",
    "QutResult",
    "RootedGraph",
    "SymQ",
    "TRIVIAL",
    "Trivial",
    "automorphism_group",
    "biconnected_components",
    "block_tree",
    "brute_force_isomorphism",
    "canon_code",
    "classical_shadow_order",
    "classify",
    "classify_edges",
    "complement",
    "connected_components",
    "cut_vertices",
    "free_product",
    "free_wreath",
    "from_json",
    "hamiltonian_cycle",
    "has_quantum_symmetry",
    "induced_subgraph",
    "inhom_free_wreath",
    "initial_coloring",
    "is_classical",
    "make_graph",
    "normalize",
    "orbits",
    "parse_graph",
    "quantum_orbits",
    "qut",
    "qut_block_atom",
    "qut_central_block",
    "qut_central_cut",
    "qut_connected",
    "qut_rooted_block",
    "qut_rooted_cut",
    "refine",
    "render",
    "render_graph",
    "same_wl_class",
    "stable_coloring",
    "subgraph_below",
    "symq",
]

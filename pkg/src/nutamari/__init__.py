"""nu-Tamari lattices and their cyclic analogues, with exact geometric realizations.

The objects here are spanning trees of a bipartite "non-crossing" structure on
an index pair (I, J): maximal collections of pairwise non-crossing arcs i-j.
In the linear mode these are in bijection with lattice paths weakly above a
path nu, and flips between them generate the nu-Tamari lattice.  In the cyclic
mode the same machinery produces triangulations whose flip graph is generally
not a lattice.  Every complex is realized exactly (rational arithmetic) as the
bounded complex of a tropical hyperplane arrangement.
"""

from .core import (
    Arc,
    IndexPair,
    is_above,
    normalize,
    nu_of_pair,
    pair_of_nu,
    parse_nu,
    parse_pair,
    reverse_pair,
)
from .trees import (
    apply_flip,
    canopy,
    classify,
    crosses,
    enumerate_faces,
    enumerate_trees,
    flips,
    ground_arcs,
    increasing_flips,
    staircase_trees,
    t_min,
)
from .paths import covers_of, enumerate_paths_above, rho, rho_inv, valleys
from .posets import (
    FinitePoset,
    build_path_poset,
    build_tree_poset,
    canopy_fiber_report,
    lattice_check,
    to_dot,
    verify_flip_path_iso,
    verify_reverse_duality,
)
from .complexes import (
    TamariComplex,
    check_shelling,
    cyclic_h_formula,
    h_from_f,
    h_vector_shelling,
    link_decomposition,
    narayana_vector,
    shelling_order,
    verify_triangulation,
)
from .heights import HeightFunction, INF, default_height, is_valid_height, verify_regular
from .tropical import (
    GeomComplex,
    apexes,
    build_geometric_complex,
    cayley_cell,
    cell_products_report,
    convexity_oracle_2d,
    orientation_check,
    support_convex_predicate,
    vertex_coords,
)
from .render import complex_payload, complex_to_svg, hvector_payload, to_json
from .checks import run_checks

__version__ = "0.1.0"

__all__ = [
    "Arc",
    "IndexPair",
    "is_above",
    "normalize",
    "nu_of_pair",
    "pair_of_nu",
    "parse_nu",
    "parse_pair",
    "reverse_pair",
    "apply_flip",
    "canopy",
    "classify",
    "crosses",
    "enumerate_faces",
    "enumerate_trees",
    "flips",
    "ground_arcs",
    "increasing_flips",
    "staircase_trees",
    "t_min",
    "covers_of",
    "enumerate_paths_above",
    "rho",
    "rho_inv",
    "valleys",
    "FinitePoset",
    "build_path_poset",
    "build_tree_poset",
    "canopy_fiber_report",
    "lattice_check",
    "to_dot",
    "verify_flip_path_iso",
    "verify_reverse_duality",
    "TamariComplex",
    "check_shelling",
    "cyclic_h_formula",
    "h_from_f",
    "h_vector_shelling",
    "link_decomposition",
    "narayana_vector",
    "shelling_order",
    "verify_triangulation",
    "HeightFunction",
    "INF",
    "default_height",
    "is_valid_height",
    "verify_regular",
    "GeomComplex",
    "apexes",
    "build_geometric_complex",
    "cayley_cell",
    "cell_products_report",
    "convexity_oracle_2d",
    "orientation_check",
    "support_convex_predicate",
    "vertex_coords",
    "complex_payload",
    "complex_to_svg",
    "hvector_payload",
    "to_json",
    "run_checks",
]

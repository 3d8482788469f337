"""Scarf complexes of monomial ideals built from graphs."""

from ._kernels import BACKEND
from .graphs import (
    SimpleGraph,
    cover_ideal,
    edge_ideal,
    matching_number,
    matchings_of_size,
    minimal_vertex_covers,
    squarefree_power,
    symbolic_power,
)
from .homology import GF2, QQ, FieldSpec, SimplicialComplex, is_acyclic, reduced_homology_ranks
from .monomials import (
    Monomial,
    MonomialIdeal,
    VariableSet,
    divides,
    intersect,
    lcm,
    minimalize,
    parse_ideal,
    parse_monomial,
    power,
    restrict,
    scale,
    variable_power_ideal,
)
from .scarf import (
    CapExceeded,
    is_generic,
    is_scarf,
    is_scarf_face,
    is_taylor,
    lcm_lattice,
    restrict_complex,
    scarf_complex,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CapExceeded",
    "FieldSpec",
    "GF2",
    "Monomial",
    "MonomialIdeal",
    "QQ",
    "SimpleGraph",
    "SimplicialComplex",
    "VariableSet",
    "cover_ideal",
    "divides",
    "edge_ideal",
    "intersect",
    "is_acyclic",
    "is_generic",
    "is_scarf",
    "is_scarf_face",
    "is_taylor",
    "lcm",
    "lcm_lattice",
    "matching_number",
    "matchings_of_size",
    "minimal_vertex_covers",
    "minimalize",
    "parse_ideal",
    "parse_monomial",
    "power",
    "reduced_homology_ranks",
    "restrict",
    "restrict_complex",
    "scale",
    "scarf_complex",
    "squarefree_power",
    "symbolic_power",
    "variable_power_ideal",
]

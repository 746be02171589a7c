"""p-Borel-fixed ideals whose Betti tables depend on the characteristic."""
from .betti import BettiTable, betti_at, betti_table, betti_tables, koszul_subcomplex, lcm_lattice, regularity
from .borel import BorelWitness, is_p_borel_fixed, precedes_p
from .homology import GF, QQ, FieldSpec, SimplicialComplex, field_rank, reduced_homology_dims
from .ideals import (
    MonomialIdeal,
    add_power,
    colon_power,
    contains,
    lcm_degree,
    lcm_multidegree,
    minimalize,
    parse_ideal,
    saturate_var,
)
from .stretch import StretchSpec, coefficient_ideal, pardue_construct, stretch_phi

__all__ = [
    "BettiTable", "BorelWitness", "FieldSpec", "GF", "MonomialIdeal", "QQ", "SimplicialComplex",
    "StretchSpec", "add_power", "betti_at", "betti_table", "betti_tables", "coefficient_ideal",
    "colon_power", "contains", "field_rank", "is_p_borel_fixed", "koszul_subcomplex", "lcm_degree",
    "lcm_lattice", "lcm_multidegree", "minimalize", "pardue_construct", "parse_ideal",
    "precedes_p", "reduced_homology_dims", "regularity", "saturate_var", "stretch_phi",
]

"""Constructions: central extensions, semidirect products, T*-type and double extensions."""

from ._common import Extension, ExtendedPair, LineResult
from .central import (
    CentralExtensionData,
    central_cocycle_space,
    central_equations,
    central_extension,
    induced_maps,
    map_conditions,
)
from .deconstruct import DeconstructionResult, deconstruct_double_extension, iterate_to_lie
from .double import (
    DoubleExtensionData,
    composed_tables,
    double_extension,
    double_extension_tables,
    variant_of,
    variant_parities,
)
from .semidirect import (
    SEMIDIRECT_LINES,
    AdmissibleTuple,
    semidirect_equations,
    semidirect_product,
    semidirect_tables,
)
from .systems import (
    COMPATIBILITY_SYSTEMS,
    EVEN_FORM_EVEN_LINE,
    EVEN_FORM_ODD_LINE,
    LIE_SYSTEMS,
    ODD_FORM_EVEN_LINE,
    ODD_FORM_ODD_LINE,
    VARIANTS,
)
from .tstar import (
    CocycleTensor,
    TStarReduction,
    pi_t_star_extension,
    rebuild_from_reduction,
    reduce_to_t_star,
    t_star_extension,
    trivial_algebra,
)

__all__ = [
    "AdmissibleTuple", "COMPATIBILITY_SYSTEMS", "CentralExtensionData", "CocycleTensor",
    "DeconstructionResult", "DoubleExtensionData", "EVEN_FORM_EVEN_LINE", "EVEN_FORM_ODD_LINE",
    "ExtendedPair", "Extension", "LIE_SYSTEMS", "LineResult", "ODD_FORM_EVEN_LINE",
    "ODD_FORM_ODD_LINE", "SEMIDIRECT_LINES", "TStarReduction", "VARIANTS",
    "central_cocycle_space", "central_equations", "central_extension", "composed_tables",
    "deconstruct_double_extension", "double_extension", "double_extension_tables",
    "induced_maps", "iterate_to_lie", "map_conditions", "pi_t_star_extension",
    "rebuild_from_reduction", "reduce_to_t_star", "semidirect_equations", "semidirect_product",
    "semidirect_tables", "t_star_extension", "trivial_algebra", "variant_of", "variant_parities",
]

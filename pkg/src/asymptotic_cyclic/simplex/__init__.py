"""単体の余巡回加群と普遍指数コサイクル"""

from asymptotic_cyclic.simplex.cocycle import (
    CocycleGrowthReport,
    CocycleWindowReport,
    IntermediateEntry,
    OddImageEntry,
    ResidueEntry,
    classify_cocycle_growth,
    cone_point,
    corrupted_cocycle,
    odd_image_identities,
    universal_cocycle,
    universal_norm,
    universal_prefix,
    verify_cocycle_window,
    vertex_chain_presentation,
)
from asymptotic_cyclic.simplex.exceptions import NonMonotonePointError, SimplexError
from asymptotic_cyclic.simplex.module import ChainTerm, SimplexChain, SimplexModule, chain_norm, deserialize_chain, serialize_chain
from asymptotic_cyclic.simplex.points import BASEPOINT, SimplexPoint, random_point

__all__ = [
    "BASEPOINT",
    "ChainTerm",
    "CocycleGrowthReport",
    "CocycleWindowReport",
    "IntermediateEntry",
    "NonMonotonePointError",
    "OddImageEntry",
    "ResidueEntry",
    "SimplexChain",
    "SimplexError",
    "SimplexModule",
    "SimplexPoint",
    "chain_norm",
    "classify_cocycle_growth",
    "cone_point",
    "corrupted_cocycle",
    "deserialize_chain",
    "odd_image_identities",
    "random_point",
    "serialize_chain",
    "universal_cocycle",
    "universal_norm",
    "universal_prefix",
    "verify_cocycle_window",
    "vertex_chain_presentation",
]

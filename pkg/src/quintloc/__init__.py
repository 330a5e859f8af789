"""Torus-fixed-locus census and homology of the moduli space of semistable
plane sheaves with Hilbert polynomial 5m+3, by exact integer combinatorics.
"""

from .catalog import (
    DEFAULT_LAMBDA,
    CensusCounts,
    Family,
    FixedComponent,
    Kind,
    Stratum,
    census,
    enumerate_all,
    filter_components,
)
from .homology import (
    ALT_LAMBDA,
    GOLDEN_BETTI_EVEN,
    GOLDEN_EULER,
    CellDatum,
    PoincareSummary,
    assemble,
    cell_dimension,
    poincare_summary,
    verify,
)
from .tangent import (
    LimitClass,
    TangentModel,
    classify_limit,
    normal_chi0,
    tangent_weights,
    weights_G,
    weights_W,
)
from .weights import (
    CHI0,
    Char,
    OneParamSubgroup,
    WeightMultiset,
    ideal_degree5,
    msub,
    pair_values,
    permute,
    positive_part,
    shift,
    sigma,
)

__all__ = [name for name in dir() if not name.startswith("_")]

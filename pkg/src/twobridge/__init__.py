"""Essential surfaces, weights, seminorms and basic trees for 2-bridge knots."""
from .arith import (
    Expansion,
    cf_value,
    enumerate_ht_expansions,
    even_expansion,
    knot_fraction,
    positive_expansion,
    same_knot_class,
)
from .pretzel import pretzel_surface_table
from .smoothing import Smoothing, enumerate_allowable, generate_expansion, is_allowable
from .surface import (
    PeripheralCurve,
    Surface,
    boundary_slope,
    build_surfaces,
    cgls_seminorm,
    crosscheck_expansions,
    is_orientable,
    weight_from_expansion,
    weight_from_smoothing,
)
from .tree import (
    BasicTree,
    assemble_basic_tree,
    classify_twist_subtree,
    enumerate_actions,
    export_dot,
    weight_from_tree,
)

__version__ = "0.1.0"

"""Exact rational tangle calculus: replacement families, 2-bridge links and lens-space surgery."""
from .lens import (
    KleinKind,
    LensSpace,
    SeifertInvariant,
    SurgeryWitness,
    is_core_knot,
    klein_fiber_classify,
    klein_fiber_surgeries,
    lens_equiv,
    lens_of_seifert,
    seifert_knot_catalog,
    seifert_normalize,
    torus_knot_surgery,
    torus_knot_surgery_solve,
)
from .plat import (
    NotationError,
    PlatDesc,
    cf_to_plat,
    parse_cf,
    parse_slope,
    parse_tangle_notation,
    plat_closure,
    plat_render,
)
from .rational import (
    INFINITY,
    ContinuedFraction,
    PairClass,
    Slope,
    UnimodularMap,
    cf_equal,
    cf_eval,
    cf_expand,
    pair_canonical,
    pair_orbit_residues,
    pairs_homeomorphic,
    slope_distance,
    unimodular_apply,
    unimodular_taking,
)
from .rsr import (
    Family,
    RsrWitness,
    UnsupportedSiteError,
    classify_rsr,
    family_general_members,
    family_normalized_value,
    normal_form,
    normalized_witness,
    representative_cf_pair,
    site_plat,
    witness_pair,
)
from .twobridge import (
    TwoBridgeLink,
    greene_check,
    lisca_check,
    tb_closure,
    tb_equiv,
    tb_rsr_decide,
    tb_rsr_site_cf,
)

__version__ = "0.1.0"

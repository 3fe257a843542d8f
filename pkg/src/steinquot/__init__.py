"""Steinberg quotients of tilting and G1T-PIM characters in characteristic p."""

from .charring import (
    Character,
    OrbitDecomposition,
    WeylDecomposition,
    alternating_sum,
    brauer_product,
    chi,
    decompose_orbit_sums,
    decompose_weyl_basis,
    dual,
    frobenius_twist,
    is_weyl_invariant,
    multiply,
    orbit_sum,
    pi_p,
)
from .linkage import (
    AffineReflection,
    LinkageChain,
    dominant_chain,
    dot_apply,
    linkage_chain,
    linkage_down_set,
    up_arrow,
)
from .rootdata import (
    RootDatum,
    apply_weyl,
    build_root_datum,
    dominance_leq,
    dominant_representative,
    height,
    weyl_orbit,
)
from .sources import (
    CharacterSource,
    character_from_weyl_factors,
    load_character_file,
    sl2_tilting_character,
    steinberg_character,
)
from .steinberg import (
    SteinbergQuotient,
    TheoremReport,
    baby_verma_multiplicities,
    compare_pim_vs_tilting,
    hom_character,
    is_plausible_module_character,
    is_plausible_tilting_character,
    make_quotient,
    steinberg_quotient,
    twisted_tensor_weyl_coeffs,
    verify_theorem,
)

__version__ = "0.1.0"

"""Finite bicategories by tables: validation, fractions, localization, colimits."""

from .axioms import (
    NonFilteredError,
    PseudoCocone,
    PseudofilteredWitnesses,
    build_pseudococone,
    check_axiom_equivalence,
    check_bf4_tail,
    check_closure,
    check_flt,
    check_frc,
    check_pflt,
    close_family,
    upgrade_to_invertible,
    validate_cocone,
)
from .colimit import (
    ColimitCategory,
    Homotopy,
    Premorphism,
    colimit_direct,
    colimit_via_localization,
    compose_premorphisms,
    crosscheck_iso,
    elementary_homotopy,
    homotopic,
    premorphisms_between,
    validate_catvalued_cocone,
)
from .core import (
    ArrowFamily,
    FinBicategory,
    FinCategory,
    HighSeverityFinding,
    PreconditionError,
    StructureError,
    TypedExprError,
    ValidationReport,
    Violation,
    co_dual,
    equivalences,
    evaluate,
    family,
    is_connected,
    is_equivalence1,
    is_invertible2,
    locally_discrete,
    op_category,
    op_dual,
    pi0,
    validate_bicategory,
    validate_category,
)
from .fibrations import (
    CartesianFamilies,
    cartesian_families,
    cartesian_lift,
    check_1fibration,
    check_fibration,
    is_1fibration,
    is_cartesian1,
    is_cartesian2,
    is_cartesian_arrow,
    is_cat_fibration,
    is_cofibration,
    is_fibration,
    lifted_family,
)
from .functors import (
    CatFunctor,
    CatValuedPSF,
    PsfBicat,
    check_natural,
    compose_functors,
    functors_equal,
    identity_functor,
    identity_psf,
    is_equivalence_of_categories,
    is_iso_of_categories,
    local_functor,
    op_dual_psf,
    validate_catvalued,
    validate_functor,
    validate_psf,
)
from .gen import gen_bicat, gen_diagram, gen_family
from .grothendieck import ElementsResult, el_prime, elements
from .homfractions import (
    Fraction2Cell,
    HomCategory,
    SliceBicategory,
    biterminal_objects,
    build_FAB,
    check_biterminal_preserved,
    check_gamma_independence,
    check_slice_cofiltered,
    crosscheck_homcat,
    family_member_iso,
    hom_inclusion,
    homcat_pronk,
    homcat_via_colimit,
    is_contractible_groupoid,
    lift_square,
    slice_over,
)
from .localization import (
    FractionWitnesses,
    LocalizedCategory,
    Roof,
    check_R,
    induced_W0,
    localize_left,
    localize_right,
)

__all__ = [
    "ArrowFamily",
    "CartesianFamilies",
    "CatFunctor",
    "CatValuedPSF",
    "ColimitCategory",
    "ElementsResult",
    "FinBicategory",
    "FinCategory",
    "Fraction2Cell",
    "FractionWitnesses",
    "HighSeverityFinding",
    "HomCategory",
    "Homotopy",
    "LocalizedCategory",
    "NonFilteredError",
    "PreconditionError",
    "Premorphism",
    "PseudoCocone",
    "PseudofilteredWitnesses",
    "PsfBicat",
    "Roof",
    "SliceBicategory",
    "StructureError",
    "TypedExprError",
    "ValidationReport",
    "Violation",
    "biterminal_objects",
    "build_FAB",
    "build_pseudococone",
    "cartesian_families",
    "cartesian_lift",
    "check_1fibration",
    "check_R",
    "check_axiom_equivalence",
    "check_bf4_tail",
    "check_biterminal_preserved",
    "check_closure",
    "check_fibration",
    "check_flt",
    "check_frc",
    "check_gamma_independence",
    "check_natural",
    "check_pflt",
    "check_slice_cofiltered",
    "close_family",
    "co_dual",
    "colimit_direct",
    "colimit_via_localization",
    "compose_functors",
    "compose_premorphisms",
    "crosscheck_homcat",
    "crosscheck_iso",
    "el_prime",
    "elementary_homotopy",
    "elements",
    "equivalences",
    "evaluate",
    "family",
    "family_member_iso",
    "functors_equal",
    "gen_bicat",
    "gen_diagram",
    "gen_family",
    "hom_inclusion",
    "homcat_pronk",
    "homcat_via_colimit",
    "homotopic",
    "identity_functor",
    "identity_psf",
    "induced_W0",
    "is_1fibration",
    "is_cartesian1",
    "is_cartesian2",
    "is_cartesian_arrow",
    "is_cat_fibration",
    "is_cofibration",
    "is_connected",
    "is_contractible_groupoid",
    "is_equivalence1",
    "is_equivalence_of_categories",
    "is_fibration",
    "is_invertible2",
    "is_iso_of_categories",
    "lift_square",
    "lifted_family",
    "local_functor",
    "localize_left",
    "localize_right",
    "locally_discrete",
    "op_category",
    "op_dual",
    "op_dual_psf",
    "pi0",
    "premorphisms_between",
    "slice_over",
    "upgrade_to_invertible",
    "validate_bicategory",
    "validate_category",
    "validate_catvalued",
    "validate_catvalued_cocone",
    "validate_cocone",
    "validate_functor",
    "validate_psf",
]

__version__ = "0.1.0"

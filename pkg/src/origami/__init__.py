"""Square-tiled surfaces with exact integer arithmetic.

The layers build on one another: permutations (:mod:`origami.perms`),
origamis and canonical forms (:mod:`origami.surface`), translation
coverings and ramification (:mod:`origami.covering`), glued products
(:mod:`origami.fibre`), the bundled surfaces (:mod:`origami.zoo`),
SL(2,Z) orbits (:mod:`origami.veech`), integer homology and the
intersection form (:mod:`origami.homology`), affine actions on homology
(:mod:`origami.affine`), and the claim suites (:mod:`origami.verify`).
"""

from .affine import (
    AffineAction,
    Closure,
    ClosureCheck,
    DescentCertificate,
    affine_action,
    check_iff_trivial,
    check_pm_id,
    descent_certificate,
    monodromy_closure,
    translation_automorphisms,
)
from .covering import (
    CoveringMap,
    NotConnectedError,
    VoltageData,
    compose_covers,
    ramification_profile,
    rebase_to_grid,
    refine_cover,
    voltage_cover,
)
from .fibre import FibreProduct, fake_fibre_product, predicted_profile
from .homology import HomologyData, homology_basis, pushforward_matrix, split_subspaces
from .perms import cycles, format_cycles, inverse, parse_cycles
from .surface import (
    Origami,
    canonicalize,
    genus,
    is_equivalent,
    load_origami,
    make_origami,
    origami_from_text,
    origami_to_text,
    refine,
    save_origami,
    stratum,
    torus,
    vertex_structure,
)
from .veech import (
    CapExceededError,
    OrbitResult,
    minus_identity_in_veech,
    orbit_scan,
    orbit_stabilizer,
)
from .verify import (
    IsotropicWitness,
    VerificationReport,
    isotropic_witness_x,
    verify_homology_suite,
    verify_orni_suite,
    verify_x512_suite,
)
from .zoo import (
    NamedSurface,
    build_cov_m4,
    build_ew,
    build_ew128,
    build_m4,
    build_m4_tilde,
    build_torus,
    build_x512,
    build_y,
    from_spec,
)

__version__ = "0.1.0"

__all__ = [
    "AffineAction",
    "CapExceededError",
    "Closure",
    "ClosureCheck",
    "CoveringMap",
    "DescentCertificate",
    "FibreProduct",
    "HomologyData",
    "IsotropicWitness",
    "NamedSurface",
    "NotConnectedError",
    "OrbitResult",
    "Origami",
    "VerificationReport",
    "VoltageData",
    "affine_action",
    "build_cov_m4",
    "build_ew",
    "build_ew128",
    "build_m4",
    "build_m4_tilde",
    "build_torus",
    "build_x512",
    "build_y",
    "canonicalize",
    "check_iff_trivial",
    "check_pm_id",
    "compose_covers",
    "cycles",
    "descent_certificate",
    "fake_fibre_product",
    "format_cycles",
    "from_spec",
    "genus",
    "homology_basis",
    "inverse",
    "is_equivalent",
    "isotropic_witness_x",
    "load_origami",
    "make_origami",
    "minus_identity_in_veech",
    "monodromy_closure",
    "orbit_scan",
    "orbit_stabilizer",
    "origami_from_text",
    "origami_to_text",
    "parse_cycles",
    "predicted_profile",
    "pushforward_matrix",
    "ramification_profile",
    "rebase_to_grid",
    "refine",
    "refine_cover",
    "save_origami",
    "split_subspaces",
    "stratum",
    "torus",
    "translation_automorphisms",
    "verify_homology_suite",
    "verify_orni_suite",
    "verify_x512_suite",
    "vertex_structure",
    "voltage_cover",
]

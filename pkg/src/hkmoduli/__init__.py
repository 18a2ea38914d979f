"""Exact-arithmetic tools for moduli of polarized hyperkaehler manifolds.

The package decides, for the two deformation families with b2 = 23 (Hilbert
schemes of points on a K3 surface) and b2 = 7 (generalized Kummer varieties),
whether the moduli space of polarized pairs with a given dimension parameter
n, Beauville-Bogomolov-Fujiki degree 2d and divisibility t is non-empty, how
many connected components it has, and on which components the polarization is
base point free or very ample.  Everything is integer / rational arithmetic;
there are no floats anywhere.

Modules:
    arith    elementary number theory (factorization, phi, quadratic residues)
    lattice  BBF squares, divisibility, Gram-matrix cross-checks
    bundles  k-very-ampleness bounds for line bundles on K3/abelian surfaces
    moduli   non-emptiness, component counts, witnesses, ampleness thresholds
    oracle   brute-force lattice search used to cross-verify the formulas
    cli      command line front end
"""

from .arith import (
    NotInvertible,
    euler_phi,
    factorize,
    is_quadratic_residue,
    mod_inverse,
    qr_of_ratio,
    rho,
)
from .lattice import (
    DimensionMismatch,
    Family,
    GramLattice,
    LatticeClass,
    bbf_square,
    divisibility,
    embed_rank3,
    full_model,
    is_primitive,
    rank3_model,
)
from .bundles import (
    BundleSpec,
    BundleStatus,
    SurfaceKind,
    induced_bundle_status,
    max_k_very_ample,
)
from .moduli import (
    ComponentCountDetail,
    Decomposition,
    DivisibilityViolation,
    InternalInconsistency,
    ModuliQuery,
    ModuliReport,
    ThresholdDecision,
    Witness,
    component_count,
    component_count_detail,
    decompose,
    is_nonempty,
    nonempty_residue,
    prime_power_connected,
    report,
    thresholds,
    witness,
)
from .oracle import SearchBounds, default_bounds, enumerate_witnesses, verify_witness

__all__ = [
    "NotInvertible",
    "euler_phi",
    "factorize",
    "is_quadratic_residue",
    "mod_inverse",
    "qr_of_ratio",
    "rho",
    "DimensionMismatch",
    "Family",
    "GramLattice",
    "LatticeClass",
    "bbf_square",
    "divisibility",
    "embed_rank3",
    "full_model",
    "is_primitive",
    "rank3_model",
    "BundleSpec",
    "BundleStatus",
    "SurfaceKind",
    "induced_bundle_status",
    "max_k_very_ample",
    "ComponentCountDetail",
    "Decomposition",
    "DivisibilityViolation",
    "InternalInconsistency",
    "ModuliQuery",
    "ModuliReport",
    "ThresholdDecision",
    "Witness",
    "component_count",
    "component_count_detail",
    "decompose",
    "is_nonempty",
    "nonempty_residue",
    "prime_power_connected",
    "report",
    "thresholds",
    "witness",
    "SearchBounds",
    "default_bounds",
    "enumerate_witnesses",
    "verify_witness",
]

__version__ = "0.1.0"

"""fanalg: exact presentations, syzygy towers, and minimal free resolutions
of plane fan algebras of principal ideals."""

from .errors import FanAlgError
from .lattice2d import det2, primitive, bezout_complement
from .hilbert import HilbertBasis, hilbert_basis, brute_force_hilbert, validate_basis
from .fan import (
    Fan,
    FanLinearFamily,
    intersection_fan,
    fan_from_max_forms,
    validate_family,
    is_strict,
    coarsen,
)
from .polyring import Poly, YOrder, divide, phi0_eval, poly_from_str, poly_to_str
from .presentation import (
    Presentation,
    presentation_ideal,
    degenerate_presentation,
    hilbert_union,
    make_relation,
    specialize,
    verify_groebner,
    check_minimal_generation,
)
from .syzygy import (
    ModElem,
    SchreyerOrder,
    StageFamily,
    build_stage2,
    build_stage_next,
    enumerate_admissible,
    module_divide,
    module_spair,
    schreyer_compare,
)
from .resolution import (
    BettiTable,
    ChainComplex,
    betti,
    export_complex,
    resolve,
    verify_complex,
    verify_ranks,
)
from .oracle import (
    conjecture_refutation,
    identity_check,
    kernel_oracle,
    verify_kernel_oracle,
)

__all__ = [
    "FanAlgError",
    "det2",
    "primitive",
    "bezout_complement",
    "HilbertBasis",
    "hilbert_basis",
    "brute_force_hilbert",
    "validate_basis",
    "Fan",
    "FanLinearFamily",
    "intersection_fan",
    "fan_from_max_forms",
    "validate_family",
    "is_strict",
    "coarsen",
    "Poly",
    "YOrder",
    "divide",
    "phi0_eval",
    "poly_from_str",
    "poly_to_str",
    "Presentation",
    "presentation_ideal",
    "degenerate_presentation",
    "hilbert_union",
    "make_relation",
    "specialize",
    "verify_groebner",
    "check_minimal_generation",
    "ModElem",
    "SchreyerOrder",
    "StageFamily",
    "build_stage2",
    "build_stage_next",
    "enumerate_admissible",
    "module_divide",
    "module_spair",
    "schreyer_compare",
    "BettiTable",
    "ChainComplex",
    "betti",
    "export_complex",
    "resolve",
    "verify_complex",
    "verify_ranks",
    "conjecture_refutation",
    "identity_check",
    "kernel_oracle",
    "verify_kernel_oracle",
]

__version__ = "0.1.0"

"""Real-coefficient cubic solver built on the factorization
x^3 - 3rsx + rs(r+s) = s/(s-r)(x-r)^3 + r/(r-s)(x-s)^3.

Typical use:

    >>> from rscubic import GeneralCubic, solve
    >>> solve(GeneralCubic(0, -12, 16)).roots
    ((-4+0j), (2+0j), (2+0j))
"""

from .cardano import CardanoIntermediates, ComparisonReport, cardano_solve, compare_methods, match_root_sets
from .chen import (
    ExactValue,
    InvalidCaseError,
    RootTriple,
    TrigForm,
    newton_polish,
    solve,
    solve_conjugate,
    solve_degenerate,
    solve_depressed,
    solve_equal,
    solve_moebius,
    solve_real_distinct,
    solve_unified,
    unified_roots,
)
from .decompose import CaseTag, RsPair, classify, compute_rs, discriminant, rs_quadratic
from .denest import DenestResult, NestedRadical, denest, radical_to_cubic
from .numerics import (
    OMEGA,
    OMEGA2,
    CubeRootBranch,
    cube_root,
    cube_roots_all,
    principal_arg,
    principal_cube_root,
    real_cube_root,
)
from .parsing import ParseError, parse_coefficient, parse_cubic
from .reduction import (
    DepressedCubic,
    GeneralCubic,
    InvalidInputError,
    Shift,
    depress,
    lift_roots,
)
from .verify import (
    VerificationReport,
    brute_force_roots,
    decomposition_identity_residual,
    ratio_cube_residual,
    trig_identity_residuals,
    verify_roots,
)

__version__ = "0.1.0"

__all__ = [
    "OMEGA",
    "OMEGA2",
    "CardanoIntermediates",
    "CaseTag",
    "ComparisonReport",
    "CubeRootBranch",
    "DenestResult",
    "DepressedCubic",
    "ExactValue",
    "GeneralCubic",
    "InvalidCaseError",
    "InvalidInputError",
    "NestedRadical",
    "ParseError",
    "RootTriple",
    "RsPair",
    "Shift",
    "TrigForm",
    "VerificationReport",
    "brute_force_roots",
    "cardano_solve",
    "classify",
    "compare_methods",
    "compute_rs",
    "cube_root",
    "cube_roots_all",
    "decomposition_identity_residual",
    "denest",
    "depress",
    "discriminant",
    "lift_roots",
    "match_root_sets",
    "newton_polish",
    "parse_coefficient",
    "parse_cubic",
    "principal_arg",
    "principal_cube_root",
    "radical_to_cubic",
    "ratio_cube_residual",
    "real_cube_root",
    "rs_quadratic",
    "solve",
    "solve_conjugate",
    "solve_degenerate",
    "solve_depressed",
    "solve_equal",
    "solve_moebius",
    "solve_real_distinct",
    "solve_unified",
    "trig_identity_residuals",
    "unified_roots",
    "verify_roots",
]

"""Exact algebraic combinatorics of Hessenberg functions.

Unicellular LLT polynomials and chromatic quasisymmetric functions by two
independent engines (coloring enumeration and the modular-law recursion),
graded S_n-Frobenius characteristics of the GKM congruence presentations of
Hessenberg varieties and their twin manifolds, and machine verification of
the identities relating all of these.  Everything is computed in exact
rational arithmetic; mod-p linear algebra is used only as a dual-prime
certified fast path for the larger GKM systems.
"""

from hessllt.qpoly import QPoly, QSeries, InexactDivision, q_int, q_factorial
from hessllt.symfunc import (
    SymFunc,
    GradedSymFunc,
    DegreeMismatch,
    omega,
    hall_pairing,
    power_sum_scaling,
    frobenius_from_character,
)
from hessllt.hessenberg import (
    HessFn,
    ModularTriple,
    NotNondecreasing,
    BelowDiagonal,
    OutOfRange,
    enumerate_hessenberg,
    find_triples,
)
from hessllt.llt import (
    asc,
    llt_direct,
    csf_direct,
    llt_recursive,
    csf_recursive,
    k_poly,
    csf_base,
    poincare,
)
from hessllt.gkm import (
    GKMGraph,
    build_gkm,
    solve_degree,
    hilbert_and_betti,
    dagger_character,
    dot_character,
    frobenius_graded,
    xi_check,
    PrimeDisagreement,
    MarginViolation,
)
from hessllt.identities import (
    f_series,
    verify_f_recursions,
    verify_k_palindromicity,
    verify_laws,
    verify_plethystic,
    verify_gkm_llt,
)

__version__ = "0.1.0"

__all__ = [
    "QPoly", "QSeries", "InexactDivision", "q_int", "q_factorial",
    "SymFunc", "GradedSymFunc", "DegreeMismatch", "omega", "hall_pairing",
    "power_sum_scaling", "frobenius_from_character",
    "HessFn", "ModularTriple", "NotNondecreasing", "BelowDiagonal",
    "OutOfRange", "enumerate_hessenberg", "find_triples",
    "asc", "llt_direct", "csf_direct", "llt_recursive", "csf_recursive",
    "k_poly", "csf_base", "poincare",
    "GKMGraph", "build_gkm", "solve_degree", "hilbert_and_betti",
    "dagger_character", "dot_character", "frobenius_graded", "xi_check",
    "PrimeDisagreement", "MarginViolation",
    "f_series", "verify_f_recursions", "verify_k_palindromicity",
    "verify_laws", "verify_plethystic", "verify_gkm_llt",
]

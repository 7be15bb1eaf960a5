"""Generalized Struve function L_nu(z; a): arbitrary-precision series
evaluation and large-|z| asymptotic expansions.

The normalized function calL_nu(z; a) = (z/2)^(-nu-1) L_nu(z; a) is the
primary quantity throughout; `unnormalize` recovers L_nu itself.
"""

__version__ = "0.1.0"

from .errors import (DegenerateParameter, DoublePole, HigherOrderPole,
                     IllConditioned, PoleOfGamma, PrecisionExhausted,
                     SectorUnsupported, SingularTerm, StruveError,
                     TruncationUnstable, ZeroArgument)
from .wright import (ANGLE_TOL, Dominance, Regime, Sector, StruveParams,
                     WrightParams, classify, derive_params,
                     smallest_copy_count)
from .series import (EvalResult, Method, eval_alternating, eval_series,
                     gamma_ap, unnormalize)
from .coeffs import (AppendixReport, CoeffTable, closed_form_c123,
                     rational_reconstruct, solve_coeffs,
                     verify_appendix_identity)
from .asym import (AsymptoticEstimate, Component, PhasedPoint,
                   TruncationPolicy, alg_expansion_H12, alg_hat_H21,
                   assemble_neg_imag, assemble_neg_real, assemble_pos,
                   asymptotic_estimate, exp_expansion_E, exp_hat_E21,
                   tilde_E_n)
from .tables import compute_table, parse_q, parse_z

__all__ = [
    "__version__",
    "StruveError", "DegenerateParameter", "PoleOfGamma", "SingularTerm",
    "PrecisionExhausted", "IllConditioned", "HigherOrderPole", "DoublePole",
    "ZeroArgument", "TruncationUnstable", "SectorUnsupported",
    "StruveParams", "WrightParams", "Regime", "Sector", "Dominance",
    "derive_params", "classify", "smallest_copy_count", "ANGLE_TOL",
    "EvalResult", "Method", "gamma_ap", "eval_series", "eval_alternating",
    "unnormalize",
    "CoeffTable", "AppendixReport", "closed_form_c123", "solve_coeffs",
    "verify_appendix_identity", "rational_reconstruct",
    "TruncationPolicy", "Component", "AsymptoticEstimate", "PhasedPoint",
    "exp_expansion_E", "alg_expansion_H12", "tilde_E_n", "exp_hat_E21",
    "alg_hat_H21", "assemble_pos", "assemble_neg_real", "assemble_neg_imag",
    "asymptotic_estimate",
    "compute_table", "parse_q", "parse_z",
]

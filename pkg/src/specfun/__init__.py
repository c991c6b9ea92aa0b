"""
Special Functions Module

Gamma, Beta and Pochhammer with explicit pole reporting, the Gauss
hypergeometric function with branch selection, and adaptive quadrature.
"""

from src.specfun.gamma import beta, gamma, gamma_sign, is_pole, log_gamma, pochhammer
from src.specfun.hypergeometric import (
    AsymptoticSplit,
    Branch,
    HypergeometricValue,
    HypParams,
    hyp2f1,
    hyp2f1_asymptotic_split,
    recombine_split,
)
from src.specfun.quadrature import QuadResult, integrate
from src.specfun.identities import beta_integral_identity_check

__all__ = [
    "beta",
    "gamma",
    "gamma_sign",
    "is_pole",
    "log_gamma",
    "pochhammer",
    "AsymptoticSplit",
    "Branch",
    "HypergeometricValue",
    "HypParams",
    "hyp2f1",
    "hyp2f1_asymptotic_split",
    "recombine_split",
    "QuadResult",
    "integrate",
    "beta_integral_identity_check",
]

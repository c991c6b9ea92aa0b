"""
Beta-Integral Identity

    int_0^1 t^(r-1) (1-t)^(r'-1) (1-tx)^(-r-r') dt = B(r, r') 2F1(r+r', r; r+r'; x)

The right-hand side collapses to B(r, r') (1-x)^-r.
"""

from src.errors import DomainError
from src.specfun.gamma import beta
from src.specfun.hypergeometric import HypParams, hyp2f1
from src.specfun.quadrature import integrate


def beta_integral_identity_check(r: float, r2: float, x: float, tol: float = 1e-12) -> float:
    """|quadrature LHS - B(r, r') 2F1(r+r', r; r+r'; x)|.

    The endpoint powers go to the quadrature weight, so r, r' < 1 are handled
    without sampling the singularities.
    """
    if not (r > 0 and r2 > 0):
        raise DomainError("the identity needs r > 0 and r' > 0")
    if not abs(x) < 1:
        raise DomainError("the identity needs |x| < 1")
    lhs = integrate(
        lambda t: (1.0 - t * x) ** (-r - r2),
        0.0,
        1.0,
        tol=tol,
        endpoint_powers=(r - 1.0, r2 - 1.0),
    )
    rhs = beta(r, r2) * hyp2f1(HypParams(r + r2, r, r + r2), x).value
    return abs(lhs.value - rhs)

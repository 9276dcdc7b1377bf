"""Exact Chebyshev-type polynomial identities and fan-graph quadratic
embedding constants.

The package splits into exact polynomial arithmetic (`polynomial`), the
polynomial families and their machine-checked identity battery
(`chebyshev`), certified minimal-zero extraction (`roots`), graph and
distance-matrix construction (`graphs`), the three independent constant
computations (`qec`), and a command-line front end (`cli`).
"""

from .chebyshev import (
    IdentityCheck,
    IdentityReport,
    NotIntegral,
    cheb_t,
    cheb_u,
    cheb_v,
    cheb_w,
    compress,
    identity_suite,
    partial_e,
    partial_e_value,
    partial_o,
    partial_o_value,
    phi,
    phi_value,
    s_poly,
    s_value,
    u_value,
)
from .graphs import (
    Disconnected,
    Graph,
    ParseError,
    distance_matrix,
    fan,
    from_edge_list,
    join,
    path,
    path_adjacency,
    path_eigenvector,
    path_spectrum,
    single,
)
from .polynomial import ONE, X, ZERO, NotDivisible, Poly
from .qec import (
    CrossCheckReport,
    CrossCheckRow,
    Method,
    NearSingular,
    OrderingViolation,
    QecResult,
    cross_validate,
    helmert_basis,
    jacobi_eigenvalues,
    key_identity_check,
    qec_fan,
    qec_numeric,
    sigma,
    tau,
)
from .roots import (
    BadBracket,
    Bracket,
    ZeroCert,
    alpha,
    beta,
    bisect,
    check_elementary_inequality,
    gamma,
    zeros_of_s,
)

__version__ = "0.1.0"

__all__ = [
    "BadBracket",
    "Bracket",
    "CrossCheckReport",
    "CrossCheckRow",
    "Disconnected",
    "Graph",
    "IdentityCheck",
    "IdentityReport",
    "Method",
    "NearSingular",
    "NotDivisible",
    "NotIntegral",
    "ONE",
    "OrderingViolation",
    "ParseError",
    "Poly",
    "QecResult",
    "X",
    "ZERO",
    "ZeroCert",
    "alpha",
    "beta",
    "bisect",
    "cheb_t",
    "cheb_u",
    "cheb_v",
    "cheb_w",
    "check_elementary_inequality",
    "compress",
    "cross_validate",
    "distance_matrix",
    "fan",
    "from_edge_list",
    "gamma",
    "helmert_basis",
    "identity_suite",
    "jacobi_eigenvalues",
    "join",
    "key_identity_check",
    "partial_e",
    "partial_e_value",
    "partial_o",
    "partial_o_value",
    "path",
    "path_adjacency",
    "path_eigenvector",
    "path_spectrum",
    "phi",
    "phi_value",
    "qec_fan",
    "qec_numeric",
    "s_poly",
    "s_value",
    "sigma",
    "single",
    "tau",
    "u_value",
    "zeros_of_s",
]

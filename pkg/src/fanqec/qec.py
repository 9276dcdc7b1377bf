"""Quadratic embedding constants of fan graphs, three independent ways.

The numeric oracle works straight from the definition: compress the distance
matrix onto the hyperplane orthogonal to the all-ones vector with an explicit
Helmert basis and take the top eigenvalue of the compressed matrix with a
cyclic Jacobi sweep.  The closed form covers even path lengths, and the
root-based route goes through the certified minimal zero machinery.  The two
stationary-value branches (resolvent zeros and admissible path eigenvalues)
are exposed separately so their decomposition can be cross-checked.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import roots
from .graphs import Graph, distance_matrix, fan, path_spectrum


class NearSingular(ValueError):
    """Shift parameter too close to a path eigenvalue or to +/-2."""


class OrderingViolation(AssertionError):
    """A proven strict ordering failed numerically."""


class Method(str, enum.Enum):
    KNOWN_SMALL = "known-small"
    CLOSED_FORM_EVEN = "closed-form-even"
    ROOT_BASED = "root-based"
    NUMERIC_ORACLE = "numeric-oracle"


@dataclass(frozen=True)
class QecResult:
    """Computed constant with the method used and its certificate data."""

    value: float
    method: Method
    certificate: dict[str, float] | None = None


def helmert_basis(m: int) -> np.ndarray:
    """Orthonormal rows spanning the hyperplane orthogonal to the ones vector.

    Row k (1-based) has k entries 1/sqrt(k(k+1)) followed by -k/sqrt(k(k+1))
    and zeros.
    """
    if m < 2:
        raise ValueError("need at least two coordinates")
    q = np.zeros((m - 1, m))
    for k in range(1, m):
        r = 1.0 / math.sqrt(k * (k + 1))
        q[k - 1, :k] = r
        q[k - 1, k] = -k * r
    return q


def jacobi_eigenvalues(mat: np.ndarray, tol: float = 1e-12,
                       max_sweeps: int = 100) -> tuple[np.ndarray, float]:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.

    Sweeps the strict upper triangle in a fixed row-major order until the
    off-diagonal Frobenius norm drops below tol times the Frobenius norm.
    Returns eigenvalues sorted descending and the final off-diagonal norm.
    """
    a = np.array(mat, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    a = 0.5 * (a + a.T)
    m = a.shape[0]
    fro = float(np.linalg.norm(a))
    if m == 1 or fro == 0.0:
        return np.sort(np.diag(a))[::-1].copy(), 0.0

    def offnorm() -> float:
        # Sum only the off-diagonal squares: the textbook fro^2 - sum(diag^2)
        # difference cancels catastrophically once nearly converged.
        strict = a - np.diag(np.diag(a))
        return float(np.linalg.norm(strict))

    off = offnorm()
    for _ in range(max_sweeps):
        if off <= tol * fro:
            break
        for p in range(m - 1):
            for q in range(p + 1, m):
                apq = float(a[p, q])
                if apq == 0.0:
                    continue
                diff = float(a[q, q] - a[p, p])
                if abs(apq) < 1e-150 * abs(diff):
                    # Rotation would be the identity to machine precision.
                    a[p, q] = a[q, p] = 0.0
                    continue
                theta = 0.5 * diff / apq
                t = 1.0 / (abs(theta) + math.sqrt(1.0 + theta * theta))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
        off = offnorm()
    else:
        raise RuntimeError(f"no convergence after {max_sweeps} sweeps (off = {off:g})")
    return np.sort(np.diag(a))[::-1].copy(), off


def qec_numeric(g: Graph, tol: float = 1e-12) -> QecResult:
    """Constant straight from the definition: the maximum of <f, Df> over
    unit vectors orthogonal to the ones vector, via subspace compression.

    Independent of every closed form in this package, which is what makes it
    an oracle.
    """
    if g.n_vertices < 2:
        raise ValueError("need at least two vertices")
    d = distance_matrix(g).astype(float)
    q = helmert_basis(g.n_vertices)
    compressed = q @ d @ q.T
    evals, off = jacobi_eigenvalues(compressed, tol)
    return QecResult(float(evals[0]), Method.NUMERIC_ORACLE, {"offdiag_norm": off})


def qec_fan(n: int, method: Method | str = "auto", tol: float = 1e-12) -> QecResult:
    """Constant of the fan over a path of n vertices.

    Auto selection: the two smallest fans are complete graphs with value -1;
    even n uses the closed form -4 sin^2(pi / (2(n+1))); odd n >= 3 uses
    -2 alpha_n - 2 with alpha_n the certified minimal zero.
    """
    if n < 1:
        raise ValueError("fan needs n >= 1")
    if method == "auto":
        if n <= 2:
            method = Method.KNOWN_SMALL
        elif n % 2 == 0:
            method = Method.CLOSED_FORM_EVEN
        else:
            method = Method.ROOT_BASED
    method = Method(method)

    if method is Method.KNOWN_SMALL:
        if n > 2:
            raise ValueError("known-small covers only the two complete-graph fans")
        return QecResult(-1.0, method, None)
    if method is Method.CLOSED_FORM_EVEN:
        if n % 2:
            raise ValueError("closed form is proven for even path lengths only")
        angle = math.pi / (2 * (n + 1))
        return QecResult(-4.0 * math.sin(angle) ** 2, method, {"angle": angle})
    if method is Method.NUMERIC_ORACLE:
        return qec_numeric(fan(n), tol)

    # root-based, valid for every n >= 1
    if n == 1:
        return QecResult(-1.0, method, {"minimal_zero": -0.5})
    if n % 2 == 0:
        b = roots.beta(n)
        return QecResult(-2.0 * b - 2.0, method, {"minimal_zero": b})
    cert = roots.gamma(n, tol)
    return QecResult(-2.0 * cert.value - 2.0, method,
                     {"minimal_zero": cert.value,
                      "bracket_lo": float(cert.lo), "bracket_hi": float(cert.hi)})


def tau(n: int) -> float | None:
    """Minimal admissible path eigenvalue branch; None where no eigenvalue
    below -1 has an eigenvector orthogonal to the ones vector (n = 3, 5)."""
    if n < 3:
        raise ValueError("defined for n >= 3")
    if n in (3, 5):
        return None
    m = n // 2
    if n % 2:
        return 2.0 * math.cos(2 * m * math.pi / (2 * m + 2))
    return 2.0 * math.cos(2 * m * math.pi / (2 * m + 1))


def sigma(n: int, tol: float = 1e-12) -> float:
    """Minimal non-eigenvalue stationary branch, equal to twice the minimal
    companion-polynomial zero; asserts its proven position relative to the
    path spectrum."""
    if n < 3:
        raise ValueError("defined for n >= 3")
    value = 2.0 * roots.gamma(n, tol).value
    spectrum = path_spectrum(n)
    if n % 2:
        if not value < spectrum[n - 1]:
            raise OrderingViolation(
                f"sigma({n}) = {value} not below the smallest path eigenvalue")
    else:
        if not spectrum[n - 1] < value < spectrum[n - 2]:
            raise OrderingViolation(
                f"sigma({n}) = {value} not between the two smallest path eigenvalues")
    return value


def key_identity_check(n: int, alpha: Fraction | int) -> float:
    """|LHS - RHS| of the resolvent identity for <1, (A_n - a I)^{-1} 1>.

    The left side solves the tridiagonal system directly; the right side uses
    the halved-variable second-kind recurrence.  The shift must stay 1e-6
    away from the path spectrum and from +/-2.
    """
    if n < 1:
        raise ValueError("path needs n >= 1")
    af = float(Fraction(alpha))
    spectrum = path_spectrum(n)
    margin = 1e-6
    if min(abs(af - w) for w in spectrum) <= margin:
        raise NearSingular(f"{af} within {margin} of a path eigenvalue")
    if abs(af - 2.0) <= margin or abs(af + 2.0) <= margin:
        raise NearSingular(f"{af} within {margin} of +/-2")

    # Thomas elimination for (A_n - a I) g = 1.
    diag = -af
    cp = np.empty(n)
    dp = np.empty(n)
    cp[0] = 1.0 / diag
    dp[0] = 1.0 / diag
    for i in range(1, n):
        denom = diag - cp[i - 1]
        cp[i] = 1.0 / denom
        dp[i] = (1.0 - dp[i - 1]) / denom
    g = np.empty(n)
    g[n - 1] = dp[n - 1]
    for i in range(n - 2, -1, -1):
        g[i] = dp[i] - cp[i] * g[i + 1]
    lhs = float(g.sum())

    # Halved-variable recurrence: P_{k+1} = a P_k - P_{k-1}.
    prev, cur = 1.0, af
    for _ in range(n - 1):
        prev, cur = cur, af * cur - prev
    un, un1 = (cur, prev) if n >= 1 else (1.0, 0.0)
    rhs = (n * (2.0 - af) + 2.0 - 2.0 * (un1 + 1.0) / un) / (2.0 - af) ** 2
    return abs(lhs - rhs)


@dataclass(frozen=True)
class CrossCheckRow:
    n: int
    fan_value: float
    oracle_value: float
    decomposition_value: float
    passed: bool


@dataclass
class CrossCheckReport:
    tol: float
    rows: list[CrossCheckRow]

    @property
    def failures(self) -> list[CrossCheckRow]:
        return [r for r in self.rows if not r.passed]

    @property
    def ok(self) -> bool:
        return not self.failures


def cross_validate(n_max: int, tol: float = 1e-8) -> CrossCheckReport:
    """Check the fan constant three ways for 3 <= n <= n_max.

    Per n: the selected method against the numeric oracle, and against the
    stationary-branch decomposition -min(sigma, tau) - 2 (tau is absent for
    n in {3, 5} and the minimum falls back to sigma alone).
    """
    if n_max < 3:
        raise ValueError("n_max must be >= 3")
    rows = []
    for n in range(3, n_max + 1):
        fan_value = qec_fan(n).value
        oracle_value = qec_numeric(fan(n)).value
        t = tau(n)
        s = sigma(n)
        branch_min = s if t is None else min(s, t)
        decomposition = -branch_min - 2.0
        passed = (abs(fan_value - oracle_value) <= tol
                  and abs(fan_value - decomposition) <= tol)
        rows.append(CrossCheckRow(n, fan_value, oracle_value, decomposition, passed))
    return CrossCheckReport(tol, rows)

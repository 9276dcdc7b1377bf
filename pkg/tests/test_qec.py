"""The three constant computations and their cross-checks."""

import math
import random
from fractions import Fraction

import numpy as np
import pytest

from fanqec import qec as qec_module
from fanqec.graphs import Graph, fan, path, path_spectrum
from fanqec.qec import (
    Method,
    NearSingular,
    OrderingViolation,
    cross_validate,
    helmert_basis,
    jacobi_eigenvalues,
    key_identity_check,
    qec_fan,
    qec_numeric,
    sigma,
    tau,
)
from fanqec.roots import ZeroCert, beta


def even_closed_form(n: int) -> float:
    return -4.0 * math.sin(math.pi / (2 * (n + 1))) ** 2


class TestHelmertBasis:
    @pytest.mark.parametrize("m", [2, 3, 7, 30])
    def test_orthonormal_and_orthogonal_to_ones(self, m):
        q = helmert_basis(m)
        assert q.shape == (m - 1, m)
        assert np.abs(q @ q.T - np.eye(m - 1)).max() < 1e-12
        assert np.abs(q @ np.ones(m)).max() < 1e-12

    def test_needs_two_coordinates(self):
        with pytest.raises(ValueError):
            helmert_basis(1)


class TestJacobi:
    def test_random_symmetric_sanity(self):
        # Gershgorin discs must contain every returned eigenvalue and the
        # eigenvalue sum must equal the trace.
        rng = np.random.default_rng(20240811)
        for _ in range(10):
            a = rng.standard_normal((20, 20))
            a = 0.5 * (a + a.T)
            evals, off = jacobi_eigenvalues(a, 1e-12)
            centers = np.diag(a)
            radii = np.abs(a).sum(axis=1) - np.abs(centers)
            assert (centers - radii).min() - 1e-9 <= evals.min()
            assert evals.max() <= (centers + radii).max() + 1e-9
            assert abs(evals.sum() - np.trace(a)) < 1e-9
            assert off <= 1e-12 * np.linalg.norm(a)

    def test_matches_dense_solver(self):
        rng = np.random.default_rng(7)
        a = rng.standard_normal((15, 15))
        a = 0.5 * (a + a.T)
        evals, _ = jacobi_eigenvalues(a)
        assert np.abs(np.sort(evals) - np.linalg.eigvalsh(a)).max() < 1e-9

    def test_diagonal_input(self):
        evals, off = jacobi_eigenvalues(np.diag([3.0, -1.0, 2.0]))
        assert evals.tolist() == [3.0, 2.0, -1.0]
        assert off == 0.0

    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            jacobi_eigenvalues(np.zeros((2, 3)))


class TestNumericOracle:
    def test_complete_graphs(self):
        assert qec_numeric(fan(1)).value == pytest.approx(-1.0, abs=1e-12)
        assert qec_numeric(fan(2)).value == pytest.approx(-1.0, abs=1e-12)

    def test_smallest_noncomplete_fan(self):
        result = qec_numeric(fan(3))
        assert result.value == pytest.approx(-0.5, abs=1e-10)
        assert result.method is Method.NUMERIC_ORACLE
        assert result.certificate["offdiag_norm"] >= 0.0

    def test_path_value_is_negative(self):
        assert qec_numeric(path(5)).value < 0

    def test_single_vertex_rejected(self):
        with pytest.raises(ValueError):
            qec_numeric(Graph(1, frozenset()))


class TestFanConstant:
    def test_known_small(self):
        for n in (1, 2):
            result = qec_fan(n)
            assert result.value == -1.0
            assert result.method is Method.KNOWN_SMALL

    def test_even_closed_form(self):
        result = qec_fan(4)
        assert result.method is Method.CLOSED_FORM_EVEN
        assert result.value == pytest.approx(even_closed_form(4), abs=0)
        assert result.value == pytest.approx(-0.3819660113, abs=1e-9)

    def test_even_equals_minimal_zero_route(self):
        for n in range(2, 201, 2):
            closed = qec_fan(n, method=Method.CLOSED_FORM_EVEN).value
            root = qec_fan(n, method=Method.ROOT_BASED).value
            assert abs(closed - root) <= 1e-12
            assert abs(root - (-2.0 * beta(n) - 2.0)) == 0.0

    def test_odd_inside_proven_bounds(self):
        result = qec_fan(5)
        assert result.method is Method.ROOT_BASED
        lower = -4.0 * math.sin(math.pi / 12) ** 2
        upper = -4.0 * math.sin(math.pi / 14) ** 2
        assert lower < result.value < upper

    def test_root_certificate_carries_bracket(self):
        cert = qec_fan(7).certificate
        assert cert["bracket_lo"] <= cert["minimal_zero"] <= cert["bracket_hi"]

    def test_oracle_agreement_small(self):
        for n in range(1, 21):
            assert abs(qec_fan(n).value - qec_numeric(fan(n)).value) <= 1e-8

    def test_method_restrictions(self):
        with pytest.raises(ValueError):
            qec_fan(5, method=Method.CLOSED_FORM_EVEN)
        with pytest.raises(ValueError):
            qec_fan(3, method=Method.KNOWN_SMALL)
        with pytest.raises(ValueError):
            qec_fan(0)


class TestBranchValues:
    def test_tau_absent(self):
        assert tau(3) is None
        assert tau(5) is None

    def test_tau_values(self):
        assert tau(4) == pytest.approx(2 * math.cos(4 * math.pi / 5), abs=0)
        assert tau(7) == pytest.approx(-math.sqrt(2), abs=1e-15)
        assert tau(6) == pytest.approx(2 * math.cos(6 * math.pi / 7), abs=0)

    def test_tau_needs_three(self):
        with pytest.raises(ValueError):
            tau(2)

    def test_sigma_orderings(self):
        w4 = path_spectrum(4)
        assert w4[3] < sigma(4) < w4[2]
        assert sigma(5) < path_spectrum(5)[4]
        assert sigma(3) == pytest.approx(-1.5, abs=0)  # 2 * (-3/4), exact zero

    def test_sigma_ordering_violation_detected(self, monkeypatch):
        fake = ZeroCert(0.0, Fraction(0), Fraction(0), True)
        monkeypatch.setattr(qec_module.roots, "gamma", lambda n, tol=1e-12: fake)
        with pytest.raises(OrderingViolation):
            sigma(9)


class TestKeyIdentity:
    def test_tiny_path(self):
        assert key_identity_check(1, -3) < 1e-12

    def test_examples(self):
        assert key_identity_check(5, Fraction(-5, 2)) <= 1e-10
        assert key_identity_check(10, 3) <= 1e-10

    def test_random_admissible_samples(self):
        rng = random.Random(20250810)
        count = 0
        while count < 50:
            n = rng.randint(1, 60)
            num = rng.randint(201, 1000) * rng.choice((-1, 1))
            a = Fraction(num, 100)  # |a| in [2.01, 10]
            assert key_identity_check(n, a) <= 1e-9
            count += 1

    def test_near_eigenvalue_rejected(self):
        with pytest.raises(NearSingular):
            key_identity_check(2, 1)  # largest eigenvalue of the 2-path

    def test_near_two_rejected(self):
        with pytest.raises(NearSingular):
            key_identity_check(4, 2)


class TestCrossValidation:
    def test_small_range(self):
        report = cross_validate(8, 1e-8)
        assert report.ok
        first = report.rows[0]
        assert first.n == 3
        assert first.fan_value == pytest.approx(-0.5, abs=1e-10)
        assert first.decomposition_value == pytest.approx(-0.5, abs=1e-10)

    def test_absent_branch_handled(self):
        report = cross_validate(6, 1e-8)
        assert {r.n for r in report.rows} == {3, 4, 5, 6}
        assert report.ok

    def test_even_zero_is_wrong_for_odd_indices(self):
        # Substituting the even-factor zero for the companion zero at an odd
        # index must break oracle agreement: the case split is real.
        wrong = -2.0 * beta(7) - 2.0
        assert abs(wrong - qec_numeric(fan(7)).value) > 1e-8

    def test_needs_three(self):
        with pytest.raises(ValueError):
            cross_validate(2)

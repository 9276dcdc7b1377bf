"""Acceptance gate: every criterion at its stated tolerance.

Each test prints one ``ACCEPTANCE <k> PASS/FAIL`` line (visible with -s, or
in captured output on failure); the test outcome itself is the gate.
"""

import contextlib
import math
import random
import time
from fractions import Fraction

import pytest

from fanqec.chebyshev import s_poly, s_value
from fanqec.cli import main
from fanqec.graphs import fan, path_eigenvector
from fanqec.qec import cross_validate, key_identity_check, qec_fan, qec_numeric
from fanqec.roots import beta, gamma, zeros_of_s


@contextlib.contextmanager
def criterion(num: int, description: str):
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {num} FAIL: {description}")
        raise
    print(f"ACCEPTANCE {num} PASS: {description}")


def even_closed_form(n: int) -> float:
    return -4.0 * math.sin(math.pi / (2 * (n + 1))) ** 2


def test_criterion_1_exact_identity_battery(capsys):
    with criterion(1, "exact identity battery to n=300 via verify CLI"):
        start = time.monotonic()
        code = main(["verify", "--max-n", "300"])
        elapsed = time.monotonic() - start
        out = capsys.readouterr().out
        assert code == 0, out
        assert "0 failures" in out
        print(f"  verify --max-n 300 took {elapsed:.1f}s (target < 60s)")
        assert elapsed < 60.0


def test_criterion_2_known_values():
    with criterion(2, "known constants of the three smallest fans"):
        for n in (1, 2):
            assert qec_fan(n).value == -1.0
            assert abs(qec_numeric(fan(n)).value - (-1.0)) <= 1e-9
        assert abs(qec_fan(3).value - (-0.5)) <= 1e-10


def test_criterion_3_even_closed_form_vs_oracle():
    with criterion(3, "even closed form against the numeric oracle, n <= 60"):
        start = time.monotonic()
        for n in range(2, 61, 2):
            got = qec_numeric(fan(n)).value
            assert abs(got - even_closed_form(n)) <= 1e-8, f"n={n}"
        assert time.monotonic() - start < 120.0


def test_criterion_4_odd_bounds():
    with criterion(4, "odd constants strictly inside the proven bounds, n <= 201"):
        for n in range(3, 202, 2):
            value = qec_fan(n).value
            lower = -4.0 * math.sin(math.pi / (2 * (n + 1))) ** 2
            upper = -4.0 * math.sin(math.pi / (2 * (n + 2))) ** 2
            assert lower < value < upper, f"n={n}"


def test_criterion_5_monotone_convergence():
    with criterion(5, "strict increase of the constants on 3 <= n <= 200"):
        values = [qec_fan(n).value for n in range(3, 201)]
        assert values[0] == pytest.approx(-0.5, abs=1e-10)
        for a, b in zip(values, values[1:]):
            assert a < b < 0.0
        assert qec_fan(200).value > qec_fan(199).value


def test_criterion_6_root_structure():
    with criterion(6, "zero interlacing, simplicity, and orderings, n <= 120"):
        for n in range(0, 121):
            certs = zeros_of_s(n, 1e-9)
            assert len(certs) == s_poly(n).degree, f"n={n}: zero count"
            values = [c.value for c in certs]
            assert values == sorted(values), f"n={n}: not ascending"
            assert all(c.simple for c in certs), f"n={n}: non-simple zero"
            m, odd = divmod(n, 2)
            den = 2 * m + 2 if odd else 2 * m + 1
            count = m + 1 if odd else m
            xi = [math.cos((2 * k - 1) * math.pi / den)
                  for k in range(1, count + 1)]
            # endpoint signs alternate like (-1)^k
            for k in range(1, count + 1):
                sign = 1 if s_value(n, xi[k - 1]) > 0 else -1
                assert sign == (-1) ** k, f"n={n}: endpoint sign at k={k}"
            # one zero strictly inside each grid interval, highest zero is 1
            for i, value in enumerate(values[:-1]):
                k = count - i
                lo = -1.0 if k == count else xi[k]
                assert lo < value < xi[k - 1], f"n={n}: zero outside bracket"
            assert values[-1] == 1.0
        # comparison orderings of the two minimal-zero families
        for m in range(2, 61):
            n = 2 * m
            edge = math.cos((2 * m - 1) * math.pi / (2 * m + 1))
            assert -1.0 < beta(n) < gamma(n).value < edge, f"n={n}"
        for m in range(1, 60):
            n = 2 * m + 1
            edge = math.cos((2 * m + 1) * math.pi / (2 * m + 2))
            assert -1.0 < gamma(n).value < edge < beta(n), f"n={n}"
        # interleaving of odd companion zeros between even-factor zeros
        for n in range(3, 120, 2):
            assert beta(n + 1) < gamma(n).value < beta(n - 1), f"n={n}"


def test_criterion_7_key_identity_and_eigenvector_pattern():
    with criterion(7, "resolvent identity residuals and ones-orthogonality"):
        rng = random.Random(987123)
        for _ in range(50):
            n = rng.randint(1, 60)
            num = rng.randint(201, 1000) * rng.choice((-1, 1))
            residual = key_identity_check(n, Fraction(num, 100))
            assert residual <= 1e-9, f"n={n}, alpha={num / 100}"
        for n in range(1, 61):
            for k in range(1, n + 1):
                inner = float(path_eigenvector(n, k).sum())
                if k % 2 == 0:
                    assert abs(inner) <= 1e-9, f"n={n}, k={k}"
                else:
                    assert abs(inner) > 1e-9, f"n={n}, k={k}"


def test_criterion_8_oracle_self_consistency():
    with criterion(8, "three-way agreement of the constants, 3 <= n <= 60"):
        report = cross_validate(60, 1e-8)
        bad = [r.n for r in report.failures]
        assert report.ok, f"failures at n={bad}"

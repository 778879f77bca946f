"""Tests for chars module."""

import cmath
import math
import random

import numpy as np
import pytest

from ffcount.chars import (
    MultChar,
    eta,
    gauss_sum_numeric,
    gauss_sum_vector,
    is_dth_power,
    orthogonality_sum,
    psi,
    root_of_unity,
    s_numeric,
    s_table,
)
from ffcount.errors import DegenerateCharacterWarning, FieldError, NotInvertibleError
from ffcount.gf import FieldCtx


class TestRootOfUnity:
    """Tests for root_of_unity."""

    def test_axes_are_exact(self) -> None:
        """Test that quarter turns are exact."""
        assert root_of_unity(0, 8) == 1
        assert root_of_unity(2, 8) == 1j
        assert root_of_unity(4, 8) == -1
        assert root_of_unity(6, 8) == -1j

    def test_negation_is_conjugation(self) -> None:
        """Test that exponent negation gives the exact conjugate."""
        for d in (3, 5, 7, 12, 80):
            for e in range(d):
                assert root_of_unity(-e, d) == root_of_unity(e, d).conjugate()

    def test_matches_cmath(self) -> None:
        """Test agreement with exp(2 pi i e / d)."""
        for e in range(17):
            expected = cmath.exp(2j * math.pi * e / 17)
            assert abs(root_of_unity(e, 17) - expected) < 1e-12


class TestAdditiveCharacter:
    """Tests for psi."""

    def test_psi_zero(self, f81: FieldCtx) -> None:
        """Test psi(0) = 1."""
        assert psi(f81, f81.zero) == 1

    def test_psi_is_additive(self, f64: FieldCtx) -> None:
        """Test psi(a + b) = psi(a) psi(b)."""
        rng = random.Random(4)
        for _ in range(200):
            a, b = f64.element(rng.randrange(64)), f64.element(rng.randrange(64))
            assert abs(psi(f64, a + b) - psi(f64, a) * psi(f64, b)) < 1e-10

    def test_psi_values_are_pth_roots(self, f729: FieldCtx) -> None:
        """Test psi(x)^p = 1."""
        for value in range(0, 729, 37):
            assert abs(psi(f729, f729.element(value)) ** 3 - 1) < 1e-10


class TestOrthogonality:
    """Tests for the additive orthogonality sum."""

    def test_zero(self, f81: FieldCtx) -> None:
        """Test that the sum at 0 is q."""
        assert orthogonality_sum(f81, f81.zero) == 81

    @pytest.mark.parametrize("fixture", ["f16", "f81", "f31", "f729"])
    def test_nonzero(self, fixture: str, request: pytest.FixtureRequest) -> None:
        """Test that the sum at every nonzero x vanishes."""
        field: FieldCtx = request.getfixturevalue(fixture)
        for x in field.nonzero():
            assert abs(orthogonality_sum(field, x)) < 1e-8


class TestMultiplicativeCharacter:
    """Tests for MultChar and eta."""

    def test_order_must_divide(self, f16: FieldCtx) -> None:
        """Test that the order has to divide q - 1."""
        with pytest.raises(FieldError, match="does not divide"):
            MultChar(f16, 4)

    def test_trivial(self, f16: FieldCtx) -> None:
        """Test the trivial characters."""
        assert MultChar(f16, 0).is_trivial
        assert MultChar(f16, 1).is_trivial
        assert MultChar(f16, 5, 10).is_trivial
        assert not MultChar(f16, 5, 2).is_trivial

    def test_eta_at_zero(self, f16: FieldCtx) -> None:
        """Test eta(0) = 0, and 1 for the trivial character."""
        assert eta(MultChar(f16, 5), f16.zero) == 0
        assert eta(MultChar(f16, 0), f16.zero) == 1

    def test_eta_of_generator(self, f81: FieldCtx) -> None:
        """Test eta_4(generator) = i."""
        assert eta(MultChar(f81, 4), f81.generator) == 1j

    def test_conjugate_is_exact(self, f81: FieldCtx) -> None:
        """Test eta.conj()(x) == conj(eta(x)) exactly."""
        for d in (4, 5, 8, 80):
            for power in range(1, d):
                chi = MultChar(f81, d, power)
                for x in f81.nonzero():
                    assert eta(chi.conj(), x) == eta(chi, x).conjugate()

    def test_multiplicative(self, f256: FieldCtx) -> None:
        """Test eta(xy) = eta(x) eta(y)."""
        chi = MultChar(f256, 17, 3)
        rng = random.Random(5)
        for _ in range(300):
            x = f256.element(rng.randrange(1, 256))
            y = f256.element(rng.randrange(1, 256))
            assert abs(eta(chi, x * y) - eta(chi, x) * eta(chi, y)) < 1e-10

    def test_values_by_log(self, f16: FieldCtx) -> None:
        """Test that values_by_log agrees with eta at generator powers."""
        chi = MultChar(f16, 5, 2)
        values = chi.values_by_log()
        for k in range(15):
            assert abs(values[k] - eta(chi, f16.gen_pow(k))) < 1e-12

    @pytest.mark.parametrize("d", [4, 5, 10, 16])
    def test_sum_over_powers_detects_dth_powers(self, d: int, f81: FieldCtx) -> None:
        """Test sum_j eta_d^j(x) = d on nonzero d-th powers and 0 elsewhere."""
        for x in f81.nonzero():
            total = sum(eta(MultChar(f81, d, j), x) for j in range(d))
            expected = d if is_dth_power(f81, x, d) else 0
            assert total == pytest.approx(expected, abs=1e-9)

    @pytest.mark.parametrize("fixture", ["f31", "f81"])
    def test_quadratic_character(self, fixture: str, request: pytest.FixtureRequest) -> None:
        """Test eta_2(x) = x^((q-1)/2) read as +1 or -1 for odd q."""
        field: FieldCtx = request.getfixturevalue(fixture)
        chi = MultChar(field, 2)
        for x in field.nonzero():
            half = x ** (field.order // 2)
            assert half in (field.one, -field.one)
            expected = 1 if half == field.one else -1
            assert eta(chi, x) == pytest.approx(expected, abs=1e-12)


class TestDthPowers:
    """Tests for is_dth_power."""

    def test_matches_image_of_power_map(self, f81: FieldCtx) -> None:
        """Test agreement with the set of d-th powers."""
        for d in (4, 5, 10, 16):
            powers = {(y**d).value for y in f81.nonzero()}
            for x in f81.nonzero():
                assert is_dth_power(f81, x, d) == (x.value in powers)

    def test_zero(self, f81: FieldCtx) -> None:
        """Test that 0 raises NotInvertibleError."""
        with pytest.raises(NotInvertibleError):
            is_dth_power(f81, f81.zero, 4)

    def test_d_must_divide(self, f81: FieldCtx) -> None:
        """Test that d must divide q - 1."""
        with pytest.raises(FieldError):
            is_dth_power(f81, f81.one, 3)


class TestGaussSums:
    """Tests for numeric Gauss sums."""

    def test_trivial_warns(self, f16: FieldCtx) -> None:
        """Test that the trivial character gives -1 with a warning."""
        with pytest.warns(DegenerateCharacterWarning):
            value = gauss_sum_numeric(MultChar(f16, 5, 0))
        assert abs(value + 1) < 1e-10

    @pytest.mark.parametrize("fixture", ["f16", "f31", "f81", "f256"])
    def test_absolute_value(self, fixture: str, request: pytest.FixtureRequest) -> None:
        """Test |G(eta)| = sqrt(q) for nontrivial eta."""
        field: FieldCtx = request.getfixturevalue(fixture)
        for d in (3, 5, 15, 30, 80, 255):
            if field.order % d:
                continue
            for power in range(1, d):
                value = gauss_sum_numeric(MultChar(field, d, power))
                assert abs(abs(value) - math.sqrt(field.q)) < 1e-8

    def test_conjugate_relation(self, f81: FieldCtx) -> None:
        """Test G(conj eta) = eta(-1) conj(G(eta))."""
        chi = MultChar(f81, 16, 3)
        minus_one = eta(chi, -f81.one)
        left = gauss_sum_numeric(chi.conj())
        right = minus_one * gauss_sum_numeric(chi).conjugate()
        assert abs(left - right) < 1e-8

    def test_vector_matches_direct_sum(self, f81: FieldCtx) -> None:
        """Test that the FFT vector holds G(omega^(-v))."""
        vector = gauss_sum_vector(f81)
        assert abs(vector[0] + 1) < 1e-9
        for v in range(1, 80):
            direct = gauss_sum_numeric(MultChar(f81, 80, -v % 80))
            assert abs(vector[v] - direct) < 1e-8


class TestSTable:
    """Tests for S(u, d)."""

    def test_at_zero(self, f16: FieldCtx) -> None:
        """Test S(0, d) = q - 1."""
        assert s_numeric(f16, f16.zero, 5) == 15

    @pytest.mark.parametrize("d", [1, 2, 3, 4, 5, 6, 7])
    def test_table_matches_direct_sum(self, f64: FieldCtx, d: int) -> None:
        """Test the coset-sum table against direct summation for every u."""
        table = s_table(f64, d)
        for u in f64.nonzero():
            assert abs(table[f64.dlog(u)] - s_numeric(f64, u, d)) < 1e-8

    def test_linear_exponent(self, f81: FieldCtx) -> None:
        """Test S(u, 1) = -1 for u != 0."""
        assert np.allclose(s_table(f81, 1), -1.0)

"""Tests for gf module."""

import random

import numpy as np
import pytest

from ffcount.errors import FieldError, NotInvertibleError
from ffcount.gf import (
    FieldCtx,
    build_field,
    field_from_description,
    is_irreducible,
    smallest_irreducible,
)


class TestBuildField:
    """Tests for field construction."""

    def test_prime_field(self, f7: FieldCtx) -> None:
        """Test that F_7 uses x as modulus and 3 as generator."""
        assert f7.q == 7
        assert f7.modulus == (0, 1)
        assert f7.generator_value == 3

    def test_default_modulus_f16(self, f16: FieldCtx) -> None:
        """Test that the default F_16 modulus is x^4 + x + 1."""
        assert f16.modulus == (1, 1, 0, 0, 1)
        assert f16.generator_value == 2

    def test_deterministic(self, f81: FieldCtx) -> None:
        """Test that building the same field twice gives equal contexts."""
        assert build_field(3, 4) == f81

    def test_custom_modulus(self, f16: FieldCtx) -> None:
        """Test building F_16 from x^4 + x^3 + 1."""
        field = build_field(2, 4, [1, 0, 0, 1, 1])

        assert field.q == 16
        assert field.key != f16.key
        assert field != f16

    @pytest.mark.parametrize("p,m", [(4, 1), (1, 2), (15, 1)])
    def test_composite_characteristic(self, p: int, m: int) -> None:
        """Test that a non-prime characteristic is rejected."""
        with pytest.raises(FieldError, match="prime"):
            build_field(p, m)

    def test_zero_degree(self) -> None:
        """Test that m = 0 is rejected."""
        with pytest.raises(FieldError, match="at least 1"):
            build_field(5, 0)

    def test_order_bound(self) -> None:
        """Test that fields above 2^20 elements are rejected."""
        with pytest.raises(FieldError, match="exceeds"):
            build_field(2, 21)

    def test_reducible_modulus(self) -> None:
        """Test that x^4 + 1 = (x + 1)^4 is rejected over F_2."""
        with pytest.raises(FieldError, match="reducible"):
            build_field(2, 4, [1, 0, 0, 0, 1])

    def test_non_monic_modulus(self) -> None:
        """Test that a non-monic modulus is rejected."""
        with pytest.raises(FieldError, match="monic"):
            build_field(3, 2, [1, 0, 2])

    def test_wrong_modulus_length(self) -> None:
        """Test that a modulus of the wrong degree is rejected."""
        with pytest.raises(FieldError, match="coefficients"):
            build_field(3, 2, [1, 1])

    def test_smallest_irreducible_is_irreducible(self) -> None:
        """Test the default modulus for several small fields."""
        for p, m in [(2, 2), (2, 8), (3, 4), (5, 2), (7, 3)]:
            modulus = smallest_irreducible(p, m)
            assert len(modulus) == m + 1
            assert modulus[-1] == 1
            assert is_irreducible(modulus, p)


class TestDescription:
    """Tests for the serialized field description."""

    def test_round_trip(self, f81: FieldCtx) -> None:
        """Test that a description rebuilds the same field."""
        assert field_from_description(f81.description) == f81

    def test_without_modulus(self, f16: FieldCtx) -> None:
        """Test that 'p,m' uses the default modulus."""
        assert field_from_description("2,4") == f16

    def test_invalid(self) -> None:
        """Test that malformed descriptions raise FieldError."""
        with pytest.raises(FieldError, match="Invalid field description"):
            field_from_description("two,four")


class TestTables:
    """Tests for log and antilog tables."""

    def test_log_sentinel(self, f81: FieldCtx) -> None:
        """Test that log_table[0] is -1 and the rest lies in [0, q-2]."""
        assert f81.log_table[0] == -1
        assert f81.log_table[1:].min() == 0
        assert f81.log_table[1:].max() == f81.q - 2

    def test_generator_has_full_order(self, f256: FieldCtx) -> None:
        """Test that the generator's powers cover F_q^*."""
        powers = {f256.gen_pow(k).value for k in range(f256.order)}
        assert powers == set(range(1, f256.q))

    def test_antilog_inverts_log(self, f729: FieldCtx) -> None:
        """Test gen_pow(dlog(a)) == a for every nonzero a."""
        for a in f729.nonzero():
            assert f729.gen_pow(f729.dlog(a)) == a

    def test_gen_pow_wraps(self, f16: FieldCtx) -> None:
        """Test that exponents are reduced mod q - 1."""
        assert f16.gen_pow(15) == f16.one
        assert f16.gen_pow(-1) == f16.gen_pow(14)

    def test_tables_read_only(self, f16: FieldCtx) -> None:
        """Test that the tables cannot be modified."""
        with pytest.raises(ValueError):
            f16.log_table[1] = 5

    def test_digit_table(self, f81: FieldCtx) -> None:
        """Test that digit_table matches coeffs()."""
        for value in [0, 1, 5, 40, 80]:
            assert list(f81.digit_table[value]) == f81.coeffs(f81.element(value))


class TestArithmetic:
    """Tests for field arithmetic."""

    def test_characteristic_two(self) -> None:
        """Test 1 + 1 = 0 in F_4."""
        f4 = build_field(2, 2)
        assert f4.one + f4.one == f4.zero

    def test_prime_field_matches_integers(self, f31: FieldCtx) -> None:
        """Test that F_31 arithmetic is arithmetic mod 31."""
        for a in range(31):
            for b in range(31):
                x, y = f31.element(a), f31.element(b)
                assert (x + y).value == (a + b) % 31
                assert (x - y).value == (a - b) % 31
                assert (x * y).value == (a * b) % 31

    def test_inverse(self, f81: FieldCtx) -> None:
        """Test a * inv(a) = 1 for every nonzero a."""
        for a in f81.nonzero():
            assert a * f81.inv(a) == f81.one

    def test_negation(self, f81: FieldCtx) -> None:
        """Test a + (-a) = 0."""
        for a in f81.elements():
            assert a + (-a) == f81.zero

    def test_distributive(self, f64: FieldCtx) -> None:
        """Test a * (b + c) = a*b + a*c on random triples."""
        rng = random.Random(1)
        for _ in range(500):
            a, b, c = (f64.element(rng.randrange(64)) for _ in range(3))
            assert a * (b + c) == a * b + a * c

    def test_frobenius_is_additive(self, f729: FieldCtx) -> None:
        """Test (a + b)^p = a^p + b^p."""
        rng = random.Random(2)
        for _ in range(300):
            a, b = f729.element(rng.randrange(729)), f729.element(rng.randrange(729))
            assert (a + b) ** 3 == a**3 + b**3

    def test_fermat(self, f256: FieldCtx) -> None:
        """Test a^(q-1) = 1 for nonzero a."""
        for a in f256.nonzero():
            assert a ** 255 == f256.one

    def test_zero_powers(self, f16: FieldCtx) -> None:
        """Test 0^0 = 1 and 0^k = 0."""
        assert f16.zero ** 0 == f16.one
        assert f16.zero ** 3 == f16.zero
        with pytest.raises(NotInvertibleError):
            f16.pow(f16.zero, -1)

    def test_inverse_of_zero(self, f16: FieldCtx) -> None:
        """Test that inv(0), x / 0 and dlog(0) raise NotInvertibleError."""
        with pytest.raises(NotInvertibleError):
            f16.inv(f16.zero)
        with pytest.raises(NotInvertibleError):
            f16.one / f16.zero
        with pytest.raises(NotInvertibleError):
            f16.dlog(f16.zero)

    def test_integer_operands(self, f7: FieldCtx) -> None:
        """Test that ints are read as elements of the prime subfield."""
        assert (f7.element(3) + 5).value == 1
        assert (2 * f7.element(4)).value == 1
        assert (1 - f7.element(3)).value == 5

    def test_cross_field_operands(self, f16: FieldCtx, f81: FieldCtx) -> None:
        """Test that mixing fields raises FieldError."""
        with pytest.raises(FieldError, match="different fields"):
            f16.one + f81.one

    def test_no_integer_equality(self, f7: FieldCtx) -> None:
        """Test that elements never compare equal to ints."""
        assert f7.one != 1

    def test_element_range(self, f16: FieldCtx) -> None:
        """Test that encodings outside [0, q-1] are rejected."""
        with pytest.raises(FieldError):
            f16.element(16)

    def test_residue_of_x_is_primitive(self, f16: FieldCtx) -> None:
        """Test that the residue class of x generates F_16*."""
        x = f16.from_coeffs([0, 1])

        assert x == f16.generator
        assert len({(x ** k).value for k in range(15)}) == 15

    def test_from_coeffs_matches_coeffs(self, f81: FieldCtx) -> None:
        """Test that from_coeffs inverts coeffs and pads missing digits."""
        for a in f81.elements():
            assert f81.from_coeffs(f81.coeffs(a)) == a
        assert f81.from_coeffs([2]) == f81.from_int(2)

    def test_from_coeffs_too_long(self, f16: FieldCtx) -> None:
        """Test that more than m coefficients are rejected."""
        with pytest.raises(FieldError, match="at most 4"):
            f16.from_coeffs([1, 0, 0, 0, 1])

    def test_str(self, f16: FieldCtx) -> None:
        """Test the g^k rendering."""
        assert str(f16.zero) == "0"
        assert str(f16.one) == "g^0"
        assert str(f16.gen_pow(7)) == "g^7"


class TestTrace:
    """Tests for the absolute trace."""

    def test_trace_in_prime_field(self, f81: FieldCtx) -> None:
        """Test that every trace lies in [0, p)."""
        assert all(0 <= f81.trace(a) < 3 for a in f81.elements())

    def test_trace_of_one(self, f729: FieldCtx) -> None:
        """Test Tr(1) = m mod p."""
        assert f729.trace(f729.one) == 6 % 3

    def test_trace_is_additive(self, f256: FieldCtx) -> None:
        """Test Tr(a + b) = Tr(a) + Tr(b) mod p."""
        rng = random.Random(3)
        for _ in range(300):
            a, b = f256.element(rng.randrange(256)), f256.element(rng.randrange(256))
            assert f256.trace(a + b) == (f256.trace(a) + f256.trace(b)) % 2

    def test_trace_is_balanced(self, f81: FieldCtx) -> None:
        """Test that each residue is the trace of q/p elements."""
        counts = np.bincount(f81.trace_table, minlength=3)
        assert list(counts) == [27, 27, 27]

    def test_trace_table(self, f64: FieldCtx) -> None:
        """Test that the vectorised table agrees with trace()."""
        for a in f64.elements():
            assert f64.trace_table[a.value] == f64.trace(a)

"""Tests for parser module."""

import pytest

from ffcount.errors import ParseError
from ffcount.gf import FieldCtx
from ffcount.parser import parse_expr, parse_poly, print_poly, tokenize
from ffcount.poly import SparsePoly


class TestTokenize:
    """Tests for the tokenizer."""

    def test_tokens(self) -> None:
        """Test token kinds and positions."""
        tokens = tokenize("3*x12^4 - g")

        assert [t.kind for t in tokens] == ["NUM", "OP", "VAR", "OP", "NUM", "OP", "GEN", "END"]
        assert tokens[2].value == 12
        assert tokens[6].position == 10

    def test_unicode_minus(self) -> None:
        """Test that U+2212 is read as '-'."""
        tokens = tokenize("x − 1")
        assert tokens[1].text == "-"

    def test_unexpected_character(self) -> None:
        """Test that unknown characters raise with their position."""
        with pytest.raises(ParseError) as excinfo:
            tokenize("x + w")
        assert excinfo.value.position == 4

    def test_index_zero(self) -> None:
        """Test that x0 is rejected."""
        with pytest.raises(ParseError, match="start at 1"):
            tokenize("x0 + x1")


class TestParsePoly:
    """Tests for parse_poly."""

    def test_diagonal(self, f81: FieldCtx) -> None:
        """Test parsing x^4 + y^4 + z^4 - 1."""
        f = parse_poly("x^4 + y^4 + z^4 - 1", f81)

        assert f.n_vars == 3
        assert [t.exponents for t in f.terms] == [(4, 0, 0), (0, 4, 0), (0, 0, 4)]
        assert f.constant == f81.one
        assert f.is_diagonal()

    def test_generator_coefficients(self, f256: FieldCtx) -> None:
        """Test g and g^k coefficients."""
        f = parse_poly("g*x^17 + g^18*y^17 - 1", f256)

        assert f.coefficients == (f256.generator, f256.gen_pow(18))
        assert f.constant == f256.one

    def test_integer_coefficients_reduce(self, f31: FieldCtx) -> None:
        """Test that integer coefficients reduce mod p."""
        f = parse_poly("42*x + 5*y", f31)
        assert [c.value for c in f.coefficients] == [11, 5]

    def test_indexed_variables(self, f16: FieldCtx) -> None:
        """Test x1, x2, x3 and repeated variables in one term."""
        f = parse_poly("x1^6*x2^2*x3 + x1*x2^7*x3^11", f16)

        assert f.n_vars == 3
        assert [t.exponents for t in f.terms] == [(6, 2, 1), (1, 7, 11)]
        assert parse_poly("x*x^2", f16).terms[0].exponents == (3,)

    def test_constant_on_left(self, f7: FieldCtx) -> None:
        """Test that a leading constant moves to the right-hand side."""
        f = parse_poly("3 + x^2", f7)
        assert f.constant == f7.element(4)

    def test_leading_minus(self, f7: FieldCtx) -> None:
        """Test a negated first term."""
        f = parse_poly("-x + y", f7)
        assert f.coefficients[0] == f7.element(6)

    def test_constants_combine(self, f7: FieldCtx) -> None:
        """Test that several constant terms add up."""
        f = parse_poly("x + 2 + 3", f7)
        assert f.constant == f7.element(2)

    def test_explicit_width(self, f16: FieldCtx) -> None:
        """Test padding to a requested variable count."""
        f = parse_poly("x^5 + y^5", f16, n_vars=3)
        assert f.n_vars == 3
        with pytest.raises(ParseError):
            parse_poly("x + y + z", f16, n_vars=2)

    def test_expr_width(self, f5: FieldCtx) -> None:
        """Test the variable count of a parsed expression."""
        assert parse_expr("x^2*y^3 + x*y^2", f5).n_vars == 2
        assert parse_expr("1", f5).n_vars == 0


class TestParseErrors:
    """Tests for parser diagnostics."""

    @pytest.mark.parametrize(
        "text,position",
        [
            ("", 0),
            ("x +", 3),
            ("x y", 2),
            ("2*3", 2),
            ("x^", 2),
            ("x^-2", 2),
        ],
    )
    def test_positions(self, f7: FieldCtx, text: str, position: int) -> None:
        """Test the reported error position."""
        with pytest.raises(ParseError) as excinfo:
            parse_poly(text, f7)
        assert excinfo.value.position == position

    def test_negative_exponent_message(self, f7: FieldCtx) -> None:
        """Test that negative exponents get their own message."""
        with pytest.raises(ParseError, match="Negative exponents"):
            parse_poly("x^-2", f7)

    def test_zero_coefficient(self, f5: FieldCtx) -> None:
        """Test that a coefficient divisible by p is rejected."""
        with pytest.raises(ParseError, match="reduces to 0"):
            parse_poly("x + 5*y", f5)

    def test_exponent_cap(self, f7: FieldCtx) -> None:
        """Test that exponents at or above the cap are rejected."""
        with pytest.raises(ParseError, match="cap"):
            parse_poly("x^100", f7, exponent_cap=100)
        assert parse_poly("x^99", f7, exponent_cap=100).terms[0].exponents == (99,)

    def test_variable_cap_default(self, f7: FieldCtx) -> None:
        """Test that huge variable indices are rejected at the x."""
        with pytest.raises(ParseError, match="exceeds the cap") as excinfo:
            parse_poly("y + x100000000", f7)
        assert excinfo.value.position == 4

    def test_variable_cap(self, f7: FieldCtx) -> None:
        """Test a custom variable cap, aliases included."""
        assert parse_poly("x1 + x4", f7, variable_cap=4).n_vars == 4
        with pytest.raises(ParseError, match="exceeds the cap 4"):
            parse_poly("x1 + x5", f7, variable_cap=4)
        with pytest.raises(ParseError) as excinfo:
            tokenize("x + z", variable_cap=2)
        assert excinfo.value.position == 4

    def test_caret(self, f7: FieldCtx) -> None:
        """Test the caret rendering."""
        with pytest.raises(ParseError) as excinfo:
            parse_poly("x + ?", f7)
        lines = excinfo.value.caret().splitlines()

        assert lines[0] == "x + ?"
        assert lines[1].startswith("    ^")


class TestPrintPoly:
    """Tests for print_poly."""

    def test_rendering(self, f81: FieldCtx) -> None:
        """Test the canonical text."""
        f = parse_poly("x^4 + g^3*y^4 - 1", f81)
        assert print_poly(f) == "x1^4 + g^3*x2^4 - 1"

    def test_constants(self, f7: FieldCtx) -> None:
        """Test rendering of negated coefficients and a bare constant."""
        assert print_poly(parse_poly("x - x", f7)) == "x1 + g^3*x1"
        assert print_poly(parse_poly("3", f7)) == "-g^4"
        assert print_poly(SparsePoly.from_terms(f7, [], n_vars=0)) == "0"

    @pytest.mark.parametrize(
        "text",
        [
            "x1^6*x2^2*x3 + x1*x2^7*x3^11",
            "g*x^17 + g^18*y^17 - 1",
            "x^7 + 2*x^7*y^21 - g",
            "11*x^13 + 5*x^21*y^19 + 12*x^2*y^3*z^17",
        ],
    )
    def test_round_trip(self, text: str, request: pytest.FixtureRequest) -> None:
        """Test that printing and parsing again gives the same polynomial."""
        for fixture in ("f16", "f256", "f729", "f31"):
            field: FieldCtx = request.getfixturevalue(fixture)
            try:
                f = parse_poly(text, field)
            except ParseError:
                continue
            assert parse_poly(print_poly(f), field) == f

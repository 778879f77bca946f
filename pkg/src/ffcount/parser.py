"""Polynomial expression grammar.

    poly   := ['-'] term (('+' | '-') term)*
    term   := [coeff '*'] factor ('*' factor)* | coeff
    factor := var ['^' nat]
    coeff  := nat | 'g' ['^' nat]
    var    := 'x' nat | 'x' | 'y' | 'z'

``g`` is the field generator and bare integers reduce mod p. Variables
x, y, z are aliases for x1, x2, x3. Pure-constant terms form the constant;
"f = c" is stored as the equation f = -c.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from ffcount.errors import ParseError
from ffcount.gf import FieldCtx, FieldElement
from ffcount.poly import SparsePoly

DEFAULT_EXPONENT_CAP = 10**6
DEFAULT_VARIABLE_CAP = 1024

_ALIASES = {"x": 1, "y": 2, "z": 3}
_MINUS = ("-", "−")


@dataclass
class Token:
    kind: str  # NUM, VAR, GEN, OP, END
    text: str
    position: int
    value: int = 0


def tokenize(text: str, variable_cap: int = DEFAULT_VARIABLE_CAP) -> List[Token]:
    """Split text into tokens; variable indices must lie in [1, variable_cap]."""
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            start = i
            while i < len(text) and text[i].isdigit():
                i += 1
            tokens.append(Token("NUM", text[start:i], start, int(text[start:i])))
        elif ch == "x":
            start = i
            i += 1
            while i < len(text) and text[i].isdigit():
                i += 1
            index = int(text[start + 1:i]) if i > start + 1 else 1
            if index < 1:
                raise ParseError("Variable indices start at 1", text, start)
            if index > variable_cap:
                raise ParseError(
                    f"Variable index {index} exceeds the cap {variable_cap}", text, start
                )
            tokens.append(Token("VAR", text[start:i], start, index))
        elif ch in "yz":
            if _ALIASES[ch] > variable_cap:
                raise ParseError(
                    f"Variable index {_ALIASES[ch]} exceeds the cap {variable_cap}", text, i
                )
            tokens.append(Token("VAR", ch, i, _ALIASES[ch]))
            i += 1
        elif ch == "g":
            tokens.append(Token("GEN", ch, i))
            i += 1
        elif ch in "+*^" or ch in _MINUS:
            tokens.append(Token("OP", "-" if ch in _MINUS else ch, i))
            i += 1
        else:
            raise ParseError(f"Unexpected character {ch!r}", text, i)
    tokens.append(Token("END", "", len(text)))
    return tokens


@dataclass
class PolyExpr:
    """Parsed expression: terms in source order and the right-hand side b."""

    source: str
    terms: List[Tuple[FieldElement, List[Tuple[int, int]]]] = field(default_factory=list)
    constant: Optional[FieldElement] = None

    @property
    def n_vars(self) -> int:
        return max((var for _, factors in self.terms for var, _ in factors), default=0)

    def to_poly(self, ctx: FieldCtx, n_vars: Optional[int] = None) -> SparsePoly:
        width = self.n_vars if n_vars is None else n_vars
        if width < self.n_vars:
            raise ParseError(
                f"Expression uses {self.n_vars} variables but only {width} were requested",
                self.source,
                0,
            )
        pairs = []
        for coeff, factors in self.terms:
            exponents = [0] * width
            for var, e in factors:
                exponents[var - 1] += e
            pairs.append((coeff, exponents))
        return SparsePoly.from_terms(
            ctx, pairs, self.constant if self.constant is not None else ctx.zero, width
        )


class _Parser:
    def __init__(
        self, text: str, ctx: FieldCtx, exponent_cap: int, variable_cap: int
    ) -> None:
        self.text = text
        self.ctx = ctx
        self.exponent_cap = exponent_cap
        self.tokens = tokenize(text, variable_cap)
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def error(self, message: str, token: Optional[Token] = None) -> ParseError:
        return ParseError(message, self.text, (token or self.peek()).position)

    def is_op(self, symbol: str) -> bool:
        token = self.peek()
        return token.kind == "OP" and token.text == symbol

    def parse(self) -> PolyExpr:
        expr = PolyExpr(self.text)
        constant = self.ctx.zero
        negative = False
        if self.is_op("-"):
            self.advance()
            negative = True
        elif self.peek().kind == "END":
            raise self.error("Empty expression")

        while True:
            coeff, factors = self.parse_term()
            if negative:
                coeff = -coeff
            if factors:
                expr.terms.append((coeff, factors))
            else:
                constant = constant + coeff
            if self.is_op("+") or self.is_op("-"):
                negative = self.advance().text == "-"
                continue
            if self.peek().kind != "END":
                raise self.error(f"Expected '+' or '-', found {self.peek().text!r}")
            break

        expr.constant = -constant
        return expr

    def parse_term(self) -> Tuple[FieldElement, List[Tuple[int, int]]]:
        coeff = self.ctx.one
        factors: List[Tuple[int, int]] = []
        if self.peek().kind in ("NUM", "GEN"):
            coeff = self.parse_coeff()
            if not self.is_op("*"):
                return coeff, factors
            self.advance()
            factors.append(self.parse_factor())
        else:
            factors.append(self.parse_factor())
        while self.is_op("*"):
            self.advance()
            factors.append(self.parse_factor())
        return coeff, factors

    def parse_coeff(self) -> FieldElement:
        token = self.advance()
        if token.kind == "NUM":
            value = self.ctx.from_int(token.value)
            if value.value == 0:
                raise self.error(f"Coefficient {token.value} reduces to 0 mod {self.ctx.p}", token)
            return value
        if self.is_op("^"):
            self.advance()
            return self.ctx.gen_pow(self.parse_nat())
        return self.ctx.generator

    def parse_factor(self) -> Tuple[int, int]:
        token = self.peek()
        if token.kind != "VAR":
            raise self.error(f"Expected a variable, found {token.text or 'end of input'!r}")
        self.advance()
        exponent = 1
        if self.is_op("^"):
            self.advance()
            exponent = self.parse_nat()
        return token.value, exponent

    def parse_nat(self) -> int:
        token = self.peek()
        if token.kind == "OP" and token.text == "-":
            raise self.error("Negative exponents are not allowed")
        if token.kind != "NUM":
            found = token.text or "end of input"
            raise self.error(f"Expected a non-negative integer, found {found!r}")
        if token.value >= self.exponent_cap:
            raise self.error(f"Exponent {token.value} is not below the cap {self.exponent_cap}")
        self.advance()
        return token.value


def parse_expr(
    text: str,
    ctx: FieldCtx,
    exponent_cap: Optional[int] = None,
    variable_cap: Optional[int] = None,
) -> PolyExpr:
    """Parse text into a PolyExpr without fixing the variable count."""
    return _Parser(
        text, ctx, exponent_cap or DEFAULT_EXPONENT_CAP, variable_cap or DEFAULT_VARIABLE_CAP
    ).parse()


def parse_poly(
    text: str,
    ctx: FieldCtx,
    n_vars: Optional[int] = None,
    exponent_cap: Optional[int] = None,
    variable_cap: Optional[int] = None,
) -> SparsePoly:
    """Parse text into a SparsePoly over ctx.

    Args:
        text: Expression in the grammar above
        ctx: Field the coefficients live in
        n_vars: Ambient variable count; defaults to the largest index used
        exponent_cap: Exponents must be below this value
        variable_cap: Largest allowed variable index

    Raises:
        ParseError: On syntax errors, zero coefficients, oversized exponents or
            variable indices above the cap
    """
    return parse_expr(text, ctx, exponent_cap, variable_cap).to_poly(ctx, n_vars)


def _format_coeff(coeff: FieldElement) -> str:
    if coeff.value == 1:
        return "1"
    return f"g^{coeff.ctx.dlog(coeff)}"


def print_poly(f: SparsePoly) -> str:
    """Canonical text of f; parsing it back gives the same terms and constant."""
    parts = []
    for term in f.terms:
        factors = [
            f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"
            for i, e in enumerate(term.exponents)
            if e
        ]
        if term.coeff.value != 1:
            factors.insert(0, _format_coeff(term.coeff))
        parts.append("*".join(factors) if factors else _format_coeff(term.coeff))
    text = " + ".join(parts)
    if f.constant.value != 0:
        text = f"{text} - {_format_coeff(f.constant)}" if text else f"-{_format_coeff(f.constant)}"
    return text or "0"

"""Sparse multivariate polynomials over F_q.

A ``SparsePoly`` describes the equation sum(a_j * X**D_j) = b. The constant b
is kept as the right-hand side, so the polynomial itself carries -b.
"""

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from ffcount.errors import FieldError
from ffcount.gf import FieldCtx, FieldElement


@dataclass(frozen=True)
class Term:
    """A monomial a * X**D with a != 0."""

    coeff: FieldElement
    exponents: Tuple[int, ...]

    @property
    def support(self) -> Tuple[int, ...]:
        """Indices of the variables with a positive exponent."""
        return tuple(i for i, e in enumerate(self.exponents) if e > 0)


@dataclass(frozen=True)
class SparsePoly:
    ctx: FieldCtx
    n_vars: int
    terms: Tuple[Term, ...]
    constant: FieldElement

    def __post_init__(self) -> None:
        if self.n_vars < 0:
            raise ValueError(f"n_vars must be non-negative, got {self.n_vars}")
        self.ctx._check(self.constant)
        for term in self.terms:
            self.ctx._check(term.coeff)
            if term.coeff.value == 0:
                raise FieldError("Term coefficients must be nonzero")
            if len(term.exponents) != self.n_vars:
                raise ValueError(
                    f"Exponent vector {term.exponents} does not have length {self.n_vars}"
                )
            if any(e < 0 for e in term.exponents):
                raise ValueError(f"Negative exponent in {term.exponents}")

    @classmethod
    def from_terms(
        cls,
        ctx: FieldCtx,
        terms: Iterable[Tuple[FieldElement, Sequence[int]]],
        constant: Optional[FieldElement] = None,
        n_vars: Optional[int] = None,
    ) -> "SparsePoly":
        """Build from (coefficient, exponent vector) pairs; short vectors are zero-padded."""
        pairs = [(coeff, tuple(int(e) for e in exps)) for coeff, exps in terms]
        width = max((len(exps) for _, exps in pairs), default=0)
        if n_vars is None:
            n_vars = width
        elif n_vars < width:
            raise ValueError(f"n_vars = {n_vars} is smaller than the exponent vectors ({width})")
        built = tuple(
            Term(coeff, exps + (0,) * (n_vars - len(exps))) for coeff, exps in pairs
        )
        return cls(ctx, n_vars, built, ctx.zero if constant is None else constant)

    @property
    def s(self) -> int:
        """Number of monomial terms."""
        return len(self.terms)

    @property
    def coefficients(self) -> Tuple[FieldElement, ...]:
        return tuple(term.coeff for term in self.terms)

    def is_diagonal(self) -> bool:
        """Each term is a power of a single variable and no variable repeats."""
        if not self.terms:
            return False
        seen = set()
        for term in self.terms:
            support = term.support
            if len(support) != 1 or support[0] in seen:
                return False
            seen.add(support[0])
        return True

    def is_full(self) -> bool:
        """Every term contains every variable with a positive exponent."""
        return bool(self.terms) and all(e >= 1 for t in self.terms for e in t.exponents)

    def diagonal_exponents(self) -> List[Tuple[int, int]]:
        """(variable index, exponent) per term of a diagonal polynomial."""
        if not self.is_diagonal():
            raise ValueError("Polynomial is not diagonal")
        return [(t.support[0], t.exponents[t.support[0]]) for t in self.terms]

    def embed(self, n_vars: int) -> "SparsePoly":
        """The same polynomial in n_vars >= self.n_vars variables."""
        if n_vars < self.n_vars:
            raise ValueError(f"Cannot embed {self.n_vars} variables into {n_vars}")
        pad = (0,) * (n_vars - self.n_vars)
        terms = tuple(Term(t.coeff, t.exponents + pad) for t in self.terms)
        return SparsePoly(self.ctx, n_vars, terms, self.constant)

    def restrict(self, zero_vars: Iterable[int]) -> "SparsePoly":
        """Set the given variables to 0 and drop them from the variable list."""
        zeroed = set(zero_vars)
        keep = [i for i in range(self.n_vars) if i not in zeroed]
        terms = tuple(
            Term(t.coeff, tuple(t.exponents[i] for i in keep))
            for t in self.terms
            if not any(t.exponents[i] > 0 for i in zeroed)
        )
        return SparsePoly(self.ctx, len(keep), terms, self.constant)

    def evaluate(self, point: Sequence[FieldElement]) -> FieldElement:
        """Value of sum(a_j * X**D_j) - b at the point."""
        if len(point) != self.n_vars:
            raise ValueError(f"Expected {self.n_vars} coordinates, got {len(point)}")
        total = -self.constant
        for term in self.terms:
            value = term.coeff
            for x, e in zip(point, term.exponents):
                if e:
                    value = value * (x**e)
            total = total + value
        return total

"""*-equivalence of sparse polynomials.

f and g are *-equivalent when they share the coefficient vector and the
systems D~_f v = 0 and D~_g v = 0 (mod q - 1) have the same solutions. Such
polynomials have the same number of roots with all coordinates nonzero.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from ffcount.errors import EquivalenceError
from ffcount.poly import SparsePoly
from ffcount.zn.matrix import ZnMatrix, augmented_degree_matrix
from ffcount.zn.normal_forms import howell_form, nullspace_mod


@dataclass(frozen=True)
class EquivalenceResult:
    """Outcome of a *-equivalence check.

    ``method`` is ``howell`` when equal Howell forms settled the question and
    ``nullspace`` when mutual nullspace inclusion did. ``reason`` is set for
    non-equivalent pairs.
    """

    equivalent: bool
    method: str
    include_constant_column: bool
    reason: Optional[str] = None
    certificate: Dict[str, List[List[int]]] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.equivalent

    def to_dict(self) -> Dict[str, Any]:
        return {
            "equivalent": self.equivalent,
            "method": self.method,
            "reason": self.reason,
            "include_constant_column": self.include_constant_column,
            "certificate": self.certificate,
        }


def _contains_nullspace(source: ZnMatrix, target: ZnMatrix) -> bool:
    """Whether every solution of source's system also solves target's."""
    return all(target.annihilates(gen) for gen in nullspace_mod(source).generators)


def star_equivalent(
    f: SparsePoly,
    g: SparsePoly,
    include_constant_column: Optional[bool] = None,
) -> EquivalenceResult:
    """Decide whether f and g are *-equivalent.

    Args:
        f: First polynomial
        g: Second polynomial, over the same field
        include_constant_column: Append the constant's augmented column
            (1, 0, ..., 0) to both matrices; defaults to on when both
            constants are nonzero

    Raises:
        EquivalenceError: On different fields or different term counts
    """
    if f.ctx.key != g.ctx.key:
        raise EquivalenceError(
            f"Polynomials live over different fields ({f.ctx.description} vs {g.ctx.description})",
            reason="field_mismatch",
        )
    if f.s != g.s:
        raise EquivalenceError(
            f"Polynomials have {f.s} and {g.s} terms", reason="term_count_mismatch"
        )
    if include_constant_column is None:
        include_constant_column = f.constant.value != 0 and g.constant.value != 0

    if f.coefficients != g.coefficients:
        return EquivalenceResult(
            False, "coefficients", include_constant_column, "coefficient_vectors_differ"
        )
    if f.constant != g.constant:
        return EquivalenceResult(
            False, "coefficients", include_constant_column, "constant_terms_differ"
        )

    n_vars = max(f.n_vars, g.n_vars)
    a = augmented_degree_matrix(f.embed(n_vars), include_constant_column)
    b = augmented_degree_matrix(g.embed(n_vars), include_constant_column)
    howell_a, howell_b = howell_form(a), howell_form(b)
    certificate = {"f": howell_a.rows(), "g": howell_b.rows()}

    if howell_a == howell_b:
        return EquivalenceResult(True, "howell", include_constant_column, certificate=certificate)

    equivalent = _contains_nullspace(a, b) and _contains_nullspace(b, a)
    return EquivalenceResult(
        equivalent,
        "nullspace",
        include_constant_column,
        None if equivalent else "solution_sets_differ",
        certificate,
    )

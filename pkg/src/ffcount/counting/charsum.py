"""Root counts from character sums, evaluated in floating point.

Both paths round to the nearest integer only when the residual is below
``tolerance * sqrt(summands)``; otherwise they raise ``ResidualError``.
"""

import math
from typing import List, Optional, Tuple

import numpy as np

from ffcount.chars import gauss_sum_vector, psi_by_log, s_table
from ffcount.config import resolve_budget
from ffcount.counting.results import CountMethod, CountResult
from ffcount.errors import BudgetExceededError, PreconditionError, ResidualError
from ffcount.gf import FieldElement
from ffcount.poly import SparsePoly
from ffcount.pure import Admissibility, check_admissible, s_table_closed
from ffcount.zn.matrix import ZnMatrix, augmented_degree_matrix
from ffcount.zn.normal_forms import nullspace_mod

DEFAULT_RESIDUAL_TOLERANCE = 1e-3


def round_count(
    value: complex, summands: int, tolerance: float = DEFAULT_RESIDUAL_TOLERANCE
) -> int:
    """Nearest non-negative integer to value, or ResidualError."""
    nearest = round(value.real)
    residual = max(abs(value.real - nearest), abs(value.imag))
    threshold = tolerance * math.sqrt(max(summands, 1))
    if residual > threshold:
        raise ResidualError(
            f"Character sum {value} is {residual:.3g} away from an integer "
            f"(threshold {threshold:.3g})",
            value=value,
            residual=residual,
        )
    if nearest < 0:
        raise ResidualError(f"Character sum rounds to negative count {nearest}", value, residual)
    return int(nearest)


def _s_factor(g: SparsePoly, e: int) -> Tuple[np.ndarray, bool]:
    """S(generator**t, e) for all t; exact when e is admissible."""
    if e >= 3:
        adm = check_admissible(g.ctx, e)
        if isinstance(adm, Admissibility):
            return s_table_closed(adm).astype(complex), True
    return s_table(g.ctx, e), False


def count_star_charsum(
    g: SparsePoly, tolerance: float = DEFAULT_RESIDUAL_TOLERANCE
) -> CountResult:
    """N*(g) for a diagonal g as (1/q) * sum over c in F_q of conj(psi(c b)) * prod_j S(c a_j, d_j).

    The c = 0 summand is (q-1)^s. Exponents need not be equal or admissible;
    admissible ones use the integer closed form of S.

    Raises:
        PreconditionError: If g is not diagonal
        ResidualError: If the sum is not close to an integer
    """
    if not g.is_diagonal():
        raise PreconditionError("Polynomial is not diagonal", reason="not_diagonal")
    ctx = g.ctx
    n = ctx.order
    k = np.arange(n, dtype=np.int64)
    product = np.ones(n, dtype=complex)
    exact = True
    for term, (_, e) in zip(g.terms, g.diagonal_exponents()):
        table, closed = _s_factor(g, e)
        exact = exact and closed
        product *= table[(k + ctx.dlog(term.coeff)) % n]
    if g.constant.value != 0:
        product *= np.conj(psi_by_log(ctx)[(k + ctx.dlog(g.constant)) % n])

    total = (float(n) ** g.s + complex(product.sum())) / ctx.q
    count = round_count(total, n, tolerance) * n ** (g.n_vars - g.s)
    return CountResult(
        count, CountMethod.CHARSUM_LEMMA26, True, ctx.q, g.n_vars, approximate=not exact
    )


def _gaussvec_system(f: SparsePoly) -> Tuple[ZnMatrix, List[FieldElement]]:
    """Augmented degree matrix and coefficients, with -b as an extra constant term."""
    coefficients = list(f.coefficients)
    if f.constant.value != 0:
        coefficients.append(-f.constant)
    return augmented_degree_matrix(f, include_constant=True), coefficients


def _scan_solutions(matrix: ZnMatrix) -> np.ndarray:
    n, cols = matrix.n_mod, matrix.n_cols
    system = matrix.to_numpy()
    found = []
    total = n**cols
    for start in range(0, total, 1 << 16):
        index = np.arange(start, min(start + (1 << 16), total), dtype=np.int64)
        vectors = np.empty((index.size, cols), dtype=np.int64)
        for c in range(cols):
            index, vectors[:, c] = np.divmod(index, n)
        keep = np.all((vectors @ system.T) % n == 0, axis=1)
        found.append(vectors[keep])
    return np.concatenate(found) if found else np.zeros((0, cols), dtype=np.int64)


def count_star_gaussvec(
    f: SparsePoly,
    budget: Optional[int] = None,
    use_nullspace: bool = True,
    tolerance: float = DEFAULT_RESIDUAL_TOLERANCE,
) -> CountResult:
    """N*(f) for any sparse f from Gauss sums over the solutions of D~ v = 0.

    N*(f) = (q-1)^n / q + ((q-1)^(n+1-s) / q) * sum over v of
    prod_j omega(a_j)^(v_j) * G(omega^(-v_j)), with a nonzero constant
    counted as the term -b with exponent vector 0.

    Args:
        f: Polynomial with at least one term
        budget: Maximum number of vectors to visit
        use_nullspace: Enumerate nullspace generators; otherwise scan all
            of [0, q-2]^s
        tolerance: Residual tolerance

    Raises:
        BudgetExceededError: If the enumeration exceeds the budget
        ResidualError: If the sum is not close to an integer
    """
    ctx = f.ctx
    n = ctx.order
    matrix, coefficients = _gaussvec_system(f)
    s = len(coefficients)
    limit = resolve_budget("gaussvec", budget)

    if use_nullspace:
        generators = nullspace_mod(matrix)
        visited = generators.cardinality
        if visited > limit:
            raise BudgetExceededError(
                f"Nullspace has {visited} vectors, budget is {limit}", visited, limit
            )
        vectors = generators.solution_array()
    else:
        visited = n**s
        if visited > limit:
            raise BudgetExceededError(
                f"Scanning [0, q-2]^{s} visits {visited} vectors, budget is {limit}",
                visited,
                limit,
            )
        vectors = _scan_solutions(matrix)

    gauss = gauss_sum_vector(ctx)
    logs = np.array([ctx.dlog(a) for a in coefficients], dtype=np.int64)
    phases = np.exp(2j * np.pi * ((vectors * logs) % max(n, 1)) / max(n, 1))
    terms = np.prod(phases * gauss[vectors], axis=1)

    total = (float(n) ** f.n_vars + float(n) ** (f.n_vars + 1 - s) * complex(terms.sum())) / ctx.q
    count = round_count(total, max(len(vectors), 1), tolerance)
    return CountResult(
        count, CountMethod.GAUSSVEC_LEMMA27, True, ctx.q, f.n_vars, approximate=True
    )

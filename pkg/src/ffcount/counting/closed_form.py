"""Exact root counts of diagonal polynomials with an admissible exponent,
and of polynomials that are *-equivalent to one.

Every formula is evaluated in Python integers. The numerators are checked
for divisibility before dividing.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Optional

from ffcount.counting.results import CountMethod, CountResult
from ffcount.errors import PreconditionError
from ffcount.poly import SparsePoly
from ffcount.pure import Admissibility, c1, c2, check_admissible
from ffcount.zn.equivalence import star_equivalent


@dataclass(frozen=True)
class DiagonalProfile:
    """The data of a diagonal polynomial the closed forms depend on."""

    adm: Admissibility
    d: int
    s: int
    class_matches: bool  # dlog(a_j) agree mod d


def diagonal_profile(g: SparsePoly, force: bool = False) -> DiagonalProfile:
    """Check the closed-form hypotheses for g.

    Args:
        g: Candidate diagonal polynomial
        force: Accept coefficients in different eta_d classes

    Raises:
        PreconditionError: With reason ``not_diagonal``, ``unequal_exponents``,
            ``exponent_too_small``, ``not_admissible`` or
            ``unequal_character_classes``
    """
    if not g.is_diagonal():
        raise PreconditionError("Polynomial is not diagonal", reason="not_diagonal")
    exponents = {e for _, e in g.diagonal_exponents()}
    if len(exponents) != 1:
        raise PreconditionError(
            f"Diagonal exponents differ: {sorted(exponents)}", reason="unequal_exponents"
        )
    d = exponents.pop()
    if d < 3:
        raise PreconditionError(
            f"Exponent d = {d} is below 3", reason="exponent_too_small", detail=str(d)
        )
    adm = check_admissible(g.ctx, d)
    if not isinstance(adm, Admissibility):
        raise PreconditionError(
            f"d = {d} is not admissible over F_{g.ctx.q}",
            reason="not_admissible",
            detail=adm.reason,
        )
    classes = {g.ctx.dlog(a) % d for a in g.coefficients}
    if len(classes) != 1 and not force:
        raise PreconditionError(
            f"Coefficients lie in different eta_{d} classes {sorted(classes)}",
            reason="unequal_character_classes",
        )
    return DiagonalProfile(adm=adm, d=d, s=g.s, class_matches=len(classes) == 1)


def _exact_quotient(numerator: int, divisor: int) -> int:
    if numerator % divisor:
        raise PreconditionError(
            f"Closed-form numerator {numerator} is not divisible by {divisor}",
            reason="non_integral_count",
        )
    return numerator // divisor


def count_star_diagonal_b0(g: SparsePoly, force: bool = False) -> CountResult:
    """N*(g) for a diagonal g = sum(a_j x_j^d) with b = 0.

    Unused variables of g each contribute a factor q - 1.
    """
    profile = diagonal_profile(g, force)
    if g.constant.value != 0:
        raise PreconditionError("Constant term is nonzero", reason="constant_nonzero")
    q, d, s = g.ctx.q, profile.d, profile.s
    big, small = c1(profile.adm), c2(profile.adm)
    numerator = (q - 1) ** s + ((q - 1) // d) * big**s + ((q - 1) * (d - 1) // d) * small**s
    count = _exact_quotient(numerator, q) * (q - 1) ** (g.n_vars - s)
    return CountResult(count, CountMethod.CLOSED_FORM_B0, True, q, g.n_vars, branch="b_zero")


def count_star_diagonal_bnz(g: SparsePoly, force: bool = False) -> CountResult:
    """N*(g) for a diagonal g = sum(a_j x_j^d) - b with b != 0.

    The branch is chosen by whether a_1 / b is a d-th power, tested as
    d | dlog(a_1) - dlog(b).
    """
    profile = diagonal_profile(g, force)
    if g.constant.value == 0:
        raise PreconditionError("Constant term is zero", reason="constant_zero")
    ctx = g.ctx
    q, d, s = ctx.q, profile.d, profile.s
    big, small = c1(profile.adm), c2(profile.adm)
    if (ctx.dlog(g.coefficients[0]) - ctx.dlog(g.constant)) % d == 0:
        selected, branch = big, "class_match"
    else:
        selected, branch = small, "class_mismatch"
    numerator = d * ((q - 1) ** s - small**s) + selected * (big**s - small**s)
    count = _exact_quotient(numerator, d * q) * (q - 1) ** (g.n_vars - s)
    return CountResult(count, CountMethod.CLOSED_FORM_BNZ, True, q, g.n_vars, branch=branch)


def count_star_diagonal(g: SparsePoly, force: bool = False) -> CountResult:
    """Closed-form N*(g), picking the b = 0 or b != 0 formula."""
    if g.constant.value == 0:
        return count_star_diagonal_b0(g, force)
    return count_star_diagonal_bnz(g, force)


def zero_locus_count(
    f: SparsePoly, count_star: Optional[Callable[[SparsePoly], int]] = None
) -> int:
    """Number of roots of f in F_q^n with at least one zero coordinate.

    Each such root has a unique nonempty set Z of zero coordinates, and is a
    root with nonzero coordinates of f restricted to Z = 0. Restrictions
    without terms are constant equations.
    """
    if count_star is None:
        from ffcount.counting.dispatch import count_star_exact

        count_star = count_star_exact
    q = f.ctx.q
    total = 0
    for size in range(1, f.n_vars + 1):
        for zeros in combinations(range(f.n_vars), size):
            restricted = f.restrict(zeros)
            if not restricted.terms:
                if restricted.constant.value == 0:
                    total += (q - 1) ** restricted.n_vars
                continue
            total += count_star(restricted)
    return total


def count_full(
    f: SparsePoly,
    g: SparsePoly,
    force: bool = False,
    require_full: bool = False,
    include_constant_column: Optional[bool] = None,
) -> CountResult:
    """N(f) from a diagonal witness g that is *-equivalent to f.

    For full f the roots with a zero coordinate number q^n - (q-1)^n when
    b = 0 and none otherwise. When f has a term missing some variable, those
    roots are counted exactly by ``zero_locus_count`` unless ``require_full``.

    Args:
        f: Polynomial in n variables
        g: Diagonal witness with s <= n terms
        force: Passed to the closed form (skip the class check)
        require_full: Reject f that is not full
        include_constant_column: See ``star_equivalent``

    Raises:
        PreconditionError: ``witness_too_large``, ``not_full``,
            ``not_star_equivalent`` or any closed-form precondition
    """
    n = f.n_vars
    if g.n_vars > n:
        raise PreconditionError(
            f"Witness has {g.n_vars} variables but f only {n}", reason="witness_too_large"
        )
    if g.s > n:
        raise PreconditionError(
            f"Witness has {g.s} terms but f only {n} variables", reason="witness_too_large"
        )
    if require_full and not f.is_full():
        raise PreconditionError("Polynomial is not full", reason="not_full")

    equivalence = star_equivalent(f, g, include_constant_column)
    if not equivalence:
        raise PreconditionError(
            "Witness is not *-equivalent to f",
            reason="not_star_equivalent",
            detail=equivalence.reason,
        )

    star = count_star_diagonal(g.embed(n), force)
    q = f.ctx.q
    if f.is_full():
        zero_part = q**n - (q - 1) ** n if f.constant.value == 0 else 0
    else:
        zero_part = zero_locus_count(f)
    return CountResult(
        star.count + zero_part, CountMethod.FULL_THEOREM, False, q, n, branch=star.branch
    )

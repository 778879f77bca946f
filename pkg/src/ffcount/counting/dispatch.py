"""Pick a counting path for N*(f)."""

from enum import Enum
from typing import Optional

from ffcount.counting.charsum import (
    DEFAULT_RESIDUAL_TOLERANCE,
    count_star_charsum,
    count_star_gaussvec,
)
from ffcount.counting.closed_form import count_star_diagonal
from ffcount.counting.oracles import brute_force_star
from ffcount.counting.results import CountResult
from ffcount.errors import PreconditionError
from ffcount.poly import SparsePoly


class StarMethod(Enum):
    """Requested path for ``count_star``."""
    AUTO = "auto"
    CLOSED = "closed"
    CHARSUM = "charsum"
    GAUSSVEC = "gaussvec"
    BRUTE = "brute"


def count_star(
    f: SparsePoly,
    method: StarMethod = StarMethod.AUTO,
    numeric_fallback: bool = False,
    force: bool = False,
    budget: Optional[int] = None,
    workers: int = 1,
    tolerance: float = DEFAULT_RESIDUAL_TOLERANCE,
) -> CountResult:
    """N*(f) through the requested path.

    AUTO uses the closed form and re-raises its PreconditionError unless
    ``numeric_fallback`` is set, in which case diagonal f goes through the
    character-sum path and anything else through the Gauss-sum vector path.
    """
    if method is StarMethod.CLOSED:
        return count_star_diagonal(f, force)
    if method is StarMethod.CHARSUM:
        return count_star_charsum(f, tolerance)
    if method is StarMethod.GAUSSVEC:
        return count_star_gaussvec(f, budget, tolerance=tolerance)
    if method is StarMethod.BRUTE:
        return brute_force_star(f, budget, workers)

    try:
        return count_star_diagonal(f, force)
    except PreconditionError:
        if not numeric_fallback:
            raise
    if f.is_diagonal():
        return count_star_charsum(f, tolerance)
    return count_star_gaussvec(f, budget, tolerance=tolerance)


def count_star_exact(f: SparsePoly, budget: Optional[int] = None, workers: int = 1) -> int:
    """N*(f) from the closed form when it applies, by enumeration otherwise."""
    try:
        return count_star_diagonal(f).count
    except PreconditionError:
        return brute_force_star(f, budget, workers).count

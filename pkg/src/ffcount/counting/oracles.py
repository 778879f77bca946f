"""Exhaustive root counting.

Points are enumerated by an odometer over integer encodings (or discrete
logs, for the nonzero torus) in fixed-size ranges. Ranges are independent,
so they can be evaluated on a thread pool; the total is the same for any
partition. Diagonal polynomials skip enumeration: their value distribution
is the additive convolution of one histogram per term.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Iterator, List, Optional, Tuple

import numpy as np

from ffcount.config import resolve_budget
from ffcount.counting.results import CountMethod, CountResult
from ffcount.errors import BudgetExceededError
from ffcount.gf import FieldCtx
from ffcount.poly import SparsePoly

CHUNK_SIZE = 1 << 16


def _check_budget(points: int, budget: Optional[int]) -> None:
    limit = resolve_budget("brute_force", budget)
    if points > limit:
        raise BudgetExceededError(
            f"Exhaustive enumeration needs {points} points, budget is {limit}",
            required=points,
            budget=limit,
        )


def _field_convolve(ctx: FieldCtx, left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """Histogram of u + v for u ~ left, v ~ right, indexed by encoding."""
    result = np.zeros(ctx.q, dtype=np.int64)
    digits = ctx.digit_table
    for u in np.flatnonzero(left):
        targets = ((digits[u] + digits) % ctx.p) @ ctx.places
        result[targets] += left[u] * right
    return result


def _count_separable(f: SparsePoly, star: bool) -> int:
    ctx = f.ctx
    n = ctx.order
    k = np.arange(n, dtype=np.int64)
    histogram = np.zeros(ctx.q, dtype=np.int64)
    histogram[0] = 1
    for term, (_, e) in zip(f.terms, f.diagonal_exponents()):
        values = ctx.antilog_table[(ctx.dlog(term.coeff) + e * k) % n]
        term_histogram = np.bincount(values, minlength=ctx.q).astype(np.int64)
        if not star:
            term_histogram[0] += 1
        histogram = _field_convolve(ctx, histogram, term_histogram)
    free = f.n_vars - f.s
    return int(histogram[f.constant.value]) * (n if star else ctx.q) ** free


def _ranges(total: int) -> Iterator[Tuple[int, int]]:
    for start in range(0, total, CHUNK_SIZE):
        yield start, min(start + CHUNK_SIZE, total)


def _count_range(f: SparsePoly, star: bool, bounds: Tuple[int, int]) -> int:
    ctx = f.ctx
    n = ctx.order
    base = n if star else ctx.q
    index = np.arange(bounds[0], bounds[1], dtype=np.int64)

    logs: List[np.ndarray] = []
    zeros: List[np.ndarray] = []
    for _ in range(f.n_vars):
        index, coordinate = np.divmod(index, base)
        if star:
            logs.append(coordinate)
        else:
            logs.append(np.maximum(ctx.log_table[coordinate], 0))
            zeros.append(coordinate == 0)

    size = bounds[1] - bounds[0]
    acc = np.zeros((size, ctx.m), dtype=np.int64)
    for term in f.terms:
        exponent = np.full(size, ctx.dlog(term.coeff), dtype=np.int64)
        vanishes = np.zeros(size, dtype=bool)
        for var, e in enumerate(term.exponents):
            if e:
                exponent += e * logs[var]
                if not star:
                    vanishes |= zeros[var]
        values = ctx.antilog_table[exponent % n]
        if not star:
            values = np.where(vanishes, 0, values)
        acc += ctx.digit_table[values]

    target = ctx.digit_table[f.constant.value]
    return int(np.count_nonzero(np.all(acc % ctx.p == target, axis=1)))


def _count_points(f: SparsePoly, star: bool, budget: Optional[int], workers: int) -> int:
    ctx = f.ctx
    base = ctx.order if star else ctx.q
    points = base**f.n_vars
    _check_budget(points, budget)

    if f.is_diagonal():
        return _count_separable(f, star)
    if not f.terms:
        return points if f.constant.value == 0 else 0

    ranges = list(_ranges(points))
    if workers <= 1 or len(ranges) == 1:
        return sum(_count_range(f, star, bounds) for bounds in ranges)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(lambda bounds: _count_range(f, star, bounds), ranges))


def brute_force_total(
    f: SparsePoly, budget: Optional[int] = None, workers: int = 1
) -> CountResult:
    """N(f) by evaluating f at every point of F_q^n.

    Raises:
        BudgetExceededError: If q^n exceeds the budget
    """
    count = _count_points(f, star=False, budget=budget, workers=workers)
    return CountResult(count, CountMethod.BRUTE_FORCE, False, f.ctx.q, f.n_vars)


def brute_force_star(
    f: SparsePoly, budget: Optional[int] = None, workers: int = 1
) -> CountResult:
    """N*(f) by evaluating f at every point of (F_q*)^n.

    Raises:
        BudgetExceededError: If (q-1)^n exceeds the budget
    """
    count = _count_points(f, star=True, budget=budget, workers=workers)
    return CountResult(count, CountMethod.BRUTE_FORCE, True, f.ctx.q, f.n_vars)

"""Root counting: closed forms, character sums and exhaustive oracles."""

from ffcount.counting.charsum import count_star_charsum, count_star_gaussvec, round_count
from ffcount.counting.closed_form import (
    DiagonalProfile,
    count_full,
    count_star_diagonal,
    count_star_diagonal_b0,
    count_star_diagonal_bnz,
    diagonal_profile,
    zero_locus_count,
)
from ffcount.counting.dispatch import StarMethod, count_star, count_star_exact
from ffcount.counting.oracles import brute_force_star, brute_force_total
from ffcount.counting.results import CountMethod, CountResult

__all__ = [
    "CountMethod",
    "CountResult",
    "DiagonalProfile",
    "StarMethod",
    "brute_force_star",
    "brute_force_total",
    "count_full",
    "count_star",
    "count_star_charsum",
    "count_star_diagonal",
    "count_star_diagonal_b0",
    "count_star_diagonal_bnz",
    "count_star_exact",
    "count_star_gaussvec",
    "diagonal_profile",
    "round_count",
    "zero_locus_count",
]

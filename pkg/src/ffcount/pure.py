"""Admissible exponents and the closed forms they unlock.

An exponent d >= 3 is (p, r)-admissible when r is the smallest positive
integer with 2r | m and d | p**r + 1. For such d every Gauss sum of a
character of order d is +-sqrt(q), so S(u, d) takes only the two integer
values C1(d) and C2(d).
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Union

import numpy as np
from sympy import divisors

from ffcount.errors import AdmissibilityError, NotInvertibleError, PreconditionError
from ffcount.gf import FieldCtx, FieldElement


class ParityCase(Enum):
    """Which branch of the pure Gauss sum sign applies."""

    EVEN_D_ODD_QUOTIENT = "even_d_odd_quotient"  # 2 | d and (p^r + 1)/d odd
    OTHER = "other"


@dataclass(frozen=True)
class Admissibility:
    """Certificate that d is (p, r)-admissible over ctx."""

    ctx: FieldCtx = field(repr=False, compare=False)
    d: int
    r: int
    h: int
    parity_case: ParityCase
    sign: int

    @property
    def admissible(self) -> bool:
        return True

    @property
    def sqrt_q(self) -> int:
        return self.ctx.p ** (self.ctx.m // 2)

    @property
    def quotient(self) -> int:
        """(p^r + 1) / d."""
        return (self.ctx.p**self.r + 1) // self.d

    def to_dict(self) -> Dict[str, Any]:
        return {
            "d": self.d,
            "admissible": True,
            "r": self.r,
            "h": self.h,
            "case": self.parity_case.value,
            "C1": c1(self),
            "C2": c2(self),
        }


@dataclass(frozen=True)
class NotAdmissible:
    """d failed the admissibility test; ``reason`` says which condition broke."""

    d: int
    q: int
    reason: str

    @property
    def admissible(self) -> bool:
        return False

    def to_dict(self) -> Dict[str, Any]:
        return {
            "d": self.d,
            "admissible": False,
            "reason": self.reason,
            "r": None,
            "h": None,
            "case": None,
            "C1": None,
            "C2": None,
        }


def check_admissible(ctx: FieldCtx, d: int) -> Union[Admissibility, NotAdmissible]:
    """Decide (p, r)-admissibility of d over ctx.

    Args:
        ctx: Field context
        d: Exponent, at least 3

    Returns:
        Admissibility with the smallest r, or NotAdmissible with one of the
        reasons ``d_does_not_divide_q_minus_1``, ``odd_extension_degree``,
        ``no_admissible_r``

    Raises:
        AdmissibilityError: If d < 3
    """
    if d < 3:
        raise AdmissibilityError(f"Admissibility is defined for d >= 3, got {d}", d)
    p, m = ctx.p, ctx.m
    if ctx.order % d:
        return NotAdmissible(d=d, q=ctx.q, reason="d_does_not_divide_q_minus_1")
    if m % 2:
        return NotAdmissible(d=d, q=ctx.q, reason="odd_extension_degree")

    for r in range(1, m // 2 + 1):
        if m % (2 * r) == 0 and (p**r + 1) % d == 0:
            break
    else:
        return NotAdmissible(d=d, q=ctx.q, reason="no_admissible_r")

    h = m // (2 * r)
    quotient = (p**r + 1) // d
    if d % 2 == 0 and quotient % 2 == 1:
        parity_case = ParityCase.EVEN_D_ODD_QUOTIENT
        sign = -1 if h % 2 else 1
    else:
        parity_case = ParityCase.OTHER
        sign = 1
    # For odd p, 2(p^r + 1) | q - 1; eta_d(-1) = 1 depends on it
    assert p == 2 or ctx.order % (2 * d) == 0
    return Admissibility(ctx=ctx, d=d, r=r, h=h, parity_case=parity_case, sign=sign)


def admissible_exponents(ctx: FieldCtx) -> List[Admissibility]:
    """Every admissible d >= 3 dividing q - 1, in increasing order."""
    found = []
    for d in divisors(ctx.order):
        if d < 3:
            continue
        result = check_admissible(ctx, d)
        if isinstance(result, Admissibility):
            found.append(result)
    return found


def delta(adm: Admissibility, j: int) -> int:
    """Sign (-1)^{jh} in the even-d odd-quotient case, 1 otherwise."""
    if adm.parity_case is ParityCase.EVEN_D_ODD_QUOTIENT:
        return -1 if (j * adm.h) % 2 else 1
    return 1


def pure_gauss_sum(adm: Admissibility, j: int) -> int:
    """Exact value of G(eta_d**j) for an admissible d.

    Raises:
        PreconditionError: If j is a multiple of d (trivial character)
    """
    if j % adm.d == 0:
        raise PreconditionError(
            f"j = {j} is a multiple of d = {adm.d}; the character is trivial",
            reason="trivial_character",
        )
    sign = -1 if adm.h % 2 == 0 else 1  # (-1)^{h+1}
    return delta(adm, j) * sign * adm.sqrt_q


def c1(adm: Admissibility) -> int:
    sign = -1 if adm.h % 2 else 1
    return -1 - sign * (adm.d - 1) * adm.sqrt_q


def c2(adm: Admissibility) -> int:
    sign = -1 if adm.h % 2 else 1
    return -1 + sign * adm.sqrt_q


def _c1_log_test(adm: Admissibility, logs: Any) -> Any:
    # eta_d(u) = sign, decided on dlog(u): sign 1 <=> d | k, sign -1 <=> k = d/2 mod d
    if adm.ctx.p != 2 and adm.sign == -1:
        return logs % adm.d == adm.d // 2
    return logs % adm.d == 0


def s_closed_form(adm: Admissibility, u: FieldElement) -> int:
    """S(u, d) = sum over x in F_q* of psi(u * x**d), as C1(d) or C2(d).

    Raises:
        NotInvertibleError: If u = 0
    """
    if u.value == 0:
        raise NotInvertibleError("S(u, d) closed form requires u != 0")
    if _c1_log_test(adm, adm.ctx.dlog(u)):
        return c1(adm)
    return c2(adm)


def s_table_closed(adm: Admissibility) -> np.ndarray:
    """s_closed_form(generator**t) for every t in [0, q-2], as int64."""
    logs = np.arange(adm.ctx.order, dtype=np.int64)
    return np.where(_c1_log_test(adm, logs), c1(adm), c2(adm)).astype(np.int64)

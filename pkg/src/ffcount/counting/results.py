"""Result types shared by every counting path."""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional


class CountMethod(Enum):
    """How a count was obtained."""
    CLOSED_FORM_B0 = "CLOSED_FORM_B0"  # diagonal, b = 0
    CLOSED_FORM_BNZ = "CLOSED_FORM_BNZ"  # diagonal, b != 0
    FULL_THEOREM = "FULL_THEOREM"  # full f through a diagonal witness
    BRUTE_FORCE = "BRUTE_FORCE"
    CHARSUM_LEMMA26 = "CHARSUM_LEMMA26"  # product of S(c*a_j, d_j) over c
    GAUSSVEC_LEMMA27 = "GAUSSVEC_LEMMA27"  # Gauss sums over nullspace vectors


@dataclass
class CountResult:
    """A root count.

    ``star`` marks N* (all coordinates nonzero) as opposed to N. ``branch``
    names the case of the closed form that fired. ``approximate`` is set when
    a numeric path used floating-point character sums.
    """
    count: int
    method: CountMethod
    star: bool
    q: int
    n: int
    branch: Optional[str] = None
    approximate: bool = False

    def __post_init__(self) -> None:
        bound = (self.q - 1) ** self.n if self.star else self.q**self.n
        if not 0 <= self.count <= bound:
            raise ValueError(f"Count {self.count} is outside [0, {bound}]")

    def to_dict(self) -> Dict[str, Any]:
        """Convert to the JSON result schema."""
        return {
            "q": self.q,
            "n": self.n,
            "star": self.star,
            "count": self.count,
            "method": self.method.value,
            "branch": self.branch,
        }

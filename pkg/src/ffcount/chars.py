"""Additive and multiplicative characters of F_q and their sums.

Character values are double-precision complex numbers. Every decision that
affects a count (power classes, branch selection) is made on integer discrete
logarithms instead; floats only feed the numeric oracles.
"""

import math
import warnings
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from ffcount.errors import DegenerateCharacterWarning, FieldError, NotInvertibleError
from ffcount.gf import FieldCtx, FieldElement


def root_of_unity(e: int, d: int) -> complex:
    """exp(2*pi*i*e/d), exact at the real and imaginary axes.

    The exponent is reduced to the symmetric range so that exponent negation
    gives the exact complex conjugate.
    """
    e %= d
    if e == 0:
        return complex(1.0, 0.0)
    if 2 * e == d:
        return complex(-1.0, 0.0)
    if 4 * e == d:
        return complex(0.0, 1.0)
    if 4 * e == 3 * d:
        return complex(0.0, -1.0)
    if 2 * e > d:
        e -= d
    theta = 2.0 * math.pi * e / d
    return complex(math.cos(theta), math.sin(theta))


def _roots(exponents: np.ndarray, d: int) -> np.ndarray:
    return np.exp(2j * np.pi * (exponents % d) / d)


@dataclass(frozen=True)
class MultChar:
    """The multiplicative character eta_d**power; order 0 denotes eta_0."""

    ctx: FieldCtx = field(repr=False, compare=False)
    order: int
    power: int = 1

    def __post_init__(self) -> None:
        if self.order < 0:
            raise FieldError(f"Character order must be non-negative, got {self.order}")
        if self.order and self.ctx.order % self.order:
            raise FieldError(f"Order {self.order} does not divide q - 1 = {self.ctx.order}")

    @property
    def is_trivial(self) -> bool:
        return self.order <= 1 or self.power % self.order == 0

    def conj(self) -> "MultChar":
        if self.order == 0:
            return self
        return MultChar(self.ctx, self.order, (-self.power) % self.order)

    def values_by_log(self) -> np.ndarray:
        """Character value at generator**k for k in [0, q-2]."""
        k = np.arange(self.ctx.order, dtype=np.int64)
        if self.is_trivial:
            return np.ones(self.ctx.order, dtype=complex)
        return _roots(self.power * k, self.order)


def psi(ctx: FieldCtx, x: FieldElement) -> complex:
    """Canonical additive character exp(2*pi*i*Tr(x)/p)."""
    return root_of_unity(ctx.trace(x), ctx.p)


def eta(chr: MultChar, x: FieldElement) -> complex:
    """Multiplicative character value; eta(0) is 0, or 1 for the trivial character."""
    ctx = chr.ctx
    if x.value == 0:
        ctx._check(x)
        return complex(1.0, 0.0) if chr.is_trivial else complex(0.0, 0.0)
    if chr.is_trivial:
        return complex(1.0, 0.0)
    return root_of_unity(chr.power * ctx.dlog(x), chr.order)


def is_dth_power(ctx: FieldCtx, x: FieldElement, d: int) -> bool:
    """Whether x is a nonzero d-th power, decided on the integer dlog."""
    if d <= 0 or ctx.order % d:
        raise FieldError(f"d = {d} must divide q - 1 = {ctx.order}")
    if x.value == 0:
        raise NotInvertibleError("is_dth_power is undefined at 0")
    return ctx.dlog(x) % d == 0


@lru_cache(maxsize=32)
def psi_by_log(ctx: FieldCtx) -> np.ndarray:
    """psi(generator**k) for k in [0, q-2]."""
    traces = ctx.trace_table[ctx.antilog_table]
    values = _roots(traces, ctx.p)
    values.flags.writeable = False
    return values


def gauss_sum_numeric(chr: MultChar) -> complex:
    """G(eta) = sum over c in F_q* of psi(c) * eta(c), by direct summation.

    For the trivial character the sum is -1; it is returned together with a
    DegenerateCharacterWarning.
    """
    if chr.is_trivial:
        warnings.warn(
            "Gauss sum of the trivial character is the degenerate value -1",
            DegenerateCharacterWarning,
            stacklevel=2,
        )
    return complex(np.sum(psi_by_log(chr.ctx) * chr.values_by_log()))


@lru_cache(maxsize=32)
def gauss_sum_vector(ctx: FieldCtx) -> np.ndarray:
    """G(omega**(-v)) for every v in [0, q-2], where omega(generator) = exp(2*pi*i/(q-1)).

    This is the discrete Fourier transform of psi along the logarithm.
    """
    values = np.fft.fft(psi_by_log(ctx))
    values.flags.writeable = False
    return values


def s_numeric(ctx: FieldCtx, u: FieldElement, d: int) -> complex:
    """S(u, d) = sum over x in F_q* of psi(u * x**d), by direct summation."""
    if u.value == 0:
        return complex(ctx.order)
    k = np.arange(ctx.order, dtype=np.int64)
    return complex(np.sum(psi_by_log(ctx)[(ctx.dlog(u) + d * k) % ctx.order]))


def s_table(ctx: FieldCtx, d: int) -> np.ndarray:
    """S(generator**t, d) for every t in [0, q-2].

    x**d runs over the multiples of g = gcd(d, q-1) in the exponent, each hit g
    times, so S only depends on t mod g.
    """
    n = ctx.order
    g = math.gcd(d, n)
    coset_sums = psi_by_log(ctx).reshape(n // g, g).sum(axis=0)
    t = np.arange(n, dtype=np.int64)
    return g * coset_sums[t % g]


def orthogonality_sum(ctx: FieldCtx, x: FieldElement) -> complex:
    """sum over c in F_q of psi(c * x); q when x = 0 and 0 otherwise."""
    ctx._check(x)
    if x.value == 0:
        return complex(ctx.q)
    return complex(1.0 + np.sum(psi_by_log(ctx)[(ctx.dlog(x) + np.arange(ctx.order)) % ctx.order]))

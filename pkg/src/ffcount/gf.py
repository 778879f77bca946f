"""Finite fields F_{p^m} with log/antilog tables.

Elements are stored by their canonical integer encoding: the polynomial-basis
coefficient vector (c_0, ..., c_{m-1}) maps to sum(c_i * p**i). Encoding 0 is
the additive identity and encoding 1 the multiplicative identity.

Fields are built deterministically: the default modulus is the monic
irreducible polynomial of degree m with the smallest encoding of its lower
coefficients, and the generator is the primitive element with the smallest
encoding. Construction is limited to q <= 2**20 so full tables stay cheap.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np
import sympy
from sympy.ntheory import factorint, isprime

from ffcount.errors import FieldError, NotInvertibleError

MAX_ORDER = 1 << 20

_X = sympy.Symbol("x")


def _to_digits(value: int, p: int, m: int) -> List[int]:
    digits = []
    for _ in range(m):
        value, digit = divmod(value, p)
        digits.append(digit)
    return digits


def _from_digits(digits: Sequence[int], p: int) -> int:
    value = 0
    for digit in reversed(digits):
        value = value * p + int(digit) % p
    return value


def _mulmod(a: Sequence[int], b: Sequence[int], modulus: Sequence[int], p: int) -> List[int]:
    """Multiply two coefficient vectors modulo a monic modulus over Z_p."""
    m = len(modulus) - 1
    product = [0] * (2 * m - 1) if m > 0 else [0]
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                product[i + j] += x * y
    for k in range(len(product) - 1, m - 1, -1):
        c = product[k] % p
        if c:
            for i in range(m):
                product[k - m + i] -= c * modulus[i]
        product[k] = 0
    return [c % p for c in product[:m]]


def _powmod(a: Sequence[int], e: int, modulus: Sequence[int], p: int) -> List[int]:
    m = len(modulus) - 1
    result = [1] + [0] * (m - 1)
    base = list(a)
    while e:
        if e & 1:
            result = _mulmod(result, base, modulus, p)
        base = _mulmod(base, base, modulus, p)
        e >>= 1
    return result


def is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Irreducibility of sum(coeffs[i] * x**i) over Z_p."""
    if len(coeffs) <= 2:
        return len(coeffs) == 2 and coeffs[1] % p != 0
    poly = sympy.Poly([int(c) % p for c in reversed(coeffs)], _X, modulus=p)
    return bool(poly.is_irreducible)


def smallest_irreducible(p: int, m: int) -> Tuple[int, ...]:
    """The monic irreducible of degree m whose lower coefficients encode smallest."""
    for encoding in range(p**m):
        candidate = _to_digits(encoding, p, m) + [1]
        if is_irreducible(candidate, p):
            return tuple(candidate)
    raise FieldError(f"No irreducible polynomial of degree {m} over Z_{p}")  # pragma: no cover


class FieldElement:
    """An element of F_q bound to its field context."""

    __slots__ = ("ctx", "value")

    def __init__(self, ctx: "FieldCtx", value: int) -> None:
        self.ctx = ctx
        self.value = value

    def _coerce(self, other: Union["FieldElement", int]) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.ctx.key != self.ctx.key:
                raise FieldError("Operands belong to different fields")
            return other
        if isinstance(other, int):
            return self.ctx.from_int(other)
        raise TypeError(f"Cannot combine a field element with {type(other).__name__}")

    def __add__(self, other: Union["FieldElement", int]) -> "FieldElement":
        return self.ctx.add(self, self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other: Union["FieldElement", int]) -> "FieldElement":
        return self.ctx.sub(self, self._coerce(other))

    def __rsub__(self, other: int) -> "FieldElement":
        return self.ctx.sub(self._coerce(other), self)

    def __mul__(self, other: Union["FieldElement", int]) -> "FieldElement":
        return self.ctx.mul(self, self._coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other: Union["FieldElement", int]) -> "FieldElement":
        return self.ctx.div(self, self._coerce(other))

    def __pow__(self, exponent: int) -> "FieldElement":
        return self.ctx.pow(self, exponent)

    def __neg__(self) -> "FieldElement":
        return self.ctx.neg(self)

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            return self.value == other.value and self.ctx.key == other.ctx.key
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ctx.key, self.value))

    def __str__(self) -> str:
        if self.value == 0:
            return "0"
        return f"g^{self.ctx.dlog(self)}"

    def __repr__(self) -> str:
        return f"FieldElement({self}, q={self.ctx.q})"


@dataclass(frozen=True, eq=False)
class FieldCtx:
    """A fully constructed finite field F_{p^m}.

    ``log_table[0]`` holds the sentinel -1; every other entry is in [0, q-2].
    """

    p: int
    m: int
    q: int
    modulus: Tuple[int, ...]
    generator_value: int
    log_table: np.ndarray = field(repr=False)
    antilog_table: np.ndarray = field(repr=False)

    @property
    def key(self) -> Tuple[int, int, Tuple[int, ...]]:
        return (self.p, self.m, self.modulus)

    @property
    def order(self) -> int:
        """Order q - 1 of the multiplicative group."""
        return self.q - 1

    @property
    def generator(self) -> FieldElement:
        return FieldElement(self, self.generator_value)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def description(self) -> str:
        """Serialized form ``p,m,c0 c1 ... cm``."""
        return f"{self.p},{self.m},{' '.join(str(c) for c in self.modulus)}"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldCtx):
            return NotImplemented
        return (
            self.key == other.key
            and self.generator_value == other.generator_value
            and np.array_equal(self.log_table, other.log_table)
            and np.array_equal(self.antilog_table, other.antilog_table)
        )

    def __hash__(self) -> int:
        return hash(self.key)

    # -- element construction -------------------------------------------------

    def element(self, value: int) -> FieldElement:
        """Element with the given canonical encoding."""
        if not 0 <= value < self.q:
            raise FieldError(f"Encoding {value} is outside [0, {self.q - 1}]")
        return FieldElement(self, int(value))

    def from_coeffs(self, coeffs: Sequence[int]) -> FieldElement:
        """Element from its polynomial-basis coefficients (c_0, ..., c_{m-1})."""
        if len(coeffs) > self.m:
            raise FieldError(f"Expected at most {self.m} coefficients, got {len(coeffs)}")
        return FieldElement(self, _from_digits(coeffs, self.p))

    def coeffs(self, a: FieldElement) -> List[int]:
        return _to_digits(self._check(a).value, self.p, self.m)

    def from_int(self, n: int) -> FieldElement:
        """Image of an integer in the prime subfield."""
        return FieldElement(self, n % self.p)

    def gen_pow(self, k: int) -> FieldElement:
        """generator**k for any integer k."""
        return FieldElement(self, int(self.antilog_table[k % self.order]))

    def elements(self) -> Iterator[FieldElement]:
        for value in range(self.q):
            yield FieldElement(self, value)

    def nonzero(self) -> Iterator[FieldElement]:
        for value in range(1, self.q):
            yield FieldElement(self, value)

    def _check(self, a: FieldElement) -> FieldElement:
        if not isinstance(a, FieldElement) or a.ctx.key != self.key:
            raise FieldError(f"{a!r} is not an element of F_{self.q}")
        return a

    # -- arithmetic -----------------------------------------------------------

    def _add_values(self, x: int, y: int) -> int:
        if self.p == 2:
            return x ^ y
        p = self.p
        result, place = 0, 1
        while x or y:
            x, dx = divmod(x, p)
            y, dy = divmod(y, p)
            result += ((dx + dy) % p) * place
            place *= p
        return result

    def _neg_value(self, x: int) -> int:
        if self.p == 2:
            return x
        p = self.p
        result, place = 0, 1
        while x:
            x, dx = divmod(x, p)
            result += ((p - dx) % p) * place
            place *= p
        return result

    def add(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return FieldElement(self, self._add_values(self._check(a).value, self._check(b).value))

    def neg(self, a: FieldElement) -> FieldElement:
        return FieldElement(self, self._neg_value(self._check(a).value))

    def sub(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return FieldElement(
            self, self._add_values(self._check(a).value, self._neg_value(self._check(b).value))
        )

    def mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        x, y = self._check(a).value, self._check(b).value
        if x == 0 or y == 0:
            return self.zero
        k = (int(self.log_table[x]) + int(self.log_table[y])) % self.order
        return FieldElement(self, int(self.antilog_table[k]))

    def inv(self, a: FieldElement) -> FieldElement:
        if self._check(a).value == 0:
            raise NotInvertibleError("inv(0) is undefined")
        k = (-int(self.log_table[a.value])) % self.order
        return FieldElement(self, int(self.antilog_table[k]))

    def div(self, a: FieldElement, b: FieldElement) -> FieldElement:
        if self._check(b).value == 0:
            raise NotInvertibleError("Division by zero")
        return self.mul(a, self.inv(b))

    def pow(self, a: FieldElement, e: int) -> FieldElement:
        x = self._check(a).value
        if x == 0:
            if e == 0:
                return self.one
            if e < 0:
                raise NotInvertibleError("0 raised to a negative power")
            return self.zero
        k = (int(self.log_table[x]) * e) % self.order
        return FieldElement(self, int(self.antilog_table[k]))

    def trace(self, a: FieldElement) -> int:
        """Absolute trace sum(a**(p**i)), returned as a residue mod p."""
        x = self._check(a).value
        if x == 0:
            return 0
        log_a = int(self.log_table[x])
        total = 0
        for i in range(self.m):
            conjugate = int(self.antilog_table[(log_a * self.p**i) % self.order])
            total = self._add_values(total, conjugate)
        if total >= self.p:
            raise FieldError(f"Trace of {a!r} left the prime subfield")  # pragma: no cover
        return total

    def dlog(self, a: FieldElement) -> int:
        """Discrete logarithm to base generator, in [0, q-2]."""
        x = self._check(a).value
        if x == 0:
            raise NotInvertibleError("dlog(0) is undefined")
        return int(self.log_table[x])

    # -- vectorised tables ----------------------------------------------------

    @cached_property
    def digit_table(self) -> np.ndarray:
        """(q, m) array of polynomial-basis coefficients of every encoding."""
        values = np.arange(self.q, dtype=np.int64)
        places = self.p ** np.arange(self.m, dtype=np.int64)
        table = (values[:, None] // places[None, :]) % self.p
        table.flags.writeable = False
        return table

    @cached_property
    def places(self) -> np.ndarray:
        return self.p ** np.arange(self.m, dtype=np.int64)

    @cached_property
    def trace_table(self) -> np.ndarray:
        """Trace of every encoding, by linearity over the polynomial basis."""
        basis = np.array(
            [self.trace(FieldElement(self, self.p**i)) for i in range(self.m)], dtype=np.int64
        )
        table = (self.digit_table @ basis) % self.p
        table.flags.writeable = False
        return table


def _find_generator(p: int, m: int, modulus: Sequence[int]) -> int:
    q = p**m
    cofactors = [(q - 1) // ell for ell in factorint(q - 1)]
    one = [1] + [0] * (m - 1)
    for value in range(1, q):
        digits = _to_digits(value, p, m)
        if all(_powmod(digits, e, modulus, p) != one for e in cofactors):
            return value
    raise FieldError("No primitive element found; is the modulus irreducible?")  # pragma: no cover


def _build_tables(
    p: int, m: int, modulus: Sequence[int], generator: int
) -> Tuple[np.ndarray, np.ndarray]:
    q = p**m
    # Multiplication by the generator is Z_p-linear; column i is generator * x^i
    g = _to_digits(generator, p, m)
    mult = np.array(
        [_mulmod(g, [1 if j == i else 0 for j in range(m)], modulus, p) for i in range(m)],
        dtype=np.int64,
    ).T
    places = p ** np.arange(m, dtype=np.int64)

    antilog = np.empty(q - 1, dtype=np.int64)
    current = np.zeros(m, dtype=np.int64)
    current[0] = 1
    for k in range(q - 1):
        antilog[k] = int(current @ places)
        current = (mult @ current) % p

    log = np.full(q, -1, dtype=np.int64)
    log[antilog] = np.arange(q - 1, dtype=np.int64)
    if q > 1 and np.count_nonzero(log[1:] < 0):
        raise FieldError("Generator does not have order q - 1")  # pragma: no cover

    antilog.flags.writeable = False
    log.flags.writeable = False
    return log, antilog


def build_field(p: int, m: int, modulus: Optional[Sequence[int]] = None) -> FieldCtx:
    """Construct F_{p^m}.

    Args:
        p: Characteristic, must be prime
        m: Extension degree, at least 1
        modulus: Optional monic coefficient vector (c_0, ..., c_m); defaults to
            the smallest-encoding monic irreducible of degree m

    Returns:
        The field context with generator and log/antilog tables

    Raises:
        FieldError: On composite p, m < 1, q above the desk-scale bound, or a
            malformed or reducible modulus
    """
    if not isinstance(p, int) or p < 2 or not isprime(p):
        raise FieldError(f"Characteristic must be prime, got {p}")
    if not isinstance(m, int) or m < 1:
        raise FieldError(f"Extension degree must be at least 1, got {m}")
    q = p**m
    if q > MAX_ORDER:
        raise FieldError(f"q = {p}^{m} = {q} exceeds the supported maximum {MAX_ORDER}")

    if modulus is None:
        coeffs = smallest_irreducible(p, m)
    else:
        coeffs = tuple(int(c) % p for c in modulus)
        if len(coeffs) != m + 1:
            raise FieldError(f"Modulus must have {m + 1} coefficients, got {len(coeffs)}")
        if coeffs[-1] != 1:
            raise FieldError("Modulus must be monic")
        if not is_irreducible(coeffs, p):
            raise FieldError(f"Modulus {list(coeffs)} is reducible over Z_{p}")

    generator = _find_generator(p, m, coeffs)
    log, antilog = _build_tables(p, m, coeffs, generator)
    return FieldCtx(
        p=p,
        m=m,
        q=q,
        modulus=coeffs,
        generator_value=generator,
        log_table=log,
        antilog_table=antilog,
    )


def field_from_description(text: str) -> FieldCtx:
    """Build a field from ``p,m[,c0 c1 ... cm]``."""
    parts = [part.strip() for part in text.split(",")]
    try:
        if len(parts) == 2:
            return build_field(int(parts[0]), int(parts[1]))
        if len(parts) == 3:
            modulus = [int(c) for c in parts[2].split()]
            return build_field(int(parts[0]), int(parts[1]), modulus)
    except ValueError:
        pass
    raise FieldError(f"Invalid field description {text!r}; expected 'p,m[,c0 c1 ... cm]'")

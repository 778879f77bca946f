"""Howell and Smith normal forms, and homogeneous solutions over Z/nZ."""

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ffcount.zn.matrix import ZnMatrix

IntMatrix = List[List[int]]


def _gcdex(a: int, b: int) -> Tuple[int, int, int]:
    """(g, s, t) with s*a + t*b = g = gcd(a, b) over the integers."""
    r0, r1 = a, b
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    while r1 != 0:
        quotient = r0 // r1
        r0, r1 = r1, r0 - quotient * r1
        s0, s1 = s1, s0 - quotient * s1
        t0, t1 = t1, t0 - quotient * t1
    if r0 < 0:
        r0, s0, t0 = -r0, -s0, -t0
    return r0, s0, t0


def _normalizing_unit(a: int, n: int) -> int:
    """A unit u of Z_n with u * a = gcd(a, n) (mod n)."""
    g = math.gcd(a, n)
    n_prime = n // g
    if n_prime == 1:
        return 1
    u = pow((a // g) % n_prime, -1, n_prime)
    while math.gcd(u, n) != 1:
        u += n_prime
    return u


def howell_form(matrix: ZnMatrix) -> ZnMatrix:
    """Canonical Howell form of the row span of ``matrix`` over Z_{n_mod}.

    Pivots divide n_mod, entries above a pivot are reduced below it, and each
    zero-divisor pivot row contributes its annihilated multiple so the rows
    below generate every span vector that starts at a later column. Zero rows
    are dropped.
    """
    n = matrix.n_mod
    rows = matrix.rows()
    n_cols = matrix.n_cols

    def combine(i: int, j: int, s: int, t: int, u: int, v: int) -> None:
        ri, rj = rows[i], rows[j]
        rows[i] = [(s * x + t * y) % n for x, y in zip(ri, rj)]
        rows[j] = [(u * x + v * y) % n for x, y in zip(ri, rj)]

    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]

        for i in range(r + 1, len(rows)):
            if rows[i][c]:
                a, b = rows[r][c], rows[i][c]
                g, s, t = _gcdex(a, b)
                combine(r, i, s, t, -(b // g), a // g)

        unit = _normalizing_unit(rows[r][c], n)
        rows[r] = [(unit * x) % n for x in rows[r]]
        b = rows[r][c]

        for i in range(r):
            factor = rows[i][c] // b
            if factor:
                rows[i] = [(x - factor * y) % n for x, y in zip(rows[i], rows[r])]

        if b != 1:
            extra = [((n // b) * x) % n for x in rows[r]]
            if any(extra):
                rows.append(extra)
        r += 1

    nonzero = [row for row in rows if any(row)]
    return ZnMatrix.from_rows(nonzero, n, n_cols)


def smith_decomposition(
    entries: Sequence[Sequence[int]], n_cols: Optional[int] = None
) -> Tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Diagonalize an integer matrix: returns (U, S, V) with U * M * V = S.

    U and V are unimodular over Z. S is diagonal, without the divisibility
    chain of the Smith normal form; the diagonal is all that a homogeneous
    system needs. Pivots are chosen by minimal absolute value.
    """
    a = [list(int(x) for x in row) for row in entries]
    n_rows = len(a)
    if n_cols is None:
        n_cols = len(a[0]) if a else 0
    u = [[int(i == j) for j in range(n_rows)] for i in range(n_rows)]
    v = [[int(i == j) for j in range(n_cols)] for i in range(n_cols)]

    for t in range(min(n_rows, n_cols)):
        while True:
            candidates = [
                (abs(a[i][j]), i, j)
                for i in range(t, n_rows)
                for j in range(t, n_cols)
                if a[i][j]
            ]
            if not candidates:
                return u, a, v
            _, pi, pj = min(candidates)
            a[t], a[pi] = a[pi], a[t]
            u[t], u[pi] = u[pi], u[t]
            for row in a:
                row[t], row[pj] = row[pj], row[t]
            for row in v:
                row[t], row[pj] = row[pj], row[t]

            pivot = a[t][t]
            clean = True
            for i in range(t + 1, n_rows):
                factor = a[i][t] // pivot
                if factor:
                    a[i] = [x - factor * y for x, y in zip(a[i], a[t])]
                    u[i] = [x - factor * y for x, y in zip(u[i], u[t])]
                if a[i][t]:
                    clean = False
            for j in range(t + 1, n_cols):
                factor = a[t][j] // pivot
                if factor:
                    for row in a:
                        row[j] -= factor * row[t]
                    for row in v:
                        row[j] -= factor * row[t]
                if a[t][j]:
                    clean = False
            if clean:
                break
    return u, a, v


@dataclass(frozen=True)
class NullspaceGens:
    """Generators of {v : M v = 0 (mod n_mod)}.

    Generator i has additive order ``orders[i]`` and the solution module is
    their direct sum, so every solution is sum(k_i * g_i) with a unique
    0 <= k_i < orders[i].
    """

    n_mod: int
    n_cols: int
    generators: Tuple[Tuple[int, ...], ...]
    orders: Tuple[int, ...]

    @property
    def cardinality(self) -> int:
        return math.prod(self.orders)

    def solutions(self) -> Iterator[Tuple[int, ...]]:
        """Every solution exactly once."""
        for ks in itertools.product(*(range(order) for order in self.orders)):
            yield tuple(
                sum(k * g[c] for k, g in zip(ks, self.generators)) % self.n_mod
                for c in range(self.n_cols)
            )

    def solution_array(self) -> np.ndarray:
        """All solutions as a (cardinality, n_cols) int64 array."""
        result = np.zeros((1, self.n_cols), dtype=np.int64)
        for gen, order in zip(self.generators, self.orders):
            steps = (np.arange(order, dtype=np.int64)[:, None] * np.array(gen, dtype=np.int64))
            result = (result[:, None, :] + steps[None, :, :]).reshape(-1, self.n_cols) % self.n_mod
        return result


def nullspace_mod(matrix: ZnMatrix) -> NullspaceGens:
    """Solutions of M v = 0 over Z_{n_mod} through an integer diagonalization.

    With U M V = S, v = V w solves the system iff S_ii w_i = 0 (mod n) for
    every i, i.e. w_i is a multiple of n / gcd(S_ii, n). Columns beyond the
    row count are free.
    """
    n = matrix.n_mod
    _, s, v = smith_decomposition(matrix.entries, matrix.n_cols)
    generators = []
    orders = []
    for i in range(matrix.n_cols):
        diagonal = s[i][i] if i < matrix.n_rows else 0
        order = math.gcd(diagonal, n)
        if order == 1:
            continue
        step = n // order
        generators.append(tuple((step * v[row][i]) % n for row in range(matrix.n_cols)))
        orders.append(order)
    return NullspaceGens(n, matrix.n_cols, tuple(generators), tuple(orders))

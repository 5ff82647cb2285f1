"""Exact arithmetic in the base field Q_p.

Scalars are rational numbers carrying a p-adic valuation; matrices are
nested tuples/lists of Fractions. Provides the Iwasawa decomposition
g = beta * k (beta upper triangular, k integral of unit determinant),
computed by a column Hermite reduction over the valuation ring, and
residue reduction mod p^r.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

INF = math.inf  # conventional +infinity marker for val_p(0); never serialized


@dataclass(frozen=True)
class BaseFieldParams:
    """The base field Q_p: uniformizer p, residue field F_p (q = p)."""

    p: int

    def __post_init__(self):
        from .fields import is_prime

        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")

    @property
    def q(self) -> int:
        return self.p


def val_p(x, p: int):
    """p-adic valuation of a rational; val_p(0) = +infinity."""
    x = Fraction(x)
    if x == 0:
        return INF
    v = 0
    n = x.numerator
    while n % p == 0:
        n //= p
        v += 1
    d = x.denominator
    while d % p == 0:
        d //= p
        v -= 1
    return v


def reduce_mod(x, p: int, r: int) -> int:
    """Image of a p-integral rational in Z/p^r (denominator inverted)."""
    x = Fraction(x)
    m = p**r
    if x.denominator % p == 0:
        raise ValueError(f"{x} has negative valuation at p = {p}")
    return x.numerator * pow(x.denominator, -1, m) % m


def reduce_mod_matrix(g, p: int, r: int):
    return tuple(tuple(reduce_mod(x, p, r) for x in row) for row in g)


# ---------------------------------------------------------------------------
# Rational matrix helpers


def mat_identity(n: int):
    return [[Fraction(i == j) for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    n, m, k = len(a), len(b[0]), len(b)
    return [
        [sum((Fraction(a[i][t]) * Fraction(b[t][j]) for t in range(k)), Fraction(0)) for j in range(m)]
        for i in range(n)
    ]


def mat_det(a) -> Fraction:
    n = len(a)
    m = [[Fraction(x) for x in row] for row in a]
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            for j in range(c, n):
                m[i][j] -= f * m[c][j]
    return det


def mat_inv(a):
    """Exact inverse of a rational matrix (Gauss-Jordan)."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(i == j) for j in range(n)] for i, row in enumerate(a)]
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        m[c], m[piv] = m[piv], m[c]
        d = m[c][c]
        m[c] = [x / d for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [row[n:] for row in m]


def int_det(a) -> int:
    """Determinant of a small integer matrix, by cofactor expansion."""
    n = len(a)
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    if n == 3:
        return (
            a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
            - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
        )
    det = 0
    for j in range(n):
        if a[0][j]:
            minor = [row[:j] + row[j + 1 :] for row in a[1:]]
            det += (-1) ** j * a[0][j] * int_det(minor)
    return det


# ---------------------------------------------------------------------------
# Iwasawa decomposition


class Iwasawa(NamedTuple):
    beta: list  # upper triangular, diagonal = p-powers
    k: list  # integral (valuation >= 0), unit determinant
    k_inv: list  # its exact inverse, also integral


def iwasawa(g, params: BaseFieldParams) -> Iwasawa:
    """Decompose an invertible g as beta * k with g * U = beta, k = U^-1.

    Column Hermite reduction over the local ring: working bottom row up,
    the minimal-valuation entry of the row is swapped into the diagonal,
    unit-normalized to a power of p, and used to clear the row. All
    column multipliers are p-integral, so U has unit determinant and both
    k = U^-1 and U have entries of valuation >= 0.
    """
    p = params.p
    n = len(g)
    r = [[Fraction(x) for x in row] for row in g]
    u = mat_identity(n)

    def colop_swap(c1, c2):
        for m in (r, u):
            for row in m:
                row[c1], row[c2] = row[c2], row[c1]

    def colop_scale(c, f):
        for m in (r, u):
            for row in m:
                row[c] *= f

    def colop_add(dst, src, f):
        # dst-column += f * src-column
        for m in (r, u):
            for row in m:
                row[dst] += f * row[src]

    for i in range(n - 1, -1, -1):
        piv, pv = None, None
        for c in range(i + 1):
            if r[i][c] != 0:
                v = val_p(r[i][c], p)
                if pv is None or v < pv:
                    piv, pv = c, v
        if piv is None:
            raise ValueError("matrix is singular")
        if piv != i:
            colop_swap(piv, i)
        colop_scale(i, Fraction(p) ** pv / r[i][i])
        for c in range(i):
            if r[i][c] != 0:
                colop_add(c, i, -r[i][c] / r[i][i])

    return Iwasawa(beta=r, k=mat_inv(u), k_inv=u)

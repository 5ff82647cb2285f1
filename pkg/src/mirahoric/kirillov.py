"""Tuple model of mirabolic-invariant Whittaker vectors.

Vectors are finitely supported coefficient maps on the dominant cone
m_1 >= ... >= m_{n-1} >= 0, truncated at m_1 <= M. The operator U^(j)
acts by (U^(j) a)_m = sum_{|I| = j} q^{e(I)} a_{m + e_I}, where e_I is
the indicator vector of I and q^{e(I)} is the coset count |B_I|; reads
beyond the truncation are zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .cosets import free_pair_count
from .localfield import BaseFieldParams


def is_dominant(m) -> bool:
    return all(a >= b for a, b in zip(m, m[1:])) and (not m or m[-1] >= 0)


def dominant_tuples(n: int, trunc: int):
    """All dominant (n-1)-tuples with m_1 <= trunc, in lexicographic order."""

    def rec(length, bound):
        if length == 0:
            yield ()
            return
        for head in range(bound + 1):
            for tail in rec(length - 1, head):
                yield (head,) + tail

    return sorted(rec(n - 1, trunc))


def _subset_shifts(n: int, j: int):
    """(e_I, q-exponent) for all I of size j inside {1,...,n-1}."""
    import itertools

    out = []
    for subset in itertools.combinations(range(1, n), j):
        e = tuple(1 if i in subset else 0 for i in range(1, n))
        out.append((e, free_pair_count(subset, n)))
    return out


@dataclass
class TupleVector:
    """Finitely supported coefficients on the truncated dominant cone."""

    n: int
    trunc: int
    field: object
    coeffs: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        self.coeffs = {
            m: c
            for m, c in self.coeffs.items()
            if c != self.field.zero and is_dominant(m) and (not m or m[0] <= self.trunc)
        }

    def get(self, m):
        return self.coeffs.get(m, self.field.zero)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return (
            isinstance(other, TupleVector)
            and self.n == other.n
            and self.coeffs == other.coeffs
        )


def w_infty(n: int, trunc: int, coeff_field) -> TupleVector:
    """The delta vector at m = 0 (annihilated by every U^(j))."""
    zero = tuple([0] * (n - 1))
    return TupleVector(n=n, trunc=trunc, field=coeff_field, coeffs={zero: coeff_field.one})


def apply_u_tuple(j: int, a: TupleVector, params: BaseFieldParams) -> TupleVector:
    """Apply U^(j) in the tuple model (truncation reads as zero)."""
    n = a.n
    if not 1 <= j <= n - 1:
        raise ValueError(f"j = {j} out of range for n = {n}")
    q = a.field.of(params.q)
    out: dict = {}
    for m_in, c in a.coeffs.items():
        for shift, expo in _subset_shifts(n, j):
            m_out = tuple(x - s for x, s in zip(m_in, shift))
            if not is_dominant(m_out) or m_out[-1] < 0:
                continue
            term = q**expo * c
            out[m_out] = out.get(m_out, a.field.zero) + term
    return TupleVector(n=n, trunc=a.trunc, field=a.field, coeffs=out)


def joint_kernel_tuples(n: int, params: BaseFieldParams, trunc: int, coeff_field):
    """Basis of {a : U^(j) a = 0 for all j} on the truncated cone."""
    from . import linalg

    cone = dominant_tuples(n, trunc)
    index = {m: i for i, m in enumerate(cone)}
    rows = []
    q = coeff_field.of(params.q)
    for j in range(1, n):
        shifts = _subset_shifts(n, j)
        for m_out in cone:
            row = [coeff_field.zero] * len(cone)
            for shift, expo in shifts:
                m_in = tuple(x + s for x, s in zip(m_out, shift))
                if not is_dominant(m_in):
                    continue
                if m_in and m_in[0] > trunc:
                    continue  # beyond truncation: reads as zero
                row[index[m_in]] = row[index[m_in]] + q**expo
            rows.append(row)
    basis = linalg.nullspace(rows, coeff_field)
    out = []
    for v in basis:
        coeffs = {m: x for m, x in zip(cone, v) if x != coeff_field.zero}
        out.append(TupleVector(n=n, trunc=trunc, field=coeff_field, coeffs=coeffs))
    return out

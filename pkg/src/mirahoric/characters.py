"""Unramified characters of the diagonal torus and their evaluation.

A character is stored by its values c_1, ..., c_n at the uniformizer; on
an upper-triangular beta it evaluates to prod_i c_i^{val_p(beta_ii)}.
The normalized mode twists each c_i by q^{(n+1-2i)/2}, which requires the
half-powers of q to exist in the coefficient field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .fields import Mod, PrimeField, RationalField
from .localfield import BaseFieldParams, val_p


@dataclass(frozen=True)
class UnramifiedChar:
    """Satake-type data: the values chi_i(p), all nonzero."""

    values: tuple  # coefficient-field elements
    field: object  # RationalField or PrimeField
    normalized: bool = False

    def __post_init__(self):
        for c in self.values:
            if c == self.field.zero:
                raise ValueError("unramified character values must be nonzero")

    @property
    def n(self) -> int:
        return len(self.values)


def sqrt_in_field(field, a):
    """Exact square root of a field element, or ValueError if absent."""
    if isinstance(field, PrimeField):
        aa = field.of(a)
        for s in range(field.ell):
            if s * s % field.ell == aa.a:
                return Mod(s, field.ell)
        raise ValueError(f"{aa} is not a square in F_{field.ell}")
    a = Fraction(a)
    if a < 0:
        raise ValueError(f"{a} is not a square in Q")
    num = _isqrt_exact(a.numerator)
    den = _isqrt_exact(a.denominator)
    if num is None or den is None:
        raise ValueError(f"{a} is not a square in Q")
    return Fraction(num, den)


def _isqrt_exact(m: int):
    import math

    s = math.isqrt(m)
    return s if s * s == m else None


def effective_values(chi: UnramifiedChar, params: BaseFieldParams) -> tuple:
    """The values actually used: c_i, twisted by q^{(n+1-2i)/2} if normalized."""
    if not chi.normalized:
        return chi.values
    n = chi.n
    q = params.q
    exps = [n + 1 - 2 * i for i in range(1, n + 1)]  # twice the exponent
    if all(e % 2 == 0 for e in exps):
        qf = chi.field.of(q)
        return tuple(c * qf ** (e // 2) for c, e in zip(chi.values, exps))
    s = sqrt_in_field(chi.field, q)
    return tuple(c * s**e for c, e in zip(chi.values, exps))


def chi_eval(chi: UnramifiedChar, beta, params: BaseFieldParams):
    """Evaluate the character on an upper-triangular matrix via its diagonal."""
    vals = effective_values(chi, params)
    out = chi.field.one
    for i, c in enumerate(vals):
        d = beta[i][i]
        if d == 0:
            raise ValueError("beta must have nonzero diagonal")
        out = out * c ** int(val_p(d, params.p))
    return out

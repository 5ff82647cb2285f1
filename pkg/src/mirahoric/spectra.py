"""Exact spectral analysis of the commuting family U^(1), ..., U^(n-1).

Joint kernels realize the functor F_r; joint generalized nullspaces (over
F_ell) and valuation-filtered generalized eigenspaces (over Q, for a
designated ell) realize the localization L_r at the Atkin-Lehner ideal.
Jordan types are recovered from rank sequences of powers.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from . import linalg
from .characters import UnramifiedChar
from .fields import PrimeField, RationalField, scalar_str
from .invariants import enumerate_basis, hecke_matrix
from .localfield import BaseFieldParams, val_p


class NonSplitError(ValueError):
    """A characteristic polynomial has an irreducible nonlinear factor over Q."""


class NonCommutingError(ValueError):
    """The supplied operator family does not commute (construction bug)."""


@dataclass(frozen=True)
class LocalizationSpec:
    """How to localize at the Atkin-Lehner ideal (lambda, X_1, ..., X_{n-1}).

    PrimeField mode: the generalized nullspace over F_ell itself. Rational
    mode: eigenvalues are selected by positive ell-adic valuation, which
    requires the char polys to split over Q.
    """

    field: object
    ell: int | None = None

    def __post_init__(self):
        if isinstance(self.field, RationalField) and self.ell is None:
            raise ValueError("rational-mode localization needs a designated ell")


def char_poly(m, field):
    """Monic characteristic polynomial, descending coefficients."""
    return linalg.charpoly(m, field)


def check_commuting(mats, field):
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            ab = linalg.mat_mul(mats[i], mats[j], field)
            ba = linalg.mat_mul(mats[j], mats[i], field)
            if not linalg.mat_eq(ab, ba):
                raise NonCommutingError(f"operators {i} and {j} do not commute")


def joint_kernel(mats, field):
    """Basis of the common kernel of a commuting family (realizes F_r)."""
    check_commuting(mats, field)
    return linalg.nullspace(linalg.stack(mats), field)


def _eigenvalues(m, field):
    """(roots dict, leftover degree) of the char poly over the base field."""
    cp = char_poly(m, field)
    if isinstance(field, PrimeField):
        return linalg.prime_field_roots(cp, field)
    return linalg.rational_roots(cp)


def joint_generalized_nullspace(mats, spec: LocalizationSpec):
    """Basis of L_r: the joint generalized eigenspace over the ideal.

    Over F_ell: intersection of ker(M_j^d), d = matrix size. Over Q with a
    designated ell: for each operator, kill the generalized eigenspaces of
    all eigenvalues of positive ell-adic valuation (0 included), and
    intersect; raises NonSplitError if some char poly does not split.
    """
    field = spec.field
    check_commuting(mats, field)
    d = len(mats[0])
    pieces = []
    for m in mats:
        if isinstance(field, PrimeField):
            pieces.append(linalg.mat_pow(m, d, field))
        else:
            roots, leftover = _eigenvalues(m, field)
            if leftover > 0:
                raise NonSplitError(
                    "characteristic polynomial has an irreducible nonlinear factor; "
                    "localization over Q requires a field extension"
                )
            selected = [mu for mu in roots if val_p(mu, spec.ell) > 0]
            poly = [field.one]
            for mu in selected:
                for _ in range(d):  # multiply by (x - mu)^d
                    poly = _poly_mul_linear(poly, mu, field)
            pieces.append(linalg.poly_eval_mat(poly, m, field))
    return linalg.nullspace(linalg.stack(pieces), field)


def _poly_mul_linear(poly, mu, field):
    """Multiply a polynomial (descending coefficients) by (x - mu)."""
    shifted = poly + [field.zero]
    scaled = [field.zero] + [mu * c for c in poly]
    return [a - b for a, b in zip(shifted, scaled)]


def jordan_type(m, mu, field):
    """Partition of Jordan block sizes at the eigenvalue mu (possibly [])."""
    n = len(m)
    b = [row[:] for row in m]
    for i in range(n):
        b[i][i] = b[i][i] - mu
    ranks = [n]
    power = linalg.identity(n, field)
    while True:
        power = linalg.mat_mul(power, b, field)
        rk = linalg.rank(power, field)
        ranks.append(rk)
        if rk == ranks[-2]:
            break
    parts = []
    for k in range(1, len(ranks) - 1):
        before = ranks[k - 1] - ranks[k]
        after = ranks[k] - ranks[k + 1] if k + 1 < len(ranks) else 0
        parts.extend([k] * (before - after))
    return sorted(parts, reverse=True)


def banality_check(ell: int, n: int, params: BaseFieldParams) -> bool:
    """True iff ell does not divide #GL_n(F_p)."""
    p = params.p
    if ell == p:
        raise ValueError("ell must differ from p")
    order = p ** (n * (n - 1) // 2)
    for i in range(1, n + 1):
        order *= p**i - 1
    return order % ell != 0


def first_banal_primes(n: int, params: BaseFieldParams, count: int):
    out = []
    from .fields import is_prime

    ell = 2
    while len(out) < count:
        if is_prime(ell) and ell != params.p and banality_check(ell, n, params):
            out.append(ell)
        ell += 1
    return out


@dataclass
class SpectralReport:
    n: int
    p: int
    r: int
    dim: int
    char_polys: list  # per operator, descending coefficients
    dim_f: int
    dim_l: int | None
    jordan: dict  # operator index j -> {eigenvalue -> partition}
    joint_systems: list  # [(eigenvalue tuple, dimension)]
    stabilization_r: int
    meta: dict = dc_field(default_factory=dict)

    def to_json(self):
        j1 = self.jordan.get(1, {})
        return {
            "params": {"n": self.n, "p": self.p, "r": self.r, **self.meta},
            "dim": self.dim,
            "char_polys": [[scalar_str(c) for c in cp] for cp in self.char_polys],
            "dim_F": self.dim_f,
            "dim_L": self.dim_l,
            "jordan": {scalar_str(mu): parts for mu, parts in j1.items()},
            "jordan_all": {
                str(j): {scalar_str(mu): parts for mu, parts in jm.items()}
                for j, jm in self.jordan.items()
            },
            "joint_systems": [
                {"values": [scalar_str(v) for v in vals], "dim": d}
                for vals, d in self.joint_systems
            ],
            "stabilization_r": self.stabilization_r,
        }


def spectral_report(
    n: int,
    params: BaseFieldParams,
    r: int,
    chi: UnramifiedChar,
    spec: LocalizationSpec | None = None,
) -> SpectralReport:
    """Full spectral data of the U^(j) family at level r."""
    field = chi.field
    basis = enumerate_basis(n, params, r)
    mats = [hecke_matrix(n, params, r, j, chi, basis).entries for j in range(1, n)]
    dim = basis.dim
    cps = [char_poly(m, field) for m in mats]
    dim_f = len(joint_kernel(mats, field))

    dim_l = None
    if spec is not None:
        try:
            dim_l = len(joint_generalized_nullspace(mats, spec))
        except NonSplitError:
            dim_l = None

    jordan = {}
    roots_per_op = []
    for j, m in enumerate(mats, start=1):
        roots, _ = _eigenvalues(m, field)
        roots_per_op.append(sorted(roots, key=scalar_str))
        jordan[j] = {mu: jordan_type(m, mu, field) for mu in roots}

    joint_systems = []
    import itertools

    d = dim
    for combo in itertools.product(*roots_per_op):
        pieces = []
        for m, mu in zip(mats, combo):
            b = [row[:] for row in m]
            for i in range(len(b)):
                b[i][i] = b[i][i] - mu
            pieces.append(linalg.mat_pow(b, d, field))
        dim_joint = len(linalg.nullspace(linalg.stack(pieces), field))
        if dim_joint > 0:
            joint_systems.append((combo, dim_joint))

    stab = r
    prev_dims = []
    for rp in range(1, r + 1):
        basis_rp = enumerate_basis(n, params, rp)
        mats_rp = [hecke_matrix(n, params, rp, j, chi, basis_rp).entries for j in range(1, n)]
        prev_dims.append(len(joint_kernel(mats_rp, field)))
    for rp, dv in enumerate(prev_dims, start=1):
        if dv == dim_f:
            stab = rp
            break

    return SpectralReport(
        n=n,
        p=params.p,
        r=r,
        dim=dim,
        char_polys=cps,
        dim_f=dim_f,
        dim_l=dim_l,
        jordan=jordan,
        joint_systems=joint_systems,
        stabilization_r=stab,
    )

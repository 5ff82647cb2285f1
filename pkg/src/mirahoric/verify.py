"""Verification battery tying the engine to its checkable claims.

Each suite returns a list of Check records; the CLI runner and the
acceptance tests both drive these. Random characters are drawn from a
seeded generator so runs are reproducible.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from . import kirillov, linalg
from .characters import UnramifiedChar
from .cosets import (
    LEVEL_ZERO,
    coset_degree,
    gaussian_binomial,
    verify_partition,
)
from .fields import QQ, PrimeField, scalar_str
from .invariants import (
    canonical_row,
    embedding_matrix,
    enumerate_basis,
    hecke_matrix,
    projector_matrix,
    right_triangular_orbits,
)
from .localfield import BaseFieldParams
from .spectra import (
    LocalizationSpec,
    _eigenvalues,
    first_banal_primes,
    joint_generalized_nullspace,
    joint_kernel,
    jordan_type,
)


@dataclass
class Check:
    name: str
    passed: bool
    expected: str
    computed: str


@dataclass
class VerifyResult:
    suite: str
    checks: list
    seconds: float

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self):
        return {
            "suite": self.suite,
            "passed": self.passed,
            "seconds": round(self.seconds, 3),
            "checks": [
                {
                    "name": c.name,
                    "status": "pass" if c.passed else "fail",
                    "expected": c.expected,
                    "computed": c.computed,
                }
                for c in self.checks
            ],
        }


def _check(name, expected, computed) -> Check:
    return Check(name=name, passed=expected == computed, expected=str(expected), computed=str(computed))


# ---------------------------------------------------------------------------
# character draws


def draw_generic_rational_chi(rng: random.Random, n: int, q: int) -> UnramifiedChar:
    """Distinct nonzero rational values; for n=2 also q*c1 != c2."""
    while True:
        vals = tuple(Fraction(rng.randint(1, 19)) for _ in range(n))
        if any(v == 0 for v in vals):
            continue
        if len(set(vals)) != n:
            continue
        if n == 2 and q * vals[0] == vals[1]:
            continue
        return UnramifiedChar(values=vals, field=QQ)


def draw_mod_chi(rng: random.Random, n: int, ell: int, repeated: bool = False) -> UnramifiedChar:
    gf = PrimeField(ell)
    if repeated:
        v = gf.of(rng.randint(1, ell - 1))
        return UnramifiedChar(values=(v,) * n, field=gf)
    vals = tuple(gf.of(rng.randint(1, ell - 1)) for _ in range(n))
    return UnramifiedChar(values=vals, field=gf)


def draw_unit_int_chi(rng: random.Random, n: int, ell: int) -> UnramifiedChar:
    """Rational chi with values in 1..ell-1 (ell-integral, ell-unit)."""
    vals = tuple(Fraction(rng.randint(1, ell - 1)) for _ in range(n))
    return UnramifiedChar(values=vals, field=QQ)


# ---------------------------------------------------------------------------
# suites (numbered as in the acceptance battery)


def suite_cosets(seed: int = 0) -> list:
    checks = []
    grid = [(2, 1, 2, 1), (2, 1, 2, 2), (2, 1, 3, 1), (2, 1, 3, 2), (3, 1, 2, 1), (3, 2, 2, 1), (3, 1, 3, 1)]
    for n, j, p, r in grid:
        rep = verify_partition(n, j, BaseFieldParams(p), r)
        tag = f"partition(n={n},j={j},p={p},r={r})"
        checks.append(_check(f"{tag}: pairwise distinct", True, rep.pairwise_distinct))
        checks.append(_check(f"{tag}: oracle index = degree {rep.degree}", rep.degree, rep.oracle_index))
    rep = verify_partition(3, 1, BaseFieldParams(2), 1)
    checks.append(_check("index(3,1,2,1) = 6 = 2^2+2", 6, rep.oracle_index))
    return checks


def suite_levelzero(seed: int = 0) -> list:
    checks = []
    for q in (2, 3, 5):
        params = BaseFieldParams(q)
        for n in range(2, 5):
            for j in range(1, n + 1):
                deg = coset_degree(n, j, params, LEVEL_ZERO).value
                expect = gaussian_binomial(n, j, q)
                checks.append(_check(f"level-zero degree(n={n},j={j},q={q}) = [n,j]_q", expect, deg))
    return checks


def suite_jordan(seed: int = 12345) -> list:
    """Jordan structure of U^(1) on GL_2 unramified principal series, char 0."""
    rng = random.Random(seed)
    checks = []
    for p in (2, 3, 5):
        params = BaseFieldParams(p)
        for r in (2, 3, 4):
            basis = enumerate_basis(2, params, r)
            for t in range(5):
                chi = draw_generic_rational_chi(rng, 2, p)
                tag = f"cor3(p={p},r={r},chi={[str(v) for v in chi.values]})"
                m = hecke_matrix(2, params, r, 1, chi, basis).entries
                checks.append(_check(f"{tag}: dim = r+1", r + 1, len(m)))
                checks.append(_check(f"{tag}: zero Jordan type [r-1]", [r - 1], jordan_type(m, Fraction(0), QQ)))
                roots, leftover = _eigenvalues(m, QQ)
                nonzero = sorted(mu for mu in roots if mu != 0)
                ok_split = leftover == 0 and len(nonzero) == 2
                checks.append(_check(f"{tag}: two nonzero eigenvalues", True, ok_split))
                simple = all(jordan_type(m, mu, QQ) == [1] for mu in nonzero)
                checks.append(_check(f"{tag}: nonzero eigenvalues simple", True, simple))
                parts = jordan_type(m, Fraction(0), QQ)
                semisimple = all(x == 1 for x in parts) and simple
                checks.append(_check(f"{tag}: semisimple iff r=2", r == 2, semisimple))
    return checks


def suite_banal(seed: int = 12345) -> list:
    """dim F_n = dim L_n = 1 over banal F_ell at level r = n."""
    rng = random.Random(seed)
    checks = []
    for n in (2, 3):
        for p in (2, 3):
            params = BaseFieldParams(p)
            basis = enumerate_basis(n, params, n)
            for ell in first_banal_primes(n, params, 2):
                gf = PrimeField(ell)
                for t in range(5):
                    chi = draw_mod_chi(rng, n, ell, repeated=(t == 0))
                    tag = f"banal(n={n},p={p},l={ell},chi={[v.a for v in chi.values]})"
                    mats = [hecke_matrix(n, params, n, j, chi, basis).entries for j in range(1, n)]
                    dim_f = len(joint_kernel(mats, gf))
                    dim_l = len(joint_generalized_nullspace(mats, LocalizationSpec(field=gf)))
                    checks.append(_check(f"{tag}: dim F_n = 1", 1, dim_f))
                    checks.append(_check(f"{tag}: dim L_n = 1", 1, dim_l))
    return checks


def suite_kirillov(seed: int = 0) -> list:
    checks = []
    modes = [("QQ", QQ), ("F5", PrimeField(5))]
    for n in (2, 3, 4):
        for p in (2, 3):
            params = BaseFieldParams(p)
            for trunc in (4, 6):
                for label, field in modes:
                    tag = f"kirillov(n={n},p={p},M={trunc},{label})"
                    ker = kirillov.joint_kernel_tuples(n, params, trunc, field)
                    delta = kirillov.w_infty(n, trunc, field)
                    checks.append(_check(f"{tag}: dim = 1", 1, len(ker)))
                    spans = len(ker) == 1 and _proportional(ker[0], delta, field)
                    checks.append(_check(f"{tag}: kernel = span(delta_0)", True, spans))
                    ker2 = kirillov.joint_kernel_tuples(n, params, trunc + 1, field)
                    stable = len(ker2) == 1 and _proportional(ker2[0], kirillov.w_infty(n, trunc + 1, field), field)
                    checks.append(_check(f"{tag}: stable under M -> M+1", True, stable))
    return checks


def _proportional(a, b, field) -> bool:
    if set(a.coeffs) != set(b.coeffs):
        return False
    items = sorted(a.coeffs)
    if not items:
        return True
    m0 = items[0]
    ratio = a.coeffs[m0] / b.coeffs[m0]
    return all(a.coeffs[m] == ratio * b.coeffs[m] for m in items)


def _chi_triple(rng, n, q):
    out = [UnramifiedChar(values=tuple(Fraction(1) for _ in range(n)), field=QQ)]
    while len(out) < 3:
        out.append(draw_generic_rational_chi(rng, n, q))
    return out


def suite_commute(seed: int = 12345) -> list:
    rng = random.Random(seed)
    checks = []
    for p in (2, 3):
        params = BaseFieldParams(p)
        for r in (1, 2):
            basis = enumerate_basis(3, params, r)
            for chi in _chi_triple(rng, 3, p):
                mats = [hecke_matrix(3, params, r, j, chi, basis).entries for j in (1, 2)]
                ab = linalg.mat_mul(mats[0], mats[1], QQ)
                ba = linalg.mat_mul(mats[1], mats[0], QQ)
                tag = f"commute(p={p},r={r},chi={[str(v) for v in chi.values]})"
                checks.append(_check(f"{tag}: U1 U2 = U2 U1", True, linalg.mat_eq(ab, ba)))
    return checks


def suite_basechange(seed: int = 12345) -> list:
    rng = random.Random(seed)
    checks = []
    for p in (2, 3):
        params = BaseFieldParams(p)
        ell = first_banal_primes(3, params, 1)[0]
        gf = PrimeField(ell)
        for r in (1, 2):
            basis = enumerate_basis(3, params, r)
            for _ in range(3):
                chi_q = draw_unit_int_chi(rng, 3, ell)
                chi_l = UnramifiedChar(values=tuple(gf.of(v) for v in chi_q.values), field=gf)
                tag = f"basechange(p={p},r={r},l={ell},chi={[str(v) for v in chi_q.values]})"
                for j in (1, 2):
                    m_q = hecke_matrix(3, params, r, j, chi_q, basis).entries
                    m_l = hecke_matrix(3, params, r, j, chi_l, basis).entries
                    reduced = [[gf.of(x) for x in row] for row in m_q]
                    checks.append(_check(f"{tag}: U{j} reduces entrywise", True, linalg.mat_eq(reduced, m_l)))
    return checks


def suite_levelchange(seed: int = 12345) -> list:
    rng = random.Random(seed)
    checks = []
    for p in (2, 3):
        params = BaseFieldParams(p)
        for r, s in ((1, 2), (2, 3)):
            e, basis_r, basis_s = embedding_matrix(2, params, r, s, QQ)
            for chi in _chi_triple(rng, 2, p)[:2]:
                tag = f"levelchange(p={p},r={r},s={s},chi={[str(v) for v in chi.values]})"
                h_r = hecke_matrix(2, params, r, 1, chi, basis_r).entries
                h_s = hecke_matrix(2, params, s, 1, chi, basis_s).entries
                lhs = linalg.mat_mul(h_s, e, QQ)
                rhs = linalg.mat_mul(e, h_r, QQ)
                checks.append(_check(f"{tag}: E intertwines", True, linalg.mat_eq(lhs, rhs)))
            proj = projector_matrix(2, params, r, s, QQ, basis_s)
            tag = f"projector(p={p},r={r},s={s})"
            checks.append(_check(f"{tag}: idempotent", True, linalg.mat_eq(linalg.mat_mul(proj, proj, QQ), proj)))
            checks.append(_check(f"{tag}: rank = dim level r", basis_r.dim, linalg.rank(proj, QQ)))
            pe = linalg.mat_mul(proj, e, QQ)
            checks.append(_check(f"{tag}: identity on embedded subspace", True, linalg.mat_eq(pe, e)))
    return checks


def suite_eigenvector(seed: int = 0) -> list:
    checks = []
    for n in (2, 3):
        for p in (2, 3):
            params = BaseFieldParams(p)
            chi = UnramifiedChar(values=tuple(Fraction(1) for _ in range(n)), field=QQ)
            for r in (1, 2):
                basis = enumerate_basis(n, params, r)
                for j in range(1, n):
                    deg = coset_degree(n, j, params).value
                    m = hecke_matrix(n, params, r, j, chi, basis).entries
                    ones = [QQ.one] * len(m)
                    image = linalg.mat_vec(m, ones, QQ)
                    tag = f"degree-eigenvector(n={n},p={p},r={r},j={j})"
                    checks.append(_check(f"{tag}: M*1 = {deg}*1", True, all(x == deg for x in image)))
    return checks


def suite_canonical(seed: int = 0) -> list:
    checks = []
    grid = [(2, 1), (3, 1), (2, 2), (2, 3), (3, 2)]  # (p, r) with p^r in {2,3,4,8,9}
    for n in (2, 3):
        for p, r in grid:
            params = BaseFieldParams(p)
            orbits = right_triangular_orbits(n, params, r)
            canon = {v: canonical_row(v, params, r) for v in orbits}
            agree = True
            by_orbit: dict = {}
            for v, rep in orbits.items():
                by_orbit.setdefault(rep, set()).add(canon[v])
            agree = all(len(vals) == 1 for vals in by_orbit.values())
            distinct = len({next(iter(vals)) for vals in by_orbit.values()}) == len(by_orbit)
            tag = f"canonical(n={n},p^r={p}^{r})"
            checks.append(_check(f"{tag}: constant on orbits", True, agree))
            checks.append(_check(f"{tag}: distinct across orbits", True, distinct))
    return checks


SUITES = {
    "cosets": suite_cosets,
    "levelzero": suite_levelzero,
    "jordan": suite_jordan,
    "banal": suite_banal,
    "kirillov": suite_kirillov,
    "commute": suite_commute,
    "basechange": suite_basechange,
    "levelchange": suite_levelchange,
    "eigenvector": suite_eigenvector,
    "canonical": suite_canonical,
}


def run_suite(name: str, seed: int = 12345) -> VerifyResult:
    start = time.monotonic()
    checks = SUITES[name](seed=seed)
    return VerifyResult(suite=name, checks=checks, seconds=time.monotonic() - start)


def run_all(names=None, seed: int = 12345):
    names = list(SUITES) if names is None else names
    return [run_suite(name, seed=seed) for name in names]

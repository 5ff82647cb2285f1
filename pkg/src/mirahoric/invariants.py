"""Finite model of the U_1(p^r)-invariants of an unramified principal series.

The invariant space of Ind_B^G(chi) has a basis indexed by the double
cosets B(O)\\K/U_1(p^r), identified with primitive rows over Z/p^r
modulo the right action of upper-triangular units, via k -> e_n k^-1.
Each class gets a canonical representative (greedy left-to-right p-power
normalization) and an integral lift k_x with unit determinant. Hecke
matrices for U^(j) are assembled by exact Iwasawa evaluation against
Mann's representatives.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .characters import UnramifiedChar, chi_eval
from .cosets import LEVEL_POSITIVE, enumerate_mann_reps
from .localfield import (
    BaseFieldParams,
    iwasawa,
    mat_inv,
    reduce_mod,
    val_p,
)

BASIS_BUDGET = 2**22


def _val_mod(x: int, p: int, r: int) -> int:
    """Valuation of a residue in Z/p^r, capped at r."""
    x %= p**r
    if x == 0:
        return r
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def canonical_row(v, params: BaseFieldParams, r: int):
    """Canonical orbit representative of a primitive row over Z/p^r.

    Greedy left-to-right: each entry is reduced modulo the ideal generated
    by the earlier canonical entries, then unit-normalized to a power of p
    (or 0). Idempotent, and an invariant of the right-triangular orbit.
    """
    p = params.p
    mod = p**r
    if all(x % p == 0 for x in v):
        raise ValueError(f"row {tuple(v)} is not primitive mod {p}^{r}")
    d = r  # current ideal is (p^d)
    out = []
    for x in v:
        xm = x % (p**d) if d > 0 else 0
        w = _val_mod(xm, p, r)
        if w >= d:
            out.append(0)
        else:
            out.append(p**w % mod)
            d = w
    return tuple(out)


@dataclass
class InvariantBasis:
    n: int
    p: int
    r: int
    rows: list  # canonical rows, sorted
    lifts: list  # integral unit-determinant matrices k_x per row

    @property
    def dim(self) -> int:
        return len(self.rows)

    def index(self, row) -> int:
        return self._index[row]

    def __post_init__(self):
        self._index = {row: i for i, row in enumerate(self.rows)}


def enumerate_basis(
    n: int, params: BaseFieldParams, r: int, rng: random.Random | None = None, budget: int = BASIS_BUDGET
) -> InvariantBasis:
    """All canonical primitive-row classes at level r, with integral lifts."""
    p = params.p
    mod = p**r
    if mod**n > budget:
        raise ValueError(f"basis budget exceeded: {mod}^{n} > {budget}")
    seen = set()
    for v in itertools.product(range(mod), repeat=n):
        if all(x % p == 0 for x in v):
            continue
        seen.add(canonical_row(v, params, r))
    rows = sorted(seen)
    lifts = [_lift(row, params, r, rng) for row in rows]
    return InvariantBasis(n=n, p=p, r=r, rows=rows, lifts=lifts)


def _lift(row, params: BaseFieldParams, r: int, rng: random.Random | None = None):
    """Integral k with unit determinant and e_n (k mod p^r)^-1 = row."""
    n = len(row)
    p = params.p
    mod = p**r
    unit = next(i for i, x in enumerate(row) if x % p != 0)
    a = [[1 if jj == kk else 0 for kk in range(n)] for jj in [k for k in range(n) if k != unit]]
    a.append(list(row))
    if rng is not None:
        # random row operations fixing the last row (lift independence checks)
        for _ in range(4 * n):
            i = rng.randrange(n - 1)
            t = rng.randrange(n)
            if t == i:
                continue
            c = rng.randrange(mod)
            a[i] = [(x + c * y) % mod for x, y in zip(a[i], a[t])]
    inv = mat_inv(a)  # denominators are units mod p, so reduction is exact
    return tuple(tuple(reduce_mod(x, p, r) for x in rowi) for rowi in inv)


def class_of(k_inv, basis: InvariantBasis, params: BaseFieldParams):
    """Basis index of an element of K given the exact inverse of k."""
    row = tuple(reduce_mod(x, params.p, basis.r) for x in k_inv[-1])
    return basis.index(canonical_row(row, params, basis.r))


@dataclass
class HeckeMatrix:
    n: int
    p: int
    r: int
    j: int
    chi: UnramifiedChar
    entries: list  # dim x dim, coefficient-field elements
    basis: InvariantBasis

    @property
    def dim(self) -> int:
        return len(self.entries)


def hecke_matrix(
    n: int,
    params: BaseFieldParams,
    r: int,
    j: int,
    chi: UnramifiedChar,
    basis: InvariantBasis | None = None,
) -> HeckeMatrix:
    """Exact matrix of U^(j) on the level-r invariants of Ind_B^G(chi).

    Entry [y][x] is the value of U^(j) f_x at the lift k_y: for each Mann
    representative b, factor k_y b = beta k'' and add chi(beta) whenever
    k'' lies in the class x. Columns index source basis vectors.
    """
    if chi.n != n:
        raise ValueError("character rank must equal n")
    if basis is None:
        basis = enumerate_basis(n, params, r)
    field = chi.field
    reps = enumerate_mann_reps(n, j, params, LEVEL_POSITIVE)
    rep_mats = [rep.matrix(params) for rep in reps]
    dim = basis.dim
    m = linalg.zeros(dim, dim, field)
    for y, k_y in enumerate(basis.lifts):
        g_rows = [[Fraction(v) for v in row] for row in k_y]
        for bmat in rep_mats:
            g = [
                [sum(g_rows[i][t] * bmat[t][jj] for t in range(n)) for jj in range(n)]
                for i in range(n)
            ]
            dec = iwasawa(g, params)
            x = class_of(dec.k_inv, basis, params)
            m[y][x] = m[y][x] + chi_eval(chi, dec.beta, params)
    return HeckeMatrix(n=n, p=params.p, r=r, j=j, chi=chi, entries=m, basis=basis)


def embedding_matrix(n: int, params: BaseFieldParams, r: int, s: int, field):
    """0/1 matrix of the inclusion of level-r invariants into level s.

    Entry [x_s][x_r] = 1 iff the level-r canonicalization of x_s mod p^r
    is x_r. Intertwines the Hecke matrices at the two levels.
    """
    if not 1 <= r <= s:
        raise ValueError("need 1 <= r <= s")
    basis_r = enumerate_basis(n, params, r)
    basis_s = enumerate_basis(n, params, s)
    mod_r = params.p**r
    e = linalg.zeros(basis_s.dim, basis_r.dim, field)
    for i, row_s in enumerate(basis_s.rows):
        coarse = canonical_row(tuple(x % mod_r for x in row_s), params, r)
        e[i][basis_r.index(coarse)] = field.one
    return e, basis_r, basis_s


def projector_matrix(n: int, params: BaseFieldParams, r: int, s: int, field, basis_s: InvariantBasis | None = None):
    """Matrix of the averaging projector e_{U_1(p^r)} on the level-s basis.

    Averages right translation over the transversal
    I + p^r (t_1 E_{n1} + ... + t_n E_{nn}), t in (Z/p^{s-r})^n; requires
    the index p^{n(s-r)} to be invertible in the coefficient field.
    """
    if not 1 <= r <= s:
        raise ValueError("need 1 <= r <= s")
    p = params.p
    if getattr(field, "char", 0) == p and s > r:
        raise ValueError(f"index p^{n * (s - r)} is not invertible in {field!r}")
    if basis_s is None:
        basis_s = enumerate_basis(n, params, s)
    count = p ** (n * (s - r))
    inv_count = field.one / field.of(count)
    mat = linalg.zeros(basis_s.dim, basis_s.dim, field)
    mod_s = p**s
    for y, k_y in enumerate(basis_s.lifts):
        for t in itertools.product(range(p ** (s - r)), repeat=n):
            u = [[Fraction(i == jj) for jj in range(n)] for i in range(n)]
            for k in range(n):
                u[n - 1][k] += Fraction(p**r * t[k])
            g = [
                [sum(Fraction(k_y[i][a]) * u[a][jj] for a in range(n)) for jj in range(n)]
                for i in range(n)
            ]
            x = class_of(mat_inv(g), basis_s, params)
            mat[y][x] = mat[y][x] + field.one
    return [[v * inv_count for v in row] for row in mat]


def right_triangular_orbits(n: int, params: BaseFieldParams, r: int):
    """Brute-force orbit partition of primitive rows (oracle for canonical_row).

    BFS closure under the generators of the upper-triangular units over
    Z/p^r: diagonal unit scalings and elementary column additions.
    """
    p = params.p
    mod = p**r
    units = [u for u in range(mod) if u % p != 0]
    rows = [
        v
        for v in itertools.product(range(mod), repeat=n)
        if not all(x % p == 0 for x in v)
    ]
    orbit_of = {}
    for start in rows:
        if start in orbit_of:
            continue
        orbit = {start}
        frontier = [start]
        while frontier:
            v = frontier.pop()
            nxt = []
            for k in range(n):
                for u in units:
                    w = list(v)
                    w[k] = w[k] * u % mod
                    nxt.append(tuple(w))
            for i in range(n):
                for k in range(i + 1, n):
                    w = list(v)
                    w[k] = (w[k] + w[i]) % mod
                    nxt.append(tuple(w))
            for w in nxt:
                if w not in orbit:
                    orbit.add(w)
                    frontier.append(w)
        rep = min(orbit)
        for w in orbit:
            orbit_of[w] = rep
    return orbit_of

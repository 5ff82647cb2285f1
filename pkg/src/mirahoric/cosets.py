"""Mann's coset representatives for the operators U^(j).

For level r > 0 the double coset of alpha_j = diag(p*1_j, 1_{n-j})
decomposes into single cosets b*U_1(p^r), where b runs over upper
triangular matrices with diagonal p on a subset I of {1,...,n-1} of size
j (diagonal 1 elsewhere) and free residue entries at positions (i,k)
with i in I, k not in I, i < k. The representative set does not depend
on r. At level zero the subsets instead range over {1,...,n}.

The partition is verified against a brute-force index count in the
finite quotient GL_n(Z/p^r).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .localfield import BaseFieldParams, int_det, mat_inv, val_p

DEFAULT_BUDGET = 2**24

LEVEL_POSITIVE = "positive"
LEVEL_ZERO = "zero"


def free_pairs(subset, n: int):
    """Positions (i,k), 1-based, of the free entries for a subset I."""
    inside = set(subset)
    return [(i, k) for i in subset for k in range(i + 1, n + 1) if k not in inside]


def free_pair_count(subset, n: int) -> int:
    return len(free_pairs(subset, n))


@dataclass(frozen=True)
class MannRep:
    """One representative b in B_I: its subset and free-entry assignment."""

    n: int
    subset: tuple
    entries: tuple  # ((i, k), value) pairs, row-major

    def matrix(self, params: BaseFieldParams):
        b = [[0] * self.n for _ in range(self.n)]
        for i in range(self.n):
            b[i][i] = params.p if (i + 1) in self.subset else 1
        for (i, k), z in self.entries:
            b[i - 1][k - 1] = z
        return tuple(tuple(row) for row in b)


@dataclass(frozen=True)
class CosetDegree:
    n: int
    j: int
    level_kind: str
    value: int


def _subsets(n: int, j: int, level_kind: str):
    top = n - 1 if level_kind == LEVEL_POSITIVE else n
    if not 1 <= j <= top:
        raise ValueError(f"j = {j} out of range for n = {n}, level {level_kind}")
    # colexicographic order, fixed for reproducible output
    return sorted(itertools.combinations(range(1, top + 1), j), key=lambda s: tuple(reversed(s)))


def enumerate_mann_reps(n: int, j: int, params: BaseFieldParams, level_kind: str = LEVEL_POSITIVE):
    reps = []
    for subset in _subsets(n, j, level_kind):
        pairs = free_pairs(subset, n)
        for values in itertools.product(range(params.p), repeat=len(pairs)):
            reps.append(MannRep(n=n, subset=subset, entries=tuple(zip(pairs, values))))
    return reps


def coset_degree(n: int, j: int, params: BaseFieldParams, level_kind: str = LEVEL_POSITIVE) -> CosetDegree:
    value = sum(params.q ** free_pair_count(s, n) for s in _subsets(n, j, level_kind))
    return CosetDegree(n=n, j=j, level_kind=level_kind, value=value)


def gaussian_binomial(n: int, j: int, q: int) -> int:
    num = den = 1
    for i in range(1, j + 1):
        num *= q ** (n - i + 1) - 1
        den *= q**i - 1
    assert num % den == 0
    return num // den


def in_mirahoric(h, params: BaseFieldParams, r: int) -> bool:
    """Whether a rational matrix lies in U_1(p^r)."""
    p = params.p
    n = len(h)
    for row in h:
        for x in row:
            if x != 0 and val_p(x, p) < 0:
                return False
    det = Fraction(1)
    m = [[Fraction(x) for x in row] for row in h]
    from .localfield import mat_det

    det = mat_det(m)
    if det == 0 or val_p(det, p) != 0:
        return False
    mod = p**r
    from .localfield import reduce_mod

    last = [reduce_mod(x, p, r) for x in h[n - 1]]
    return last == [0] * (n - 1) + [1 % mod]


@dataclass(frozen=True)
class PartitionReport:
    n: int
    j: int
    p: int
    r: int
    pairwise_distinct: bool
    oracle_index: int
    degree: int

    @property
    def degree_matches(self) -> bool:
        return self.oracle_index == self.degree


def verify_partition(
    n: int, j: int, params: BaseFieldParams, r: int, budget: int = DEFAULT_BUDGET
) -> PartitionReport:
    """Check disjointness and completeness of the level-r partition.

    Disjointness: b^-1 b' never lies in U_1(p^r), over exact rationals.
    Completeness: the brute-force index
    [image of U_1(p^r) : image of U_1(p^r) cap alpha_j U_1(p^r) alpha_j^-1]
    in GL_n(Z/p^r) equals the representative count. The intersection is
    cut out by the extra congruence: top-right j x (n-j) block = 0 mod p.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    p = params.p
    mod = p**r
    reps = enumerate_mann_reps(n, j, params, LEVEL_POSITIVE)
    mats = [rep.matrix(params) for rep in reps]

    distinct = True
    inverses = [mat_inv(m) for m in mats]
    for a in range(len(mats)):
        for b in range(len(mats)):
            if a == b:
                continue
            h = _mul(inverses[a], mats[b])
            if in_mirahoric(h, params, r):
                distinct = False

    # brute-force filtration: last row is pinned to (0,...,0,1) in Z/p^r
    n_free = n * (n - 1)
    if mod**n_free > budget:
        raise ValueError(f"oracle budget exceeded: {mod}^{n_free} > {budget}")
    count_u1 = 0
    count_int = 0
    last_row = [0] * (n - 1) + [1 % mod]
    for flat in itertools.product(range(mod), repeat=n_free):
        rows = [list(flat[i * n : (i + 1) * n]) for i in range(n - 1)] + [last_row]
        if int_det(rows) % p == 0:
            continue
        count_u1 += 1
        if all(rows[i][k] % p == 0 for i in range(j) for k in range(j, n)):
            count_int += 1
    assert count_int > 0 and count_u1 % count_int == 0
    return PartitionReport(
        n=n,
        j=j,
        p=p,
        r=r,
        pairwise_distinct=distinct,
        oracle_index=count_u1 // count_int,
        degree=coset_degree(n, j, params).value,
    )


def _mul(a, b):
    n = len(a)
    return [
        [sum(Fraction(a[i][t]) * Fraction(b[t][j]) for t in range(n)) for j in range(n)]
        for i in range(n)
    ]

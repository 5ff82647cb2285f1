"""Exact linear algebra over a coefficient field (Q or F_ell).

Matrices are lists of lists of field elements. The characteristic
polynomial uses the division-free Berkowitz recursion, so the same code
path serves both coefficient modes.
"""

from __future__ import annotations

from fractions import Fraction


def zeros(rows: int, cols: int, field):
    return [[field.zero for _ in range(cols)] for _ in range(rows)]


def identity(n: int, field):
    m = zeros(n, n, field)
    for i in range(n):
        m[i][i] = field.one
    return m


def mat_mul(a, b, field):
    n, k, m = len(a), len(b), len(b[0])
    out = zeros(n, m, field)
    for i in range(n):
        for t in range(k):
            x = a[i][t]
            if x == field.zero:
                continue
            brow = b[t]
            orow = out[i]
            for j in range(m):
                orow[j] = orow[j] + x * brow[j]
    return out


def mat_vec(a, v, field):
    return [sum((x * y for x, y in zip(row, v)), field.zero) for row in a]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c):
    return [[c * x for x in row] for row in a]


def mat_pow(a, e: int, field):
    n = len(a)
    out = identity(n, field)
    base = [row[:] for row in a]
    while e:
        if e & 1:
            out = mat_mul(out, base, field)
        e >>= 1
        if e:
            base = mat_mul(base, base, field)
    return out


def mat_eq(a, b) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def rref(a, field):
    """Reduced row echelon form; returns (R, pivot column list)."""
    m = [row[:] for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    pr = 0
    for pc in range(cols):
        piv = next((i for i in range(pr, rows) if m[i][pc] != field.zero), None)
        if piv is None:
            continue
        m[pr], m[piv] = m[piv], m[pr]
        d = m[pr][pc]
        m[pr] = [x / d for x in m[pr]]
        for i in range(rows):
            if i != pr and m[i][pc] != field.zero:
                f = m[i][pc]
                m[i] = [x - f * y for x, y in zip(m[i], m[pr])]
        pivots.append(pc)
        pr += 1
        if pr == rows:
            break
    return m, pivots


def rank(a, field) -> int:
    if not a:
        return 0
    return len(rref(a, field)[1])


def nullspace(a, field):
    """Basis of the right kernel {v : a v = 0}, as a list of vectors."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    if rows == 0:
        return [[field.one if j == i else field.zero for j in range(cols)] for i in range(cols)]
    r, pivots = rref(a, field)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [field.zero] * cols
        v[fc] = field.one
        for i, pc in enumerate(pivots):
            v[pc] = -r[i][fc]
        basis.append(v)
    return basis


def stack(mats):
    out = []
    for m in mats:
        out.extend(row[:] for row in m)
    return out


# ---------------------------------------------------------------------------
# Characteristic polynomial (Berkowitz, division-free)


def charpoly(a, field):
    """Coefficients of det(xI - a), descending (monic first)."""
    n = len(a)
    if n == 0:
        return [field.one]
    return _berkowitz(a, field)


def _berkowitz(m, field):
    k = len(m)
    if k == 1:
        return [field.one, -m[0][0]]
    a = m[0][0]
    row = m[0][1:]
    col = [m[i][0] for i in range(1, k)]
    sub = [r[1:] for r in m[1:]]
    v = [field.one, -a]
    w = col
    for _ in range(k - 1):
        v.append(-sum((x * y for x, y in zip(row, w)), field.zero))
        w = mat_vec(sub, w, field)
    prev = _berkowitz(sub, field)  # length k
    # Toeplitz product: out[i] = sum_j v[i-j] * prev[j]
    out = []
    for i in range(k + 1):
        s = field.zero
        for j in range(min(i, k - 1) + 1):
            s = s + v[i - j] * prev[j]
        out.append(s)
    return out


def poly_eval_mat(coeffs_desc, m, field):
    """Evaluate a polynomial (descending coefficients) at a square matrix."""
    n = len(m)
    out = zeros(n, n, field)
    for c in coeffs_desc:
        out = mat_mul(out, m, field)
        for i in range(n):
            out[i][i] = out[i][i] + c
    return out


def poly_eval(coeffs_desc, x, field):
    out = field.zero
    for c in coeffs_desc:
        out = out * x + c
    return out


# ---------------------------------------------------------------------------
# Root finding for exact spectral data


def _divisors(m: int):
    m = abs(m)
    out = []
    d = 1
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            out.append(m // d)
        d += 1
    return sorted(set(out))


def rational_roots(coeffs_desc):
    """Roots in Q of a monic rational polynomial, with multiplicity.

    Returns (dict root -> multiplicity, degree of the rootless cofactor).
    """
    coeffs = [Fraction(c) for c in coeffs_desc]
    roots: dict = {}
    # strip zero roots first
    while len(coeffs) > 1 and coeffs[-1] == 0:
        roots[Fraction(0)] = roots.get(Fraction(0), 0) + 1
        coeffs = coeffs[:-1]
    while len(coeffs) > 1:
        from math import lcm

        den = lcm(*[c.denominator for c in coeffs])
        ints = [int(c * den) for c in coeffs]
        a0, an = ints[-1], ints[0]
        found = None
        for pnum in _divisors(a0):
            for pden in _divisors(an):
                for sign in (1, -1):
                    cand = Fraction(sign * pnum, pden)
                    if _horner(coeffs, cand) == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            break
        roots[found] = roots.get(found, 0) + 1
        coeffs = _deflate(coeffs, found)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            roots[Fraction(0)] = roots.get(Fraction(0), 0) + 1
            coeffs = coeffs[:-1]
    return roots, len(coeffs) - 1


def prime_field_roots(coeffs_desc, field):
    """Roots in F_ell of a monic polynomial over F_ell, with multiplicity."""
    roots: dict = {}
    coeffs = list(coeffs_desc)
    while len(coeffs) > 1:
        found = None
        for a in range(field.ell):
            cand = field.of(a)
            if poly_eval(coeffs, cand, field) == field.zero:
                found = cand
                break
        if found is None:
            break
        roots[found] = roots.get(found, 0) + 1
        coeffs = _deflate(coeffs, found)
    return roots, len(coeffs) - 1


def _horner(coeffs, x):
    out = Fraction(0)
    for c in coeffs:
        out = out * x + c
    return out


def _deflate(coeffs, root):
    # synthetic division by (x - root); exact since root is a root
    out = [coeffs[0]]
    for c in coeffs[1:-1]:
        out.append(c + out[-1] * root)
    return out

"""Exact integer-matrix utilities: Hermite/Smith normal forms, lattice arithmetic.

Matrices are tuples of tuples of Python ints (rows are vectors), so everything
is exact at arbitrary precision.  Ranks here are tiny (a module rarely has more
than six cyclic factors), so the classical cubic algorithms are used throughout.

Conventions:
  * lattices are row spans: L = {y @ H : y integer row vector};
  * canonical bases are row-style Hermite normal forms: pivot columns strictly
    increase, pivots are positive, and entries above a pivot are reduced into
    [0, pivot).  For the full-rank square case this is upper triangular with
    the pivot of row i in column i, and the HNF is unique per lattice.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

Matrix = tuple[tuple[int, ...], ...]
Vector = tuple[int, ...]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, u, v) with g = gcd(a, b) >= 0 and u*a + v*b == g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def identity(k: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k))


def diagonal(values) -> Matrix:
    values = list(values)
    k = len(values)
    return tuple(tuple(values[i] if i == j else 0 for j in range(k)) for i in range(k))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols = len(b[0]) if b else 0
    return tuple(
        tuple(sum(row[i] * b[i][j] for i in range(len(row))) for j in range(cols))
        for row in a
    )


def vec_mat(x, b: Matrix) -> Vector:
    cols = len(b[0]) if b else 0
    return tuple(sum(x[i] * b[i][j] for i in range(len(x))) for j in range(cols))


def hnf(rows, width: int) -> Matrix:
    """Row-style Hermite normal form of the lattice spanned by `rows`.

    Returns only the nonzero rows (one per pivot).  Width must be passed
    explicitly so the empty-row-list case is well defined.
    """
    work = [list(r) for r in rows if any(r)]
    m = len(work)
    r = 0
    for c in range(width):
        piv = None
        for i in range(r, m):
            if work[i][c]:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        for i in range(r + 1, m):
            if work[i][c] == 0:
                continue
            a, b = work[r][c], work[i][c]
            g, u, v = xgcd(a, b)
            aq, bq = a // g, b // g
            row_r = [u * x + v * y for x, y in zip(work[r], work[i])]
            row_i = [aq * y - bq * x for x, y in zip(work[r], work[i])]
            work[r], work[i] = row_r, row_i
        if work[r][c] < 0:
            work[r] = [-x for x in work[r]]
        for j in range(r):
            q = work[j][c] // work[r][c]
            if q:
                work[j] = [x - q * y for x, y in zip(work[j], work[r])]
        r += 1
        if r == m:
            break
    return tuple(tuple(row) for row in work[:r])


def hnf_square(rows, k: int) -> Matrix:
    """HNF of a full-rank lattice in Z^k; raises if the span has rank < k."""
    h = hnf(rows, k)
    if len(h) != k:
        raise ValueError(f"lattice has rank {len(h)}, expected {k}")
    return h


def rowspan_reduce(h: Matrix, x) -> tuple[list[int], list[int]]:
    """Reduce x against echelon rows h; return (coefficients, remainder)."""
    x = list(x)
    coeffs = []
    for row in h:
        pc = next(i for i, v in enumerate(row) if v)
        q = x[pc] // row[pc]
        if q:
            x = [a - q * b for a, b in zip(x, row)]
        coeffs.append(q)
    return coeffs, x


def in_rowspan(h: Matrix, x) -> bool:
    _, rem = rowspan_reduce(h, x)
    return not any(rem)


def rowspan_coords(h: Matrix, x):
    """Integer coordinates of x w.r.t. the rows of h, or None if x is outside."""
    coeffs, rem = rowspan_reduce(h, x)
    return None if any(rem) else coeffs


def multiple_order(h: Matrix, v) -> int:
    """Least c >= 1 with c*v inside the full-rank lattice rowspan(h).

    h must be square full-rank HNF (upper triangular).  The answer is the lcm
    of the denominators of the rational solution y of y @ h = v.
    """
    k = len(h)
    x = [Fraction(e) for e in v]
    denom = 1
    for i in range(k):
        q = x[i] / h[i][i]
        denom = lcm(denom, q.denominator)
        if q:
            x = [a - q * b for a, b in zip(x, h[i])]
    if any(x):
        raise ValueError("vector outside the rational row space")
    return denom


def lattice_intersect(h1: Matrix, h2: Matrix, k: int) -> Matrix:
    """Basis of rowspan(h1) ∩ rowspan(h2), both full-rank lattices in Z^k.

    Uses the doubled-width trick: rows (a | a) for a in h1 and (b | 0) for b
    in h2 span pairs (u@h1 + v@h2, u@h1); the rows whose left half vanishes
    carry exactly the intersection in their right half.
    """
    rows = [tuple(r) + tuple(r) for r in h1] + [tuple(r) + (0,) * k for r in h2]
    big = hnf(rows, 2 * k)
    out = [row[k:] for row in big if not any(row[:k])]
    return hnf_square(out, k)


def det(mat: Matrix) -> int:
    """Exact determinant via fraction-free Bareiss elimination."""
    n = len(mat)
    if n == 0:
        return 1
    a = [list(r) for r in mat]
    sign = 1
    prev = 1
    for i in range(n - 1):
        if a[i][i] == 0:
            piv = next((r for r in range(i + 1, n) if a[r][i]), None)
            if piv is None:
                return 0
            a[i], a[piv] = a[piv], a[i]
            sign = -sign
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) // prev
            a[r][i] = 0
        prev = a[i][i]
    return sign * a[-1][-1]


def smith_normal_form(mat: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Return (U, S, V) with U @ mat @ V == S, U and V unimodular.

    S is diagonal with nonnegative entries and s_i | s_{i+1}.
    """
    m = len(mat)
    k = len(mat[0]) if m else 0
    s = [list(r) for r in mat]
    u = [list(r) for r in identity(m)]
    v = [list(r) for r in identity(k)]
    t = 0
    while True:
        pos = None
        best = None
        for i in range(t, m):
            for j in range(t, k):
                a = abs(s[i][j])
                if a and (best is None or a < best):
                    best, pos = a, (i, j)
        if pos is None:
            break
        i0, j0 = pos
        if i0 != t:
            s[t], s[i0] = s[i0], s[t]
            u[t], u[i0] = u[i0], u[t]
        if j0 != t:
            for row in s:
                row[t], row[j0] = row[j0], row[t]
            for row in v:
                row[t], row[j0] = row[j0], row[t]
        dirty = False
        for i in range(t + 1, m):
            if s[i][t]:
                q = s[i][t] // s[t][t]
                s[i] = [a - q * b for a, b in zip(s[i], s[t])]
                u[i] = [a - q * b for a, b in zip(u[i], u[t])]
                if s[i][t]:
                    dirty = True
        for j in range(t + 1, k):
            if s[t][j]:
                q = s[t][j] // s[t][t]
                for row in s:
                    row[j] -= q * row[t]
                for row in v:
                    row[j] -= q * row[t]
                if s[t][j]:
                    dirty = True
        if dirty:
            continue
        p = s[t][t]
        offender = None
        for i in range(t + 1, m):
            if any(s[i][j] % p for j in range(t + 1, k)):
                offender = i
                break
        if offender is not None:
            s[t] = [a + b for a, b in zip(s[t], s[offender])]
            u[t] = [a + b for a, b in zip(u[t], u[offender])]
            continue
        if p < 0:
            s[t] = [-a for a in s[t]]
            u[t] = [-a for a in u[t]]
        t += 1
        if t >= min(m, k):
            break
    return (
        tuple(tuple(r) for r in u),
        tuple(tuple(r) for r in s),
        tuple(tuple(r) for r in v),
    )


def unimodular_inverse(mat: Matrix) -> Matrix:
    """Inverse of a unimodular integer matrix (asserted integral)."""
    k = len(mat)
    a = [[Fraction(mat[i][j]) for j in range(k)] + [Fraction(int(i == j)) for j in range(k)]
         for i in range(k)]
    for col in range(k):
        piv = next(r for r in range(col, k) if a[r][col])
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(k):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    inv = []
    for i in range(k):
        row = []
        for j in range(k, 2 * k):
            val = a[i][j]
            if val.denominator != 1:
                raise ValueError("matrix is not unimodular")
            row.append(int(val))
        inv.append(tuple(row))
    return tuple(inv)

"""Dense exact linear algebra over a FieldContext.

Matrices are lists of row lists.  Everything is plain Gaussian elimination
with first-nonzero pivoting, which is deterministic and exact over Q and
GF(p).  Sizes stay at desk scale throughout the package.
"""

from __future__ import annotations


def _copy(rows):
    return [list(r) for r in rows]


def rref(rows, K):
    """Reduced row echelon form.  Returns (rows, pivot_columns)."""
    m = _copy(rows)
    if not m:
        return m, []
    nrows, ncols = len(m), len(m[0])
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if not K.is_zero(m[i][col]):
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = K.invert(m[r][col])
        m[r] = [K.mul(inv, x) for x in m[r]]
        for i in range(nrows):
            if i != r and not K.is_zero(m[i][col]):
                f = m[i][col]
                m[i] = [K.sub(x, K.mul(f, y)) for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(rows, K) -> int:
    return len(rref(rows, K)[1])


def det(rows, K):
    """Determinant of a square matrix; det of the 0x0 matrix is 1."""
    n = len(rows)
    if n == 0:
        return K.one()
    m = _copy(rows)
    sign = 1
    for col in range(n):
        pivot = None
        for i in range(col, n):
            if not K.is_zero(m[i][col]):
                pivot = i
                break
        if pivot is None:
            return K.zero()
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            sign = -sign
        for i in range(col + 1, n):
            if not K.is_zero(m[i][col]):
                f = K.div(m[i][col], m[col][col])
                m[i] = [K.sub(x, K.mul(f, y)) for x, y in zip(m[i], m[col])]
    d = K.one()
    for i in range(n):
        d = K.mul(d, m[i][i])
    return d if sign == 1 else K.neg(d)


def solve(rows, rhs, K):
    """One solution of rows * x = rhs (free variables set to 0), or None."""
    if not rows:
        return [] if all(K.is_zero(b) for b in rhs) else None
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, K)
    if ncols in pivots:
        return None
    x = [K.zero()] * ncols
    for i, col in enumerate(pivots):
        x[col] = red[i][ncols]
    return x


def kernel_basis(rows, K):
    """Deterministic basis of the null space of the matrix."""
    if not rows:
        return []
    ncols = len(rows[0])
    red, pivots = rref(rows, K)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [K.zero()] * ncols
        vec[free] = K.one()
        for i, col in enumerate(pivots):
            vec[col] = K.neg(red[i][free])
        basis.append(vec)
    return basis

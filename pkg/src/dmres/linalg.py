"""Exact dense linear algebra over the coefficient fields.

Matrices are lists of lists of field elements (Fraction over Q, ints in
[0, p) over a prime field).  Everything here is plain Gaussian elimination;
it is the computational core of the degreewise oracle, which by design
never touches Groebner bases.
"""

from __future__ import annotations


def rref(field, rows):
    """Reduced row echelon form.

    Returns (new_rows, pivot_cols).  The input is not modified.
    """
    if not rows:
        return [], []
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if not field.is_zero(m[i][c]):
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = field.inv(m[r][c])
        m[r] = [field.mul(inv, v) for v in m[r]]
        for i in range(nrows):
            if i != r and not field.is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [field.sub(a, field.mul(f, b)) for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(field, rows):
    return len(rref(field, rows)[1])


def nullspace(field, rows, ncols):
    """Basis of the right nullspace of the matrix given by `rows`."""
    red, pivots = rref(field, rows)
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free_cols:
        vec = [field.zero() for _ in range(ncols)]
        vec[fc] = field.one()
        for i, pc in enumerate(pivots):
            vec[pc] = field.neg(red[i][fc])
        basis.append(vec)
    return basis


def solve(field, rows, rhs):
    """One solution x of rows * x = rhs, or None if inconsistent.

    `rhs` may be a single column (list) or a list of columns; the result
    matches the input shape.
    """
    single = rhs and not isinstance(rhs[0], list)
    cols = [rhs] if single else rhs
    if not rows:
        # zero map: solvable iff every rhs is zero
        for col in cols:
            if any(not field.is_zero(v) for v in col):
                return None
        return [] if single else [[] for _ in cols]
    ncols = len(rows[0])
    aug = [list(r) + [col[i] for col in cols] for i, r in enumerate(rows)]
    red, pivots = rref(field, aug)
    for i in range(len(red)):
        if all(field.is_zero(v) for v in red[i][:ncols]) and any(
            not field.is_zero(v) for v in red[i][ncols:]
        ):
            return None
    sols = []
    for k in range(len(cols)):
        x = [field.zero() for _ in range(ncols)]
        for i, pc in enumerate(pivots):
            if pc < ncols:
                x[pc] = red[i][ncols + k]
        sols.append(x)
    return sols[0] if single else sols


def identity(field, n):
    return [
        [field.one() if i == j else field.zero() for j in range(n)] for i in range(n)
    ]

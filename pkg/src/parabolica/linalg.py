"""Exact linear algebra over the rationals.

Everything here is deterministic: elimination always picks the first row
with a nonzero entry in the current column, so echelon forms, kernel bases
and solution vectors are reproducible run to run.  Matrices are plain lists
of lists of :class:`~fractions.Fraction` (integers are accepted and coerced
on the fly by Fraction arithmetic).
"""

from __future__ import annotations

from fractions import Fraction

Matrix = list[list[Fraction]]
Vector = list[Fraction]


def zeros(rows: int, cols: int) -> Matrix:
    return [[Fraction(0)] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a and b and len(a[0]) != len(b):
        raise ValueError("shape mismatch in mat_mul")
    bt = list(zip(*b)) if b else []
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a: Matrix, v: Vector) -> Vector:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a: Matrix, c) -> Matrix:
    return [[c * x for x in row] for row in a]


def mat_transpose(a: Matrix) -> Matrix:
    return [list(row) for row in zip(*a)] if a else []


def is_zero_matrix(a: Matrix) -> bool:
    return all(x == 0 for row in a for x in row)


def _integer_rows(a: Matrix) -> list[list[int]]:
    # Row-wise denominator clearing; preserves row space and kernel.
    out = []
    for row in a:
        row = [Fraction(x) for x in row]
        lcm = 1
        for x in row:
            d = x.denominator
            g = _gcd(lcm, d)
            lcm = lcm // g * d
        out.append([int(x * lcm) for x in row])
    return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def row_echelon(a: Matrix) -> tuple[list[list[int]], list[int]]:
    """Fraction-free (Bareiss) row echelon form.

    Returns the echelon matrix with integer entries together with the list
    of pivot column indices.  Pivoting is first-nonzero in column order.
    """
    m = _integer_rows(a)
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = None
        for i in range(r, nrows):
            if m[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            m[r], m[pr] = m[pr], m[r]
        piv = m[r][c]
        for i in range(r + 1, nrows):
            if m[i][c] == 0 and prev == 1:
                continue
            for j in range(c + 1, ncols):
                m[i][j] = (piv * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        pivots.append(c)
        prev = piv
        r += 1
    return m, pivots


def rank(a: Matrix) -> int:
    return len(row_echelon(a)[1]) if a else 0


def rref(a: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form over Fraction, with pivot columns."""
    m = [[Fraction(x) for x in row] for row in a]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = None
        for i in range(r, nrows):
            if m[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = m[r][c]
        m[r] = [x / inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def nullspace(a: Matrix) -> list[Vector]:
    """Basis of the right kernel, one vector per free column, in column order."""
    if not a:
        return []
    ncols = len(a[0])
    red, pivots = rref(a)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def solve(a: Matrix, b: Vector) -> Vector | None:
    """One exact solution of a x = b, or None if inconsistent.

    Free variables are set to zero, so the result is deterministic.
    """
    if not a:
        return None if any(x != 0 for x in b) else []
    aug = [list(row) + [bv] for row, bv in zip(a, b)]
    red, pivots = rref(aug)
    ncols = len(a[0])
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][ncols]
    return x


def solve_matrix(a: Matrix, b: Matrix) -> Matrix | None:
    """Solve a X = b columnwise; None if any column is inconsistent."""
    if not a:
        return [] if is_zero_matrix(b) else None
    ncols = len(a[0])
    nrhs = len(b[0]) if b else 0
    aug = [list(row) + list(rb) for row, rb in zip(a, b)]
    red, pivots = rref(aug)
    if any(p >= ncols for p in pivots):
        return None
    x = zeros(ncols, nrhs)
    for r, pc in enumerate(pivots):
        for j in range(nrhs):
            x[pc][j] = red[r][ncols + j]
    return x


def columns(a: Matrix, idx: list[int]) -> Matrix:
    return [[row[j] for j in idx] for row in a]


def hstack(*mats: Matrix) -> Matrix:
    rows = len(mats[0])
    for m in mats:
        if len(m) != rows:
            raise ValueError("row count mismatch in hstack")
    return [sum((m[i] for m in mats), []) for i in range(rows)]


def from_columns(cols: list[Vector]) -> Matrix:
    if not cols:
        return []
    return [list(row) for row in zip(*cols)]


def column_space_pivots(a: Matrix) -> list[int]:
    """Indices of a deterministic subset of columns spanning the column space."""
    return rref(a)[1]


def in_span(vectors: list[Vector], v: Vector) -> bool:
    if not vectors:
        return all(x == 0 for x in v)
    m = from_columns(vectors)
    return solve(m, list(v)) is not None


def spans_equal(u: list[Vector], w: list[Vector]) -> bool:
    mu = from_columns(u) if u else []
    mw = from_columns(w) if w else []
    ru = rank(mu) if u else 0
    rw = rank(mw) if w else 0
    if ru != rw:
        return False
    both = from_columns(list(u) + list(w)) if (u or w) else []
    return (rank(both) if both else 0) == ru

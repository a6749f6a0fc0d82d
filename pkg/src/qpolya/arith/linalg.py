"""Exact linear algebra over Q, Q(zeta_s) and Q[z]."""

from __future__ import annotations

from fractions import Fraction

from .poly import UniPoly, _fdiv


def _rref(matrix, ncols):
    """Reduced row echelon form in place; returns pivot columns."""
    rows = [list(r) for r in matrix]
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = _fdiv(1, prow[c])
        for k in range(c, ncols):
            if prow[k] != 0:
                prow[k] = prow[k] * inv
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c]
            if f == 0:
                continue
            row = rows[i]
            for k in range(c, ncols):
                if prow[k] != 0:
                    row[k] = row[k] - f * prow[k]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def nullspace(matrix, ncols: int | None = None) -> list[list]:
    """Basis of the right kernel, one vector per free column.

    The vector for free column ``f`` has a 1 at ``f``, zeros at every other
    free column, and is supported on columns ``<= f``; so the basis vector
    of the smallest free column has the smallest last-nonzero index of any
    kernel element.
    """
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    if not matrix:
        return [[1 if k == f else 0 for k in range(ncols)] for f in range(ncols)]
    rows, pivots = _rref(matrix, ncols)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [0] * ncols
        v[f] = 1
        for row, pc in zip(rows, pivots):
            if pc < f and row[f] != 0:
                v[pc] = -row[f]
        basis.append(v)
    return basis


def rank(matrix, ncols: int | None = None) -> int:
    if not matrix:
        return 0
    if ncols is None:
        ncols = len(matrix[0])
    return len(_rref(matrix, ncols)[1])


def mat_vec(matrix, v):
    out = []
    for row in matrix:
        acc = 0
        for a, b in zip(row, v):
            if a != 0 and b != 0:
                acc = acc + a * b
        out.append(acc)
    return out


def modular_rank(matrix, p: int) -> int:
    """Rank of an integer matrix over GF(p)."""
    rows = [[x % p for x in r] for r in matrix]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        prow = [(x * inv) % p for x in rows[r]]
        rows[r] = prow
        for i in range(r + 1, len(rows)):
            f = rows[i][c]
            if f:
                row = rows[i]
                for k in range(c, ncols):
                    if prow[k]:
                        row[k] = (row[k] - f * prow[k]) % p
        r += 1
        if r == len(rows):
            break
    return r


def poly_det(matrix) -> UniPoly:
    """Determinant of a square matrix of UniPoly by Bareiss elimination."""
    n = len(matrix)
    if n == 0:
        return UniPoly([1])
    m = [[e if isinstance(e, UniPoly) else UniPoly([e]) for e in row] for row in matrix]
    if any(len(row) != n for row in m):
        raise ValueError("poly_det needs a square matrix")
    sign = 1
    prev = UniPoly([1])
    for k in range(n - 1):
        if m[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not m[i][k].is_zero()), None)
            if swap is None:
                return UniPoly()
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pkk = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * pkk - m[i][k] * m[k][j]
                m[i][j] = num.exact_div(prev) if prev != 1 else num
            m[i][k] = UniPoly()
        prev = pkk
    det = m[n - 1][n - 1]
    det = det if sign == 1 else -det
    return det.map(lambda c: c.numerator if isinstance(c, Fraction) and c.denominator == 1 else c)

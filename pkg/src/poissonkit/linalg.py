"""Exact linear algebra over Gaussian rationals.

Rows are sparse mappings column -> scalar; elimination is plain
Gauss-Jordan over the field with a deterministic pivot rule (first row
with a nonzero entry in the leftmost open column), so reduced forms and
nullspace bases are reproducible.
"""

from __future__ import annotations

from .scalars import GaussRational

_ZERO = GaussRational.zero()
_ONE = GaussRational.one()


def _clean(row: dict) -> dict:
    return {c: v for c, v in row.items() if not v.is_zero()}


def rref(rows: list, ncols: int) -> tuple[list, list]:
    """Reduced row echelon form; returns (rows, pivot column list)."""
    work = [_clean(dict(r)) for r in rows]
    work = [r for r in work if r]
    pivots = []
    done = []
    col = 0
    while col < ncols and work:
        hit = None
        for idx, row in enumerate(work):
            if col in row:
                hit = idx
                break
        if hit is None:
            col += 1
            continue
        pivot_row = work.pop(hit)
        inv = _ONE / pivot_row[col]
        pivot_row = {c: v * inv for c, v in pivot_row.items()}
        for target in (work, done):
            for idx, row in enumerate(target):
                if col in row:
                    factor = row[col]
                    new = dict(row)
                    for c, v in pivot_row.items():
                        acc = new.get(c, _ZERO) - factor * v
                        if acc.is_zero():
                            new.pop(c, None)
                        else:
                            new[c] = acc
                    target[idx] = new
        work = [r for r in work if r]
        done.append(pivot_row)
        pivots.append(col)
        col += 1
    return done, pivots


def rank(rows: list, ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: list, ncols: int) -> list:
    """Basis of the right kernel as dense GaussRational vectors.

    One basis vector per free column, with a 1 in the free slot; the
    deterministic rref makes the basis canonical.
    """
    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        vec = [_ZERO] * ncols
        vec[f] = _ONE
        for row, p in zip(reduced, pivots):
            if f in row:
                vec[p] = -row[f]
        basis.append(vec)
    return basis


def dense_rank(matrix: list) -> int:
    """Rank of a dense matrix given as a list of GaussRational rows."""
    if not matrix:
        return 0
    ncols = len(matrix[0])
    rows = [{j: v for j, v in enumerate(r) if not v.is_zero()} for r in matrix]
    return rank(rows, ncols)


def determinant(matrix: list) -> GaussRational:
    """Exact determinant by elimination with row swaps."""
    n = len(matrix)
    work = [list(row) for row in matrix]
    det = _ONE
    for col in range(n):
        hit = None
        for idx in range(col, n):
            if not work[idx][col].is_zero():
                hit = idx
                break
        if hit is None:
            return _ZERO
        if hit != col:
            work[col], work[hit] = work[hit], work[col]
            det = -det
        pivot = work[col][col]
        det = det * pivot
        inv = _ONE / pivot
        for idx in range(col + 1, n):
            factor = work[idx][col] * inv
            if factor.is_zero():
                continue
            for j in range(col, n):
                work[idx][j] = work[idx][j] - factor * work[col][j]
    return det

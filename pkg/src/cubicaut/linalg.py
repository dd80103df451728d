"""Dense exact linear algebra over the cyclotomic tower.

Matrices are lists of row lists of Cyclotomic scalars; all routines return
fresh lists and never mutate their arguments.
"""

from __future__ import annotations

from .field import Cyclotomic, ZERO, ONE, coerce_scalar

__all__ = [
    "mat",
    "identity",
    "matmul",
    "matvec",
    "transpose",
    "rref",
    "rank",
    "nullspace",
    "solve",
    "inverse",
    "det",
]


def mat(rows) -> list[list[Cyclotomic]]:
    return [[coerce_scalar(x) for x in row] for row in rows]


def identity(n: int) -> list[list[Cyclotomic]]:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def matmul(a, b) -> list[list[Cyclotomic]]:
    bt = list(zip(*b))
    out = []
    for row in a:
        out.append([_dot(row, col) for col in bt])
    return out


def _dot(u, v) -> Cyclotomic:
    acc = ZERO
    for x, y in zip(u, v):
        if x and y:
            acc = acc + x * y
    return acc


def matvec(a, v) -> list[Cyclotomic]:
    return [_dot(row, v) for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)]


def rref(a):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    rows = [list(r) for r in a]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][col].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    rows = [row for row in rows if any(row)]
    return rows, pivots


def rank(a) -> int:
    return len(rref(a)[0])


def nullspace(a):
    """Basis of the right kernel {v : a v = 0}, as a list of vectors."""
    if not a:
        return []
    ncols = len(a[0])
    rows, pivots = rref(a)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [ZERO] * ncols
        v[fc] = ONE
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][fc]
        basis.append(v)
    return basis


def solve(a, b):
    """One solution of a x = b, or None if inconsistent."""
    n = len(a)
    aug = [list(row) + [bv] for row, bv in zip(a, b)]
    rows, pivots = _rref_aug(aug, len(a[0]))
    for row in rows:
        if not any(row[:-1]) and row[-1]:
            return None
    x = [ZERO] * len(a[0])
    for i, pc in enumerate(pivots):
        x[pc] = rows[i][-1]
    return x


def _rref_aug(rows, ncols):
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][col].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def inverse(a):
    n = len(a)
    aug = [list(row) + ident_row for row, ident_row in zip(a, identity(n))]
    rows, pivots = _rref_aug(aug, n)
    if len(pivots) != n:
        raise ValueError("matrix is singular")
    return [row[n:] for row in rows]


def det(a) -> Cyclotomic:
    rows = [list(r) for r in a]
    n = len(rows)
    sign = 1
    acc = ONE
    for col in range(n):
        piv = next((i for i in range(col, n) if rows[i][col]), None)
        if piv is None:
            return ZERO
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            sign = -sign
        p = rows[col][col]
        acc = acc * p
        inv = p.inverse()
        for i in range(col + 1, n):
            if rows[i][col]:
                f = rows[i][col] * inv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[col])]
    return acc if sign == 1 else -acc

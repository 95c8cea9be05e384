"""Small exact linear algebra over the integers and rationals.

Matrices are plain sequences of rows.  Nothing here touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = Sequence[Sequence[int | Fraction]]


def det(m: Matrix) -> int | Fraction:
    """Determinant by fraction-free Bareiss elimination.

    Integer input gives an integer result; rational input is handled by the
    same recurrence since every division is exact in the field.
    """
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev: int | Fraction = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                if isinstance(num, int) and isinstance(prev, int):
                    a[i][j] = num // prev
                else:
                    a[i][j] = Fraction(num) / prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def inverse(m: Matrix) -> list[list[Fraction]]:
    """Gauss-Jordan inverse over Q; raises ZeroDivisionError if singular."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def matmul(a: Matrix, b: Matrix) -> list[list]:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def vecmat(v: Sequence, m: Matrix) -> tuple:
    """Row vector times matrix."""
    if not m:
        return ()
    return tuple(sum(x * row[j] for x, row in zip(v, m)) for j in range(len(m[0])))


def rref(rows: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (nonzero rows, pivot columns)."""
    a = [[Fraction(x) for x in row] for row in rows]
    if not a:
        return [], []
    ncols = len(a[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        a[r] = [x / p for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def rank(rows: Matrix) -> int:
    return len(rref(rows)[1])


def hermite_basis(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row-style Hermite normal form basis of the lattice spanned by integer rows.

    The result is canonical for the lattice: positive pivots, entries above
    each pivot reduced into [0, pivot).
    """
    a = [list(r) for r in rows if any(r)]
    if not a:
        return []
    ncols = len(a[0])
    out: list[list[int]] = []
    for col in range(ncols):
        if not a:
            break
        while True:
            nz = [r for r in a if r[col] != 0]
            if len(nz) <= 1:
                break
            p = min(nz, key=lambda r: abs(r[col]))
            reduced = [p]
            for r in a:
                if r is p:
                    continue
                if r[col] != 0:
                    q = r[col] // p[col]
                    r = [x - q * y for x, y in zip(r, p)]
                if any(r):
                    reduced.append(r)
            a = reduced
        nz = [r for r in a if r[col] != 0]
        if nz:
            p = nz[0] if nz[0][col] > 0 else [-x for x in nz[0]]
            out.append(p)
            a = [r for r in a if r[col] == 0]
    for i, row in enumerate(out):
        c = next(j for j, x in enumerate(row) if x)
        for k in range(i):
            q = out[k][c] // row[c]
            if q:
                out[k] = [x - q * y for x, y in zip(out[k], row)]
    return out

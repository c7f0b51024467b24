"""Small exact linear algebra over the rationals (Fraction entries)."""

from __future__ import annotations

from fractions import Fraction


def rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns; the input is not modified."""
    m = [[Fraction(x) for x in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(rows: list[list[Fraction]]) -> int:
    return len(rref(rows)[1]) if rows else 0


def kernel(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """A basis of {x : M x = 0} for the matrix given by rows."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -red[r][fc]
        basis.append(vec)
    return basis


def left_kernel(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """A basis of {x : x M = 0} for the matrix given by rows."""
    nrows = len(rows)
    if nrows == 0:
        return []
    transposed = [list(col) for col in zip(*rows)]
    return kernel(transposed, nrows)


def mat_mul_rows(a: list[list[Fraction]], b: list[list[Fraction]]) -> list[list[Fraction]]:
    if not a:
        return []
    nb = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [Fraction(0)] * nb
        for k, x in enumerate(row):
            if x:
                brow = b[k]
                for j in range(nb):
                    if brow[j]:
                        acc[j] += x * brow[j]
        out.append(acc)
    return out

"""Gaussian elimination over ``F_q`` (entries are table-encoded ints)."""

from __future__ import annotations

from typing import Sequence

Matrix = list[list[int]]


def rref(bf, rows: Sequence[Sequence[int]]) -> tuple[Matrix, list[int]]:
    """Reduced row-echelon form; returns ``(nonzero rows, pivot columns)``."""
    M = [list(r) for r in rows]
    if not M:
        return [], []
    ncols = len(M[0])
    add, mul, neg, inv = bf.add, bf.mul, bf.neg, bf.inv
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][col]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        s = mul[inv[M[r][col]]]
        M[r] = [s[x] for x in M[r]]
        for i in range(len(M)):
            c = M[i][col]
            if i != r and c:
                nc = mul[neg[c]]
                M[i] = [add[x][nc[y]] for x, y in zip(M[i], M[r])]
        pivots.append(col)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(bf, rows: Sequence[Sequence[int]]) -> int:
    return len(rref(bf, rows)[1])


def nullspace(bf, rows: Sequence[Sequence[int]], ncols: int) -> Matrix:
    """Basis of ``{v : rows @ v == 0}``."""
    R, pivots = rref(bf, rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, pc in zip(R, pivots):
            v[pc] = bf.neg[row[f]]
        basis.append(v)
    return basis


def solve_left(bf, G: Sequence[Sequence[int]], c: Sequence[int]) -> list[int] | None:
    """Find b with ``sum_j b[j] * G[j] == c``, or None if c is not in the row space."""
    k = len(G)
    n = len(c)
    # columns of G become equations; augment with c
    aug = [[G[j][i] for j in range(k)] + [c[i]] for i in range(n)]
    R, pivots = rref(bf, aug)
    if k in pivots:
        return None
    b = [0] * k
    for row, pc in zip(R, pivots):
        b[pc] = row[k]
    return b


def combine(bf, coeffs: Sequence[int], rows: Sequence[Sequence[int]], ncols: int) -> list[int]:
    """``sum_j coeffs[j] * rows[j]``."""
    add, mul = bf.add, bf.mul
    out = [0] * ncols
    for a, row in zip(coeffs, rows):
        if a:
            s = mul[a]
            out = [add[x][s[y]] for x, y in zip(out, row)]
    return out

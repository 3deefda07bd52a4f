"""Exact Gaussian elimination over a field from ``fields``.

Vectors are columns; subspaces are returned as matrices whose columns
form a basis.
"""

from __future__ import annotations

import numpy as np


def rref(F, A):
    """Reduced row echelon form and pivot columns."""
    R = F.reduce(np.array(A, dtype=F.zeros((0,)).dtype, copy=True))
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c] != 0)[0]
        if not len(nz):
            continue
        i = r + int(nz[0])
        if i != r:
            R[[r, i]] = R[[i, r]]
        R[r] = F.reduce(R[r] * F.inv(R[r, c]))
        for i in np.nonzero(R[:, c] != 0)[0]:
            if i != r:
                R[i] = F.reduce(R[i] - R[i, c] * R[r])
        pivots.append(c)
        r += 1
    return R, pivots


def rank(F, A):
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(rref(F, A)[1])


def nullspace(F, A):
    """Basis (columns) of {x : A x = 0}."""
    A = np.asarray(A)
    n = A.shape[1]
    if A.shape[0] == 0:
        return F.eye(n)
    R, pivots = rref(F, A)
    free = [c for c in range(n) if c not in pivots]
    N = F.zeros((n, len(free)))
    for j, f in enumerate(free):
        N[f, j] = 1
        for i, p in enumerate(pivots):
            N[p, j] = F.reduce(-R[i, f])
    return N


def column_space(F, A):
    """Basis of the column space, taken from the pivot columns of A."""
    A = np.asarray(A)
    if A.size == 0:
        return F.zeros((A.shape[0], 0))
    _, pivots = rref(F, A)
    return A[:, pivots]


def solve(F, A, B):
    """X with A X = B, or None when inconsistent (any solution when not unique)."""
    A, B = np.asarray(A), np.asarray(B)
    vec = B.ndim == 1
    if vec:
        B = B.reshape(-1, 1)
    n = A.shape[1]
    R, pivots = rref(F, np.hstack([A, B]))
    if any(p >= n for p in pivots):
        return None
    X = F.zeros((n, B.shape[1]))
    for i, p in enumerate(pivots):
        X[p] = R[i, n:]
    return X[:, 0] if vec else X


def inverse(F, A):
    A = np.asarray(A)
    X = solve(F, A, F.eye(A.shape[0]))
    if X is None or rank(F, A) < A.shape[0]:
        raise ZeroDivisionError("matrix is singular")
    return X


def left_annihilator(F, B):
    """Rows spanning {y : y B = 0}."""
    return nullspace(F, np.asarray(B).T).T


def equal(A, B):
    return A.shape == B.shape and bool(np.all(A == B))

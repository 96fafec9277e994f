"""Exact dense linear algebra over a small finite field.

Matrices are 2-D numpy uint8 arrays of field elements; every function
takes the Field as its first argument.  This is the ground-truth engine
behind dimensions, duals and hulls: everything is reduced row echelon
form, kernels and row-space tests.
"""

from __future__ import annotations

import numpy as np


def as_matrix(rows, width=None):
    """Coerce a row list to a uint8 matrix, fixing the width when empty."""
    m = np.asarray(rows, dtype=np.uint8)
    if m.ndim == 2:
        return m
    if m.size == 0:
        return m.reshape(0, width if width is not None else 0)
    raise ValueError("expected a 2-D matrix")


def rref(field, mat):
    """Reduced row echelon form.

    Returns (R, rank, pivots): R is row-equivalent to `mat` with the same
    shape, its first `rank` rows are the nonzero rows, and `pivots` lists
    the pivot column of each of those rows.
    """
    R = as_matrix(mat).copy()
    nrows, ncols = R.shape
    pivots = []
    r = 0
    for col in range(ncols):
        hit = None
        for i in range(r, nrows):
            if R[i, col]:
                hit = i
                break
        if hit is None:
            continue
        if hit != r:
            R[[r, hit]] = R[[hit, r]]
        R[r] = field.mul(int(field.inv(R[r, col])), R[r])
        for i in range(nrows):
            if i != r and R[i, col]:
                R[i] = field.sub(R[i], field.mul(int(R[i, col]), R[r]))
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return R, r, pivots


def rank(field, mat):
    return rref(field, mat)[1]


def row_basis(field, mat):
    """Canonical basis of the row space: the nonzero rows of the rref."""
    R, r, _ = rref(field, mat)
    return R[:r].copy()


def kernel(field, mat):
    """Basis of the right null space {v : mat @ v = 0}, one row per vector."""
    M = as_matrix(mat)
    ncols = M.shape[1]
    R, r, pivots = rref(field, M)
    free = [c for c in range(ncols) if c not in pivots]
    out = np.zeros((len(free), ncols), dtype=np.uint8)
    for row, fc in enumerate(free):
        out[row, fc] = 1
        for i, pc in enumerate(pivots):
            out[row, pc] = field.neg(int(R[i, fc]))
    return out


def reduce_vector(field, basis, pivots, vec):
    """Residue of `vec` after elimination against rref basis rows."""
    v = np.asarray(vec, dtype=np.uint8).copy()
    for i, pc in enumerate(pivots):
        if v[pc]:
            v = field.sub(v, field.mul(int(v[pc]), basis[i]))
    return v


def in_rowspace(field, mat, vec):
    """Membership of a vector in the row space of `mat`."""
    R, r, pivots = rref(field, mat)
    return not reduce_vector(field, R[:r], pivots, vec).any()


def rowspace_equal(field, a, b):
    """True iff the two matrices span the same row space."""
    A = as_matrix(a)
    B = as_matrix(b, width=A.shape[1])
    if A.shape[1] != B.shape[1]:
        raise ValueError(f"column counts differ: {A.shape[1]} vs {B.shape[1]}")
    ra = row_basis(field, A)
    rb = row_basis(field, B)
    return ra.shape == rb.shape and bool(np.array_equal(ra, rb))


def intersect(field, a, b):
    """Basis of rowspace(a) ∩ rowspace(b), via orthogonal complements:
    U ∩ W = (U⊥ + W⊥)⊥ under the standard dot product."""
    A = as_matrix(a)
    B = as_matrix(b, width=A.shape[1])
    if A.shape[1] != B.shape[1]:
        raise ValueError(f"column counts differ: {A.shape[1]} vs {B.shape[1]}")
    ka = kernel(field, A)
    kb = kernel(field, B)
    stacked = np.vstack([ka, kb])
    return row_basis(field, kernel(field, stacked))


def matmul(field, a, b):
    """Matrix product over the field."""
    A = as_matrix(a)
    B = as_matrix(b)
    if A.shape[1] != B.shape[0]:
        raise ValueError("inner dimensions differ")
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.uint8)
    for k in range(A.shape[1]):
        out = field.add(out, field.mul(A[:, k : k + 1], B[k : k + 1, :]))
    return out


def solve(field, mat, rhs):
    """One solution x of mat @ x = rhs, or None when inconsistent."""
    M = as_matrix(mat)
    v = np.asarray(rhs, dtype=np.uint8)
    aug = np.hstack([M, v.reshape(-1, 1)])
    R, r, pivots = rref(field, aug)
    if M.shape[1] in pivots:
        return None
    x = np.zeros(M.shape[1], dtype=np.uint8)
    for i, pc in enumerate(pivots):
        x[pc] = R[i, -1]
    return x


def determinant(field, mat):
    """Determinant of a square matrix by fraction-free elimination."""
    M = as_matrix(mat).copy()
    n = M.shape[0]
    if M.shape != (n, n):
        raise ValueError("determinant of a non-square matrix")
    det = 1
    for col in range(n):
        hit = None
        for i in range(col, n):
            if M[i, col]:
                hit = i
                break
        if hit is None:
            return 0
        if hit != col:
            M[[col, hit]] = M[[hit, col]]
            det = int(field.neg(det))
        det = int(field.mul(det, int(M[col, col])))
        inv = int(field.inv(int(M[col, col])))
        for i in range(col + 1, n):
            if M[i, col]:
                factor = int(field.mul(inv, int(M[i, col])))
                M[i] = field.sub(M[i], field.mul(factor, M[col]))
    return det

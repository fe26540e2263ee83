"""Smith normal form over the integers with unimodular transforms.

All arithmetic is on Python ints; matrices come back as numpy object arrays.
"""

from __future__ import annotations

from typing import List, Tuple

import numpy as np


def _eye(n: int) -> List[List[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _as_lists(M) -> List[List[int]]:
    A = np.asarray(M, dtype=object)
    if A.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {A.shape}")
    return [[int(x) for x in row] for row in A]


def smith_normal_form(M) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Return (D, U, V) with D = U @ M @ V, D diagonal, d_i | d_{i+1}, d_i >= 0.

    Pivots are chosen by smallest absolute value to keep entries small.
    """
    A = _as_lists(M)
    r = len(A)
    c = len(A[0]) if r else np.asarray(M).shape[1]
    U, V = _eye(r), _eye(c)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        A[dst] = [x + q * y for x, y in zip(A[dst], A[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in A:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    for t in range(min(r, c)):
        while True:
            nz = [(abs(A[i][j]), i, j) for i in range(t, r) for j in range(t, c) if A[i][j]]
            if not nz:
                break
            _, i, j = min(nz)
            swap_rows(t, i)
            swap_cols(t, j)
            p = A[t][t]
            dirty = False
            for i in range(t + 1, r):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
                    dirty |= A[i][t] != 0
            for j in range(t + 1, c):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
                    dirty |= A[t][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, r) for j in range(t + 1, c) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if t < r and t < c and A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]

    D, Uo, Vo = (np.array(X, dtype=object).reshape(shape) for X, shape in
                 ((A, (r, c)), (U, (r, r)), (V, (c, c))))
    return D, Uo, Vo


def invariant_factors(M) -> List[int]:
    D, _, _ = smith_normal_form(M)
    return [int(D[i, i]) for i in range(min(D.shape))]


def det(M) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    A = _as_lists(M)
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]

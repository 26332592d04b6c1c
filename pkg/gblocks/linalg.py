"""Exact matrices over Q(ζ_N), stored as numpy object arrays of Cyclotomic."""
from __future__ import annotations

import numpy as np

from .algebra import Cyclotomic
from .errors import CyclotomicError

Matrix = np.ndarray


def zeros(rows: int, cols: int, conductor: int = 1) -> Matrix:
    return np.full((rows, cols), Cyclotomic.zero(conductor), dtype=object)


def identity(n: int, conductor: int = 1) -> Matrix:
    out = zeros(n, n, conductor)
    one = Cyclotomic.one(conductor)
    for i in range(n):
        out[i, i] = one
    return out


def from_rows(rows: list[list[Cyclotomic]]) -> Matrix:
    n = len(rows)
    m = len(rows[0]) if rows else 0
    out = np.empty((n, m), dtype=object)
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            out[i, j] = v
    return out


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if a.shape[1] != b.shape[0]:
        raise CyclotomicError(f"shape mismatch {a.shape} @ {b.shape}")
    if a.shape[1] == 0:
        return zeros(a.shape[0], b.shape[1])
    return a.dot(b)


def inverse(a: Matrix) -> Matrix:
    """Gauss-Jordan inverse; raises on singular input."""
    n, m = a.shape
    if n != m:
        raise CyclotomicError(f"cannot invert a {n}x{m} matrix")
    work = a.copy()
    inv = identity(n)
    for col in range(n):
        pivot = next((r for r in range(col, n) if not work[r, col].is_zero()), None)
        if pivot is None:
            raise CyclotomicError("matrix is singular")
        if pivot != col:
            work[[col, pivot]] = work[[pivot, col]]
            inv[[col, pivot]] = inv[[pivot, col]]
        p = work[col, col].inverse()
        work[col] = work[col] * p
        inv[col] = inv[col] * p
        for r in range(n):
            if r != col and not work[r, col].is_zero():
                f = work[r, col]
                work[r] = work[r] - work[col] * f
                inv[r] = inv[r] - inv[col] * f
    return inv


def equal(a: Matrix, b: Matrix) -> bool:
    if a.shape != b.shape:
        return False
    return all(x == y for x, y in zip(a.flat, b.flat))


def is_identity(a: Matrix) -> bool:
    n, m = a.shape
    if n != m:
        return False
    for (i, j), v in np.ndenumerate(a):
        if (v != 1) if i == j else not v.is_zero():
            return False
    return True


def kron(a: Matrix, b: Matrix) -> Matrix:
    rb, cb = b.shape
    out = zeros(a.shape[0] * rb, a.shape[1] * cb)
    for (i, j), x in np.ndenumerate(a):
        if x.is_zero():
            continue
        for (k, l), y in np.ndenumerate(b):
            out[i * rb + k, j * cb + l] = x * y
    return out


def to_text(a: Matrix) -> list[list[str]]:
    return [[str(a[i, j]) for j in range(a.shape[1])] for i in range(a.shape[0])]

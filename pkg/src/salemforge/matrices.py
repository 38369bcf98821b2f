"""Square integer matrices as tuples of row tuples, with exact kernels.

Determinants use fraction-free Bareiss elimination; characteristic
polynomials come from Bareiss determinants of k*I - M at integer nodes,
re-assembled by exact Lagrange interpolation (the result is asserted to be
integral and monic-signed as det(X*I - M) demands).
"""

from __future__ import annotations

from fractions import Fraction

from . import polys

Matrix = tuple  # tuple[tuple[int, ...], ...]


def from_rows(rows) -> Matrix:
    m = tuple(tuple(int(c) for c in row) for row in rows)
    assert all(len(r) == len(m) for r in m), "matrix must be square"
    return m


def size(m: Matrix) -> int:
    return len(m)


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zero(n: int) -> Matrix:
    return tuple((0,) * n for _ in range(n))


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def vec_mat(v, a: Matrix) -> tuple:
    return tuple(sum(v[i] * a[i][j] for i in range(len(v))) for j in range(len(v)))


def det(m: Matrix) -> int:
    """Fraction-free Bareiss determinant."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def char_poly(m: Matrix) -> tuple:
    """Exact characteristic polynomial det(X*I - M), ascending coefficients."""
    n = len(m)
    if n == 0:
        return polys.ONE
    values = []
    for k in range(n + 1):
        shifted = tuple(
            tuple((k if i == j else 0) - m[i][j] for j in range(n)) for i in range(n)
        )
        values.append(det(shifted))
    coeffs = _lagrange_integer(list(range(n + 1)), values)
    assert coeffs[-1] == 1 and len(coeffs) == n + 1, "char poly must be monic"
    return coeffs


def _lagrange_integer(xs, ys) -> tuple:
    """Interpolate integer samples exactly; result must be integral."""
    acc = [Fraction(0)] * len(xs)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            # basis *= (X - xj)
            nxt = [Fraction(0)] * (len(basis) + 1)
            for t, c in enumerate(basis):
                nxt[t] -= c * xj
                nxt[t + 1] += c
            basis = nxt
            denom *= xi - xj
        w = Fraction(yi) / denom
        for t, c in enumerate(basis):
            acc[t] += w * c
    assert all(c.denominator == 1 for c in acc)
    return polys.normalize(int(c) for c in acc)


def is_permutation_matrix(m: Matrix) -> bool:
    n = len(m)
    for row in m:
        if sum(row) != 1 or any(c not in (0, 1) for c in row):
            return False
    return all(sum(m[i][j] for i in range(n)) == 1 for j in range(n))


def permutation_matrix(perm, n: int) -> Matrix:
    """Matrix sending basis vector j to basis vector perm[j]."""
    assert sorted(perm) == list(range(n))
    return tuple(tuple(1 if perm[j] == i else 0 for j in range(n)) for i in range(n))


def to_json_dict(m: Matrix, labels=None) -> dict:
    out = {
        "size": len(m),
        "entries": [[str(c) for c in row] for row in m],
    }
    if labels is not None:
        out["labels"] = list(labels)
    return out

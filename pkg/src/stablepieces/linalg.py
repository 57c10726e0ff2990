"""Exact rational linear algebra on small dense matrices (lists of rows)."""

from __future__ import annotations

from fractions import Fraction


def _rref(rows):
    """Gauss-Jordan in place; returns the pivot columns."""
    m = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((k for k in range(r, m) if rows[k][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        rows[r] = [x / piv for x in rows[r]]
        for k in range(m):
            if k != r and rows[k][c] != 0:
                f = rows[k][c]
                rows[k] = [a - f * b for a, b in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return pivots


def inverse_matrix(a):
    """Inverse of a square integer/rational matrix as a tuple of Fraction rows."""
    n = len(a)
    rows = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(a)]
    pivots = _rref(rows)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return tuple(tuple(row[n:]) for row in rows)


def rank(vectors) -> int:
    rows = [[Fraction(x) for x in v] for v in vectors]
    if not rows:
        return 0
    return len(_rref(rows))


def solve_in_span(basis, target):
    """Coefficients ``c`` with ``sum(c_j * basis[j]) == target``.

    ``basis`` must be linearly independent.  Returns ``(coeffs, residual)``;
    ``coeffs`` is ``None`` when ``target`` is outside the span, in which case
    ``residual`` is the component left after eliminating the basis.
    """
    k = len(basis)
    n = len(target)
    # augmented system: columns are the basis vectors, last column the target
    rows = [[Fraction(basis[j][i]) for j in range(k)] + [Fraction(target[i])] for i in range(n)]
    pivots = _rref(rows)
    if k in pivots:
        residual = tuple(rows[i][k] for i in range(n))
        return None, residual
    coeffs = [Fraction(0)] * k
    for r, c in enumerate(pivots):
        coeffs[c] = rows[r][k]
    return tuple(coeffs), tuple(Fraction(0) for _ in range(n))

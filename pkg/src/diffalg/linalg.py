"""Exact Gaussian elimination over arbitrary field-like values.

Entries may be anything supporting +, -, *, / and truthiness as a zero
test (tower elements, sympy fraction-field elements, Fraction, ...).
Pivots are chosen by a cheap size heuristic to keep fraction growth down.
"""

from __future__ import annotations


def _size(e):
    return len(str(e))


def rref(matrix, zero, one):
    """Reduced row echelon form; returns (rows, pivot column list).

    The input matrix (list of row lists) is not modified.
    """
    rows = [list(r) for r in matrix]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= len(rows):
            break
        candidates = [i for i in range(r, len(rows)) if rows[i][c]]
        if not candidates:
            continue
        best = min(candidates, key=lambda i: _size(rows[i][c]))
        rows[r], rows[best] = rows[best], rows[r]
        inv = one / rows[r][c]
        rows[r] = [inv * e for e in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def rank(matrix, zero, one):
    _, pivots = rref(matrix, zero, one)
    return len(pivots)


def nullspace(matrix, zero, one):
    """Basis of {v : matrix @ v = 0}, one vector per free column."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    rows, pivots = rref(matrix, zero, one)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [zero] * ncols
        v[free] = one
        for r, c in enumerate(pivots):
            v[c] = zero - rows[r][free]
        basis.append(v)
    return basis


def solve(matrix, rhs, zero, one):
    """One solution of matrix @ v = rhs, or None if inconsistent."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    aug = [list(r) + [b] for r, b in zip(matrix, rhs)]
    rows, pivots = rref(aug, zero, one)
    if pivots and pivots[-1] == ncols:
        return None
    v = [zero] * ncols
    for r, c in enumerate(pivots):
        v[c] = rows[r][ncols]
    return v


def in_span(basis_vectors, vector, zero, one):
    """True iff vector is an exact linear combination of basis_vectors."""
    if not basis_vectors:
        return not any(vector)
    matrix = [[bv[i] for bv in basis_vectors] for i in range(len(vector))]
    return solve(matrix, list(vector), zero, one) is not None


def intersect(basis_a, basis_b, zero, one):
    """Basis of span(basis_a) & span(basis_b)."""
    if not basis_a or not basis_b:
        return []
    n = len(basis_a[0])
    matrix = [
        [bv[i] for bv in basis_a] + [zero - bv[i] for bv in basis_b]
        for i in range(n)
    ]
    result = []
    for coeffs in nullspace(matrix, zero, one):
        vec = [zero] * n
        for j, bv in enumerate(basis_a):
            if coeffs[j]:
                vec = [v + coeffs[j] * e for v, e in zip(vec, bv)]
        if any(vec):
            result.append(vec)
    return independent_subset(result, zero, one)


def independent_subset(vectors, zero, one):
    """Greedy maximal linearly independent subset, order preserved."""
    chosen = []
    for v in vectors:
        if not in_span(chosen, v, zero, one):
            chosen.append(v)
    return chosen

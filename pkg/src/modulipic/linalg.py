"""Small exact linear algebra helpers: Fraction matrices and integer Smith form.

Everything here works on tuples/lists of Fractions or ints; matrices are
at most 9x9 (rank <= 8 plus a slack coordinate), so no attempt is made to
be clever about complexity.
"""

from fractions import Fraction

from .errors import ShapeError


def mat_vec(mat, vec):
    if len(mat[0]) != len(vec):
        raise ShapeError(f"matrix has {len(mat[0])} columns, vector has {len(vec)}")
    return tuple(sum(row[j] * vec[j] for j in range(len(vec))) for row in mat)


def transpose(mat):
    return tuple(tuple(row[j] for row in mat) for j in range(len(mat[0])))


def mat_inv(mat):
    """Inverse of a square matrix by Gauss-Jordan over Fraction."""
    n = len(mat)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ShapeError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv_p = 1 / aug[col][col]
        aug[col] = [x * inv_p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def bilinear(x, gram, y):
    """x^T * gram * y with exact arithmetic."""
    if len(x) != len(gram) or len(y) != len(gram[0]):
        raise ShapeError("bilinear form dimension mismatch")
    return sum(x[i] * gram[i][j] * y[j] for i in range(len(x)) for j in range(len(y)))


def smith_diagonal(rows):
    """Diagonal of the Smith normal form of an integer matrix.

    Only unimodular row/column operations are used, so the product of the
    returned entries is the index of the row lattice (when it has full
    column rank).  Divisibility chaining of the diagonal is not enforced;
    callers here only need the product.
    """
    a = [list(map(int, r)) for r in rows]
    if not a:
        return []
    m, n = len(a), len(a[0])
    diag = []
    t = 0
    while t < min(m, n):
        # locate a pivot of minimal absolute value in the working submatrix
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] != 0 and (piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        i0, j0 = piv
        a[t], a[i0] = a[i0], a[t]
        for row in a:
            row[t], row[j0] = row[j0], row[t]
        # reduce row t and column t against the pivot; repeat until clean
        dirty = True
        while dirty:
            dirty = False
            p = a[t][t]
            for i in range(t + 1, m):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    a[t], a[i] = a[i], a[t]
                    dirty = True
                    break
            if dirty:
                continue
            for j in range(t + 1, n):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    for row in a:
                        row[t], row[j] = row[j], row[t]
                    dirty = True
                    break
        diag.append(abs(a[t][t]))
        t += 1
    return diag

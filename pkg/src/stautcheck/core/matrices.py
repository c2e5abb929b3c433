"""Exact rational matrices as immutable tuples of row tuples.

Entries are ints or ``fractions.Fraction``; no floats ever enter the
arithmetic, so matrix equality is decidable and literal.

>>> m = mat([[1, 2], [3, 4]])
>>> matmul(m, identity(2)) == m
True
>>> matmul(m, inverse(m)) == identity(2)
True
"""

from fractions import Fraction
from itertools import product


def mat(rows):
    """Freeze a list-of-lists of numbers into a matrix."""
    return tuple(tuple(x if isinstance(x, (int, Fraction)) else Fraction(x)
                       for x in row) for row in rows)


def shape(m):
    return (len(m), len(m[0]) if m else 0)


_EYE_CACHE = {}


def identity(n):
    hit = _EYE_CACHE.get(n)
    if hit is None:
        rows = []
        for i in range(n):
            row = [0] * n
            row[i] = 1
            rows.append(tuple(row))
        hit = tuple(rows)
        if n <= 128:
            _EYE_CACHE[n] = hit
    return hit


def zeros(r, c):
    row = (0,) * c
    return tuple(row for _ in range(r))


def is_identity(m):
    r, c = shape(m)
    if r != c:
        return False
    return all(m[i][j] == (1 if i == j else 0) for i in range(r) for j in range(c))


def is_zero(m):
    return all(x == 0 for row in m for x in row)


def matmul(a, b):
    """Matrix product a @ b (a maps the codomain side, as usual)."""
    ra, ca = shape(a)
    rb, cb = shape(b)
    if ca != rb:
        raise ValueError(f"shape mismatch in matmul: {shape(a)} @ {shape(b)}")
    bt = tuple(zip(*b)) if b else ()
    out = []
    for i in range(ra):
        arow = a[i]
        out.append(tuple(sum(arow[k] * bcol[k] for k in range(ca)) for bcol in bt))
    return tuple(out)


def add(a, b):
    if shape(a) != shape(b):
        raise ValueError("shape mismatch in add")
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def scale(c, a):
    return tuple(tuple(c * x for x in row) for row in a)


def transpose(a):
    return tuple(zip(*a)) if a else ()


def kron(a, b):
    """Kronecker product, row-major over the left factor.

    Basis convention: index (i, j) of the product flattens to i * cols(b) + j.
    All structural maps of the linear backends derive from this one choice.
    """
    ra, ca = shape(a)
    rb, cb = shape(b)
    out = []
    for i, k in product(range(ra), range(rb)):
        out.append(tuple(a[i][j] * b[k][l] for j, l in product(range(ca), range(cb))))
    return tuple(out)


def inverse(m):
    """Exact inverse by Gauss-Jordan elimination; raises on singular input."""
    n, c = shape(m)
    if n != c:
        raise ValueError("inverse of non-square matrix")
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def nullspace(m):
    """Basis of the right nullspace {v : m v = 0}, as a list of column vectors."""
    rows, cols = shape(m)
    a = [[Fraction(x) for x in row] for row in m]
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pv = a[r][c]
        a[r] = [x / pv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -a[i][fc]
        basis.append(tuple(v))
    return basis


def swap_matrix(dim_a, dim_b):
    """Permutation matrix for a (x) b -> b (x) a under the kron flattening."""
    n = dim_a * dim_b
    rows = []
    for j in range(dim_b):
        for i in range(dim_a):
            row = [0] * n
            row[i * dim_b + j] = 1
            rows.append(tuple(row))
    return tuple(rows)

"""Dense exact linear algebra over Q(zeta) scalars.

Matrices are tuples of row tuples.  Entries may be ``int``, ``Fraction`` or
:class:`~qtoroidal.scalars.Cyclotomic`; division always goes through
:func:`div` so integers never turn into floats.
"""

from fractions import Fraction

from .errors import DivisionByZero
from .scalars import Cyclotomic


def is_zero(x):
    return x == 0


def div(a, b):
    if isinstance(b, Cyclotomic):
        return a * b.inverse()
    if b == 0:
        raise DivisionByZero("division by zero")
    if isinstance(a, Cyclotomic):
        return a / b
    return Fraction(a) / b


def zeros(rows, cols=None):
    cols = rows if cols is None else cols
    return tuple((0,) * cols for _ in range(rows))


def identity(n, scale=1):
    return tuple(tuple(scale if i == j else 0 for j in range(n)) for i in range(n))


def unit(n, i, j, scale=1):
    return tuple(tuple(scale if (r, c) == (i, j) else 0 for c in range(n)) for r in range(n))


def mat_add(A, B):
    return tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_sub(A, B):
    return tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_scale(c, A):
    return tuple(tuple(c * a for a in row) for row in A)


def mat_neg(A):
    return tuple(tuple(-a for a in row) for row in A)


def mat_mul(A, B):
    if not A:
        return ()
    cols = list(zip(*B))
    out = []
    for row in A:
        nz = [(k, a) for k, a in enumerate(row) if a != 0]
        out_row = []
        for col in cols:
            s = 0
            for k, a in nz:
                b = col[k]
                if b != 0:
                    s = s + a * b
            out_row.append(s)
        out.append(tuple(out_row))
    return tuple(out)


def mat_vec(A, v):
    nz = [(k, x) for k, x in enumerate(v) if x != 0]
    out = []
    for row in A:
        s = 0
        for k, x in nz:
            a = row[k]
            if a != 0:
                s = s + a * x
        out.append(s)
    return tuple(out)


def commutator(A, B):
    return mat_sub(mat_mul(A, B), mat_mul(B, A))


def transpose(A):
    return tuple(zip(*A))


def trace(A):
    s = 0
    for i, row in enumerate(A):
        s = s + row[i]
    return s


def is_zero_matrix(A):
    return all(a == 0 for row in A for a in row)


def kron(A, B):
    rows = []
    for ra in A:
        for rb in B:
            rows.append(tuple(a * b for a in ra for b in rb))
    return tuple(rows)


def block_diag(*blocks):
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[off + i][off + j] = x
        off += len(b)
    return tuple(tuple(r) for r in out)


def mat_pow(A, k):
    result = identity(len(A))
    base = A
    while k:
        if k & 1:
            result = mat_mul(result, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return result


def rref(rows, ncols=None):
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    M = [list(r) for r in rows]
    if ncols is None:
        ncols = len(M[0]) if M else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = div(1, M[r][c])
        M[r] = [x * inv if x != 0 else 0 for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y if y != 0 else x for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return [tuple(row) for row in M[:r]], pivots


def rank(rows):
    return len(rref(rows)[1])


def nullspace(A, ncols=None):
    """Basis of {x : A x = 0} as a list of column vectors."""
    if ncols is None:
        ncols = len(A[0]) if A else 0
    R, pivots = rref(A, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, p in zip(R, pivots):
            if row[f] != 0:
                v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def solve(A, b):
    """One solution of A x = b, or None if inconsistent."""
    ncols = len(A[0]) if A else 0
    aug = [tuple(row) + (rhs,) for row, rhs in zip(A, b)]
    R, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [0] * ncols
    for row, p in zip(R, pivots):
        x[p] = row[-1]
    return tuple(x)


def inverse(A):
    n = len(A)
    aug = [tuple(row) + identity(n)[i] for i, row in enumerate(A)]
    R, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise DivisionByZero("matrix is singular")
    return tuple(tuple(row[n:]) for row in R[:n])


class Span:
    """Incrementally grown subspace of K^n kept in reduced echelon form."""

    def __init__(self, dim, vectors=()):
        self.dim = dim
        self.rows = {}  # pivot column -> row with 1 at pivot
        for v in vectors:
            self.add(v)

    def __len__(self):
        return len(self.rows)

    def reduce(self, v):
        v = list(v)
        for p, row in self.rows.items():
            c = v[p]
            if c != 0:
                v = [x - c * y if y != 0 else x for x, y in zip(v, row)]
        return v

    def add(self, v):
        """Insert v; returns True if the span grew."""
        w = self.reduce(v)
        p = next((i for i, x in enumerate(w) if x != 0), None)
        if p is None:
            return False
        inv = div(1, w[p])
        w = [x * inv if x != 0 else 0 for x in w]
        for q, row in list(self.rows.items()):
            c = row[p]
            if c != 0:
                self.rows[q] = tuple(x - c * y if y != 0 else x for x, y in zip(row, w))
        self.rows[p] = tuple(w)
        return True

    def contains(self, v):
        return all(x == 0 for x in self.reduce(v))

    def basis(self):
        return [self.rows[p] for p in sorted(self.rows)]

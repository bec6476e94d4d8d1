"""Rational quantum matrices and the bilinear data on Z^n they induce.

All entries ``q_ij`` are stored as exponents of a single root of unity,
``q_ij = zeta_M ** e_ij``, so the cocycle and skew form reduce to integer
arithmetic modulo ``M`` until a scalar is actually requested.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_decomp

from .errors import InvalidInput, VerificationFailure
from .scalars import NotRootOfUnity, as_root_of_unity, lcm, order, root_of_unity

__all__ = [
    "QMatrix",
    "Sublattice",
    "sigma",
    "skew",
    "radf_basis",
    "in_radf",
    "min_central_power",
    "hermite_rows",
]


@dataclass(frozen=True)
class QMatrix:
    n: int
    conductor: int
    exps: tuple

    def __post_init__(self):
        n, M = int(self.n), int(self.conductor)
        if n < 2:
            raise InvalidInput(f"torus rank must be at least 2, got {n}")
        if M < 1:
            raise InvalidInput(f"conductor must be positive, got {M}", code="invalid-conductor")
        rows = tuple(tuple(int(x) % M for x in row) for row in self.exps)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise InvalidInput(f"exponent matrix must be {n}x{n}")
        for i in range(n):
            if rows[i][i] != 0:
                raise InvalidInput(f"q_{i+1}{i+1} must be 1")
            for j in range(n):
                if (rows[i][j] + rows[j][i]) % M:
                    raise InvalidInput(f"q_{i+1}{j+1} must equal q_{j+1}{i+1}^-1")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "conductor", M)
        object.__setattr__(self, "exps", rows)
        self._check_defining_relation()

    def _check_defining_relation(self):
        # t_i t_j = q_ij t_j t_i must come out of the normal-ordering cocycle
        n, M = self.n, self.conductor
        for i in range(n):
            for j in range(n):
                ei, ej = _unit(n, i), _unit(n, j)
                lhs = (self.sigma_exp(ei, ej) - self.sigma_exp(ej, ei)) % M
                if lhs != self.exps[i][j]:
                    raise VerificationFailure(
                        f"cocycle does not reproduce t_{i+1} t_{j+1} = q_{i+1}{j+1} t_{j+1} t_{i+1}"
                    )

    @classmethod
    def from_pairs(cls, n, conductor, upper):
        """Build from {(i, j): e_ij} for i < j (0-based); the rest is implied."""
        e = [[0] * n for _ in range(n)]
        for (i, j), x in upper.items():
            e[i][j] = x
            e[j][i] = -x
        return cls(n, conductor, tuple(map(tuple, e)))

    @classmethod
    def from_entries(cls, entries):
        """Build from a matrix of Cyclotomic roots of unity."""
        n = len(entries)
        orders = {}
        for i in range(n):
            for j in range(n):
                try:
                    orders[i, j] = as_root_of_unity(entries[i][j])
                except NotRootOfUnity as exc:
                    raise InvalidInput(
                        f"q_{i+1}{j+1} is not a root of unity", code="not-a-root-of-unity"
                    ) from exc
        M = 1
        for m, _ in orders.values():
            M = lcm(M, m)
        exps = [[orders[i, j][1] * (M // orders[i, j][0]) for j in range(n)] for i in range(n)]
        return cls(n, M, tuple(map(tuple, exps)))

    @classmethod
    def commutative(cls, n):
        return cls(n, 1, tuple((0,) * n for _ in range(n)))

    def entry(self, i, j):
        return root_of_unity(self.conductor, self.exps[i][j])

    def check_degree(self, a):
        if len(a) != self.n:
            raise InvalidInput(f"degree {tuple(a)} has length {len(a)}, expected {self.n}",
                               code="invalid-degree")
        return tuple(int(x) for x in a)

    def sigma_exp(self, a, b):
        e = self.exps
        s = 0
        for i in range(1, self.n):
            ai = a[i]
            if ai:
                row = e[i]
                for j in range(i):
                    if b[j] and row[j]:
                        s += row[j] * ai * b[j]
        return s % self.conductor

    def skew_exp(self, a, b):
        e = self.exps
        s = 0
        for i in range(self.n):
            if a[i]:
                row = e[i]
                for j in range(self.n):
                    if b[j] and row[j]:
                        s += row[j] * a[i] * b[j]
        return s % self.conductor

    def to_json(self):
        return {"n": self.n, "conductor": self.conductor, "exps": [list(r) for r in self.exps]}

    @classmethod
    def from_json(cls, obj):
        try:
            return cls(int(obj["n"]), int(obj["conductor"]), tuple(map(tuple, obj["exps"])))
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInput(f"malformed torus config: {exc}") from exc


def _unit(n, i, scale=1):
    return tuple(scale if k == i else 0 for k in range(n))


def sigma(q, a, b):
    """The scalar with t^a t^b = sigma(a, b) t^(a+b)."""
    a, b = q.check_degree(a), q.check_degree(b)
    return root_of_unity(q.conductor, q.sigma_exp(a, b))


def skew(q, a, b):
    """The commutation factor f(a, b) with t^a t^b = f(a, b) t^b t^a."""
    a, b = q.check_degree(a), q.check_degree(b)
    return root_of_unity(q.conductor, q.skew_exp(a, b))


def hermite_rows(rows, n):
    """Row-style Hermite normal form of the lattice spanned by integer rows."""
    M = [list(r) for r in rows if any(r)]
    r = 0
    for c in range(n):
        while True:
            nz = [i for i in range(r, len(M)) if M[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(M[i][c]))
            M[r], M[p] = M[p], M[r]
            done = True
            for i in range(r + 1, len(M)):
                if M[i][c]:
                    f = M[i][c] // M[r][c]
                    M[i] = [x - f * y for x, y in zip(M[i], M[r])]
                    if M[i][c]:
                        done = False
            if done:
                break
        if r < len(M) and M[r][c] != 0:
            if M[r][c] < 0:
                M[r] = [-x for x in M[r]]
            for i in range(r):
                f = M[i][c] // M[r][c]
                if f:
                    M[i] = [x - f * y for x, y in zip(M[i], M[r])]
            r += 1
    return tuple(tuple(row) for row in M[:r])


@dataclass(frozen=True)
class Sublattice:
    """A sublattice of Z^n with a canonical Hermite basis."""

    basis: tuple
    n: int

    @classmethod
    def spanned_by(cls, rows, n):
        return cls(hermite_rows(rows, n), n)

    @property
    def rank(self):
        return len(self.basis)

    def coordinates(self, a):
        """Integer coordinates of a in the basis, or None when a is outside."""
        rem = list(a)
        coords = []
        for row in self.basis:
            p = next(i for i, x in enumerate(row) if x)
            c, r = divmod(rem[p], row[p])
            if r:
                return None
            coords.append(c)
            if c:
                rem = [x - c * y for x, y in zip(rem, row)]
        return tuple(coords) if not any(rem) else None

    def contains(self, a):
        return self.coordinates(a) is not None

    def index(self):
        """Order of Z^n / L, or None if L has lower rank."""
        if self.rank < self.n:
            return None
        out = 1
        for row in self.basis:
            out *= next(x for x in row if x)
        return out

    def elementary_divisors(self):
        D, _, _ = smith_normal_decomp(Matrix([list(r) for r in self.basis]))
        return tuple(abs(int(D[i, i])) for i in range(min(D.shape)))


@lru_cache(maxsize=None)
def radf_basis(q):
    """rad f = {a : f(a, b) = 1 for all b} in Hermite form.

    f(a, e_i) = zeta_M ** (sum_j e_ji a_j), so rad f is the solution set of
    E^T a = 0 (mod M).  With a Smith decomposition S E^T T = D the condition
    becomes d_k y_k = 0 (mod M) for y = T^-1 a.
    """
    n, M = q.n, q.conductor
    B = Matrix([[q.exps[j][i] for j in range(n)] for i in range(n)])
    D, _, T = smith_normal_decomp(B)
    gens = []
    for k in range(n):
        dk = int(D[k, k]) if k < min(D.shape) else 0
        step = M // gcd(dk, M)
        gens.append([int(T[i, k]) * step for i in range(n)])
    gens.extend(list(_unit(n, i, M)) for i in range(n))
    lattice = Sublattice.spanned_by(gens, n)
    for row in lattice.basis:
        if not _in_radf_direct(q, row):
            raise VerificationFailure(f"rad f generator {row} fails the defining condition")
    return lattice


def _in_radf_direct(q, a):
    n, M = q.n, q.conductor
    return all(sum(q.exps[j][i] * a[j] for j in range(n)) % M == 0 for i in range(n))


def in_radf(q, a):
    return radf_basis(q).contains(q.check_degree(a))


def min_central_power(q, j):
    """Smallest N >= 1 with t_j^N central."""
    if not 0 <= j < q.n:
        raise InvalidInput(f"generator index {j} out of range")
    lattice = radf_basis(q)
    N = next(N for N in range(1, q.conductor + 1) if lattice.contains(_unit(q.n, j, N)))
    expected = 1
    for i in range(q.n):
        expected = lcm(expected, order(q.entry(i, j)))
    if N != expected:
        raise VerificationFailure(f"N_{j+1} = {N} disagrees with lcm of orders {expected}")
    return N

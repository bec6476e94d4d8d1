"""Finite quotients of C_q and their irreducible matrix representations.

Fix evaluation points a_{j1}, ..., a_{jM_j} for each generator and let N_j
be the least power with t_j^{N_j} central.  The ideal generated by the
Q_j(t_j) = prod_k (t_j^{N_j} - a_{jk}) cuts C_q down to a direct sum of
fibers, one per point tuple k, in which t_j^{N_j} acts as a_{j k_j}.  Each
fiber has the monomials t^a, 0 <= a_j < N_j, as a basis.

Points are required to be roots of unity.  Every polynomial that has to be
split on the way (x^{N_j} - a, and the powers of central monomials) then
splits over a cyclotomic field and no numerical eigensolver is needed.
"""

from dataclasses import dataclass, field
from itertools import product
from math import isqrt, prod

from . import linalg as la
from .errors import InvalidInput, ToroidalError, VerificationFailure
from .scalars import Cyclotomic, NotRootOfUnity, as_cyclotomic, as_root_of_unity, nth_roots, root_of_unity
from .torus_form import min_central_power, radf_basis

__all__ = [
    "EvalPoints",
    "FiberAlgebra",
    "MatrixRep",
    "Wedderburn",
    "build_fiber",
    "wedderburn",
    "irreducible_rep",
    "block_reps",
    "fiber_reps",
    "rep_monomial",
    "pi_tilde",
    "crt_check",
]


class NotSimple(ToroidalError):
    code = "not-simple"


class NotInDomain(ToroidalError):
    code = "not-in-domain"


@dataclass(frozen=True)
class EvalPoints:
    q: object
    points: tuple

    def __post_init__(self):
        q = self.q
        pts = tuple(tuple(as_cyclotomic(a) for a in row) for row in self.points)
        if len(pts) != q.n:
            raise InvalidInput(f"need one list of points per generator, got {len(pts)}", code="invalid-points")
        for j, row in enumerate(pts):
            if not row:
                raise InvalidInput(f"no points for t_{j + 1}", code="invalid-points")
            for k, a in enumerate(row):
                if a == 0:
                    raise InvalidInput(f"point a_{j + 1},{k + 1} is zero", code="invalid-points")
                try:
                    as_root_of_unity(a)
                except NotRootOfUnity as exc:
                    raise InvalidInput(
                        f"point a_{j + 1},{k + 1} = {a} is not a root of unity", code="invalid-points"
                    ) from exc
                if any(a == b for b in row[:k]):
                    raise InvalidInput(f"repeated point for t_{j + 1}", code="invalid-points")
        object.__setattr__(self, "points", pts)

    @classmethod
    def ones(cls, q):
        return cls(q, tuple((1,) for _ in range(q.n)))

    @property
    def N(self):
        return tuple(min_central_power(self.q, j) for j in range(self.q.n))

    @property
    def M(self):
        return tuple(len(row) for row in self.points)

    @property
    def K(self):
        return prod(self.M)

    def tuples(self):
        return list(product(*(range(m) for m in self.M)))

    def to_json(self):
        return {"points": [[a.to_json() for a in row] for row in self.points]}

    @classmethod
    def from_json(cls, q, obj):
        try:
            rows = [[Cyclotomic.from_json(a) for a in row] for row in obj["points"]]
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"malformed points: {exc}", code="invalid-points") from exc
        return cls(q, tuple(map(tuple, rows)))


class FiberAlgebra:
    """C_q / (t_j^{N_j} - c_j), stored on the monomial basis of the box [0, N)."""

    def __init__(self, q, values, k=None):
        self.q = q
        self.values = tuple(as_cyclotomic(c) for c in values)
        self.k = tuple(k) if k is not None else None
        self.N = tuple(min_central_power(q, j) for j in range(q.n))
        self.basis = list(product(*(range(N) for N in self.N)))
        self.index = {a: i for i, a in enumerate(self.basis)}
        self.dim = len(self.basis)
        self._table = {}

    def reduce(self, c):
        """t^c as (basis index, scalar) in the fiber, for any c in Z^n."""
        q, M = self.q, self.q.conductor
        s = tuple(x // N for x, N in zip(c, self.N))
        base = tuple(x - N * y for x, N, y in zip(c, self.N, s))
        shift = tuple(N * y for N, y in zip(self.N, s))
        # t^c = sigma(base, shift)^-1 t^base t^shift and t^shift = prod c_j^{s_j}
        coef = root_of_unity(M, -q.sigma_exp(base, shift))
        for cj, sj in zip(self.values, s):
            if sj:
                coef = coef * cj**sj
        return self.index[base], coef

    def monomial(self, c, coef=1):
        i, s = self.reduce(c)
        v = [0] * self.dim
        v[i] = s * coef
        return v

    def one(self):
        return self.monomial((0,) * self.q.n)

    def _product(self, i, j):
        key = (i, j)
        hit = self._table.get(key)
        if hit is None:
            a, b = self.basis[i], self.basis[j]
            k, s = self.reduce(tuple(x + y for x, y in zip(a, b)))
            hit = (k, s * root_of_unity(self.q.conductor, self.q.sigma_exp(a, b)))
            self._table[key] = hit
        return hit

    def mul(self, x, y):
        out = [0] * self.dim
        ys = [(j, v) for j, v in enumerate(y) if v != 0]
        for i, u in enumerate(x):
            if u == 0:
                continue
            for j, v in ys:
                k, s = self._product(i, j)
                out[k] = out[k] + u * v * s
        return out

    def is_scalar(self, x):
        """The scalar c if x = c * 1, else None."""
        if any(v != 0 for i, v in enumerate(x) if i != 0):
            return None
        return x[0]

    def center_basis(self):
        """Solve x t_j = t_j x for every generator."""
        rows = []
        gens = [self.monomial(tuple(int(i == j) for i in range(self.q.n))) for j in range(self.q.n)]
        for g in gens:
            cols = []
            for i in range(self.dim):
                e = [0] * self.dim
                e[i] = 1
                cols.append([x - y for x, y in zip(self.mul(e, g), self.mul(g, e))])
            rows.extend(zip(*cols))
        return la.nullspace(rows, self.dim)

    def check_associative(self, samples=None):
        idx = range(self.dim) if samples is None else samples
        for i in idx:
            for j in idx:
                for k in idx:
                    ei, ej, ek = ([int(t == s) for t in range(self.dim)] for s in (i, j, k))
                    if self.mul(self.mul(ei, ej), ek) != self.mul(ei, self.mul(ej, ek)):
                        return False
        return True


def build_fiber(q, pts, k):
    if len(k) != q.n or any(not 0 <= kj < m for kj, m in zip(k, pts.M)):
        raise InvalidInput(f"point tuple {tuple(k)} out of range", code="invalid-points")
    return FiberAlgebra(q, [pts.points[j][kj] for j, kj in enumerate(k)], k)


@dataclass(frozen=True)
class Wedderburn:
    dim: int
    center_dim: int
    size: int
    blocks: int

    @property
    def simple(self):
        return self.center_dim == 1

    def to_json(self):
        return {
            "dim": self.dim,
            "center_dim": self.center_dim,
            "size": self.size,
            "blocks": self.blocks,
            "simple": self.simple,
        }


def wedderburn(F):
    """Center dimension and matrix size of each simple block.

    The fiber is semisimple with a split center, so it has one block per
    central primitive idempotent and every block has the same dimension.
    """
    z = len(F.center_basis())
    if F.dim % z:
        raise VerificationFailure(f"center dim {z} does not divide fiber dim {F.dim}", code="internal-inconsistency")
    s = isqrt(F.dim // z)
    if s * s * z != F.dim:
        raise VerificationFailure(
            f"block dimension {F.dim // z} is not a perfect square", code="internal-inconsistency"
        )
    return Wedderburn(F.dim, z, s, z)


@dataclass
class MatrixRep:
    q: object
    values: tuple
    gens: tuple
    k: tuple = None
    inverses: tuple = field(default=None, repr=False)

    @property
    def size(self):
        return len(self.gens[0])

    def __post_init__(self):
        invs = []
        for j, T in enumerate(self.gens):
            N = min_central_power(self.q, j)
            P = la.mat_pow(T, N - 1)
            invs.append(la.mat_scale(1 / as_cyclotomic(self.values[j]), P))
        self.inverses = tuple(invs)

    def generator_power(self, j, e):
        return la.mat_pow(self.gens[j], e) if e >= 0 else la.mat_pow(self.inverses[j], -e)

    def verify(self):
        """All defining relations, exactly; raises on the first failure."""
        q, m = self.q, self.size
        for i in range(q.n):
            for j in range(q.n):
                lhs = la.mat_mul(self.gens[i], self.gens[j])
                rhs = la.mat_scale(q.entry(i, j), la.mat_mul(self.gens[j], self.gens[i]))
                if lhs != rhs:
                    raise VerificationFailure(f"t_{i + 1} t_{j + 1} = q t_{j + 1} t_{i + 1} fails")
            N = min_central_power(q, j)
            if la.mat_pow(self.gens[j], N) != la.identity(m, self.values[j]):
                raise VerificationFailure(f"t_{j + 1}^{N} is not the prescribed scalar")
            if la.mat_mul(self.gens[j], self.inverses[j]) != la.identity(m):
                raise VerificationFailure(f"inverse of t_{j + 1} is wrong")
        return True

    def to_json(self):
        return {
            "k": list(self.k) if self.k is not None else None,
            "size": self.size,
            "gens": [[[as_cyclotomic(x).to_json() for x in row] for row in T] for T in self.gens],
        }


def rep_monomial(rep, a):
    """rep(t^a) = rep(t_1)^{a_1} ... rep(t_n)^{a_n}."""
    out = la.identity(rep.size)
    for j, e in enumerate(a):
        if e:
            out = la.mat_mul(out, rep.generator_power(j, e))
    return out


def _split_eigen(F, u, idempotents, first_only=False):
    """Refine commuting idempotents by the spectral idempotents of u."""
    # u^m is a scalar once m*a lands in the period lattice
    power, m = u, 1
    while F.is_scalar(power) is None:
        power = F.mul(power, u)
        m += 1
        if m > F.dim:
            raise VerificationFailure("monomial power never became scalar", code="internal-inconsistency")
    roots = nth_roots(F.is_scalar(power), m)
    out = []
    for e in idempotents:
        for lam in roots:
            E = e
            for mu in roots:
                if mu != lam:
                    c = 1 / (lam - mu)
                    factor = [x * c if x != 0 else 0 for x in u]
                    factor[0] = factor[0] - mu * c
                    E = F.mul(E, factor)
            if any(x != 0 for x in E):
                out.append(E)
                if first_only:
                    return out
    return out


def _central_monomials(F):
    lattice = radf_basis(F.q)
    return [a for a in F.basis if any(a) and lattice.contains(a)]


def _central_idempotents(F, target):
    es = [F.one()]
    for a in _central_monomials(F):
        if len(es) == target:
            break
        es = _split_eigen(F, F.monomial(a), es)
    return es


def _left_ideal_rep(F, e):
    span = la.Span(F.dim)
    for i in range(F.dim):
        span.add(F.mul([int(t == i) for t in range(F.dim)], e))
    basis = span.basis()
    pivots = sorted(span.rows)
    mats = []
    for j in range(F.q.n):
        g = F.monomial(tuple(int(i == j) for i in range(F.q.n)))
        cols = []
        for v in basis:
            w = F.mul(g, list(v))
            if not span.contains(w):
                raise VerificationFailure("left ideal is not stable", code="internal-inconsistency")
            cols.append(tuple(w[p] for p in pivots))
        mats.append(la.transpose(cols))
    return tuple(mats)


def block_reps(F):
    """One irreducible representation per simple block of the fiber."""
    w = wedderburn(F)
    central = _central_idempotents(F, w.center_dim)
    if len(central) != w.center_dim:
        raise VerificationFailure(
            f"found {len(central)} central idempotents, expected {w.center_dim}", code="internal-inconsistency"
        )
    lattice = radf_basis(F.q)
    reps = []
    for ec in central:
        # maximal commuting family of non-central monomials, t_1 first
        chosen = []
        gens = [tuple(int(i == j) for i in range(F.q.n)) for j in range(F.q.n)]
        for a in gens + [b for b in F.basis if b not in gens]:
            if not any(a) or lattice.contains(a):
                continue
            if all(F.q.skew_exp(a, b) == 0 for b in chosen):
                chosen.append(a)
        es = [ec]
        for a in chosen:
            es = _split_eigen(F, F.monomial(a), es[:1], first_only=True)
        e = es[0]
        mats = _left_ideal_rep(F, e)
        rep = MatrixRep(F.q, F.values, mats, F.k)
        if rep.size != w.size:
            raise VerificationFailure(
                f"left ideal has dim {rep.size}, expected block size {w.size}", code="internal-inconsistency"
            )
        rep.verify()
        reps.append(rep)
    return reps


def irreducible_rep(F):
    w = wedderburn(F)
    if not w.simple:
        raise NotSimple(f"fiber has a {w.center_dim}-dimensional center")
    return block_reps(F)[0]


def fiber_reps(q, pts):
    """Irreducible representations over every point tuple and every block."""
    out = []
    for k in pts.tuples():
        out.extend(block_reps(build_fiber(q, pts, k)))
    return out


def pi_tilde(x, reps, allow_central=False):
    """X (x) t^a -> X (x) rep(t^a), one block per representation.

    The HC_1 part is sent to zero when ``allow_central`` is set (the target
    has no center); otherwise only elements of sl_d(C_q) are accepted.
    """
    if any(c != 0 for c in x.der):
        raise NotInDomain("derivations are outside the domain")
    if not x.hc.is_zero() and not allow_central:
        raise NotInDomain("central part is outside the domain")
    d = x.d
    out = []
    for rep in reps:
        if rep.q != x.q:
            raise InvalidInput("representation lives over a different torus", code="invalid-operand")
        total = la.zeros(d * rep.size)
        for a, X in x.mat.items():
            total = la.mat_add(total, la.kron(X, rep_monomial(rep, a)))
        out.append(total)
    return tuple(out)


def crt_check(q, pts):
    """C_q / J has basis t^a, 0 <= a_j < M_j N_j, and maps isomorphically onto the fibers."""
    N, M = pts.N, pts.M
    glob = list(product(*(range(m * n) for m, n in zip(M, N))))
    fibers = [build_fiber(q, pts, k) for k in pts.tuples()]
    total = sum(F.dim for F in fibers)
    if total != len(glob):
        return False
    rows = []
    for a in glob:
        row = []
        for F in fibers:
            row.extend(F.monomial(a))
        rows.append(tuple(row))
    return la.rank(rows) == len(glob)

"""Finite-dimensional pullback modules and the graded modules built on them.

A :class:`FinRep` is a representation of sl_d(C_q) that factors through the
block sum of matrix algebras produced by :mod:`qtoroidal.fiber`; its action
is rho(pi_tilde(x)).  :class:`GradedModule` turns it into a module for the
full toroidal algebra on V (x) C[Z^n]:

    (X t^r) . (w t^m) = (rho(X t^r) w) t^(m+r),   d_i . (w t^m) = m_i w t^m,

with HC_1 acting by zero.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from . import linalg as la
from .errors import InvalidInput, ToroidalError, VerificationFailure
from .fiber import fiber_reps, pi_tilde
from .roots_weyl import is_dominant_integral, reflect, weight_from_labels
from .scalars import as_cyclotomic
from .toroidal import ToroidalElement, bracket, project_sl
from .torus_form import min_central_power, radf_basis

__all__ = [
    "FinRep",
    "GradedVector",
    "GradedModule",
    "WindowReport",
    "Decomposition",
    "NotIntegrable",
    "act",
    "vplus",
    "hdot_weights",
    "vplus_is_dominant",
    "highest_weight",
    "highest_central_operator",
    "integrability_index",
    "lambda_series",
    "lambda_matrices",
    "log_series",
    "loop_vanishing_check",
    "loop_vanishing_report",
    "loop_cartan_images",
    "submodule_window",
    "decompose_window",
    "weight_multiplicities",
    "check_weyl_invariance",
]


class NotIntegrable(ToroidalError):
    code = "not-integrable"


def _sl_basis(D):
    """E_ij (i != j) then E_ii - E_{i+1,i+1}, as D x D matrices."""
    out = [la.unit(D, i, j) for i in range(D) for j in range(D) if i != j]
    out.extend(la.mat_sub(la.unit(D, i, i), la.unit(D, i + 1, i + 1)) for i in range(D - 1))
    return out


def _sl_coordinates(X):
    D = len(X)
    coords = [X[i][j] for i in range(D) for j in range(D) if i != j]
    # diagonal: X_00 h_0 + (X_00 + X_11) h_1 + ...
    s = 0
    for i in range(D - 1):
        s = s + X[i][i]
        coords.append(s)
    return coords


class FinRep:
    """rho o pi_tilde for a representation rho of the block sum.

    ``image`` maps the tuple of block matrices returned by pi_tilde to a
    dim x dim matrix and must be a Lie homomorphism.
    """

    def __init__(self, d, q, pts, reps, dim, image, kind, label=None):
        self.d, self.q, self.pts = d, q, pts
        self.reps = list(reps)
        self.dim = dim
        self._image = image
        self.kind = kind
        self.label = label or kind
        self._cache = {}

    # -- constructors ----------------------------------------------------
    @classmethod
    def _blocks(cls, d, q, pts):
        reps = fiber_reps(q, pts)
        return reps, [d * r.size for r in reps]

    @classmethod
    def trivial(cls, d, q, pts):
        reps, _ = cls._blocks(d, q, pts)
        return cls(d, q, pts, reps, 1, lambda blocks: ((0,),), "trivial")

    @classmethod
    def natural(cls, d, q, pts, block=0):
        reps, sizes = cls._blocks(d, q, pts)
        _check_block(block, sizes)
        return cls(d, q, pts, reps, sizes[block], lambda blocks: blocks[block], "natural", f"natural[{block}]")

    @classmethod
    def dual(cls, d, q, pts, block=0):
        reps, sizes = cls._blocks(d, q, pts)
        _check_block(block, sizes)
        return cls(
            d, q, pts, reps, sizes[block],
            lambda blocks: la.mat_neg(la.transpose(blocks[block])), "dual", f"dual[{block}]",
        )

    @classmethod
    def adjoint(cls, d, q, pts, block=0):
        reps, sizes = cls._blocks(d, q, pts)
        _check_block(block, sizes)
        basis = _sl_basis(sizes[block])

        def image(blocks):
            X = blocks[block]
            cols = [_sl_coordinates(la.commutator(X, B)) for B in basis]
            return la.transpose(cols)

        return cls(d, q, pts, reps, len(basis), image, "adjoint", f"adjoint[{block}]")

    @classmethod
    def tensor(cls, A, B):
        A._compatible(B)
        IA, IB = la.identity(A.dim), la.identity(B.dim)

        def image(blocks):
            return la.mat_add(la.kron(A._image(blocks), IB), la.kron(IA, B._image(blocks)))

        return cls(A.d, A.q, A.pts, A.reps, A.dim * B.dim, image, "tensor", f"({A.label} x {B.label})")

    @classmethod
    def direct_sum(cls, A, B):
        A._compatible(B)

        def image(blocks):
            return la.block_diag(A._image(blocks), B._image(blocks))

        return cls(A.d, A.q, A.pts, A.reps, A.dim + B.dim, image, "sum", f"({A.label} + {B.label})")

    @classmethod
    def by_name(cls, name, d, q, pts, block=0):
        makers = {"natural": cls.natural, "dual": cls.dual, "adjoint": cls.adjoint}
        if name == "trivial":
            return cls.trivial(d, q, pts)
        if name in makers:
            return makers[name](d, q, pts, block)
        if name == "tensor":
            return cls.tensor(cls.natural(d, q, pts, block), cls.natural(d, q, pts, block))
        if name == "sum":
            return cls.direct_sum(cls.natural(d, q, pts, block), cls.dual(d, q, pts, block))
        raise InvalidInput(f"unknown representation {name!r}", code="invalid-rep")

    def _compatible(self, other):
        if (self.d, self.q, self.pts) != (other.d, other.q, other.pts):
            raise InvalidInput("representations have different ambient data", code="invalid-operand")

    # -- action ----------------------------------------------------------
    def matrix(self, x):
        """rho(pi_tilde(x)) for x in gl_d(C_q) + HC_1; the I (x) Z(C_q) part acts by 0."""
        if x.d != self.d or x.q != self.q:
            raise InvalidInput("element lives in a different algebra", code="invalid-operand")
        y = project_sl(x)
        blocks = pi_tilde(y, self.reps, allow_central=True)
        return self._image(blocks)

    def generator(self, X, a):
        """Cached image of X (x) t^a for a hashable matrix X."""
        key = (X, tuple(a))
        hit = self._cache.get(key)
        if hit is None:
            hit = self.matrix(ToroidalElement.homogeneous(self.d, self.q, X, a))
            self._cache[key] = hit
        return hit

    def period_box(self):
        """Degrees whose images span all of rho(X (x) C_q) for a fixed X."""
        N = self.pts.N
        return list(product(*(range(m * n) for m, n in zip(self.pts.M, N))))

    def raising(self):
        """Images of E_ij (x) t^a, i < j, over the period box."""
        d = self.d
        out = []
        for a in self.period_box():
            for i in range(d):
                for j in range(i + 1, d):
                    out.append(self.generator(la.unit(d, i, j), a))
        return out

    def cartan_images(self):
        """rho(h_i (x) 1) for h_i = E_ii - E_{i+1,i+1}."""
        d, zero = self.d, (0,) * self.q.n
        return [self.generator(la.mat_sub(la.unit(d, i, i), la.unit(d, i + 1, i + 1)), zero) for i in range(d - 1)]

    def check_homomorphism(self, pairs):
        """rho([x, y]) = [rho x, rho y] on the given pairs."""
        for x, y in pairs:
            lhs = self.matrix(bracket(x, y))
            rhs = la.commutator(self.matrix(x), self.matrix(y))
            if lhs != rhs:
                return False
        return True


def _check_block(block, sizes):
    if not 0 <= block < len(sizes):
        raise InvalidInput(f"block {block} out of range (have {len(sizes)})", code="invalid-rep")


# -- highest weight space --------------------------------------------------


def vplus(rep):
    """Common kernel of the raising images; a list of basis vectors of V."""
    rows = [row for R in rep.raising() for row in R]
    if not rows:
        return [tuple(int(i == j) for i in range(rep.dim)) for j in range(rep.dim)]
    return la.nullspace(rows, rep.dim)


def _diagonal(A):
    n = len(A)
    if any(A[i][j] != 0 for i in range(n) for j in range(n) if i != j):
        return None
    return [A[i][i] for i in range(n)]


def hdot_weights(rep, vectors=None):
    """Dynkin labels (with multiplicity) of a subspace stable under h (x) 1.

    The subspace defaults to vplus(rep).  Works by projecting onto the joint
    eigenspaces of the Cartan images, which is exact whenever those images
    are semisimple with rational eigenvalues.
    """
    vectors = vplus(rep) if vectors is None else vectors
    H = rep.cartan_images()
    diag = [_diagonal(h) for h in H]
    if any(x is None for x in diag):
        return _hdot_weights_general(rep, H, vectors)
    groups = {}
    for c in range(rep.dim):
        key = tuple(as_cyclotomic(dg[c]).to_fraction() for dg in diag)
        groups.setdefault(key, []).append(c)
    out = []
    for key, coords in sorted(groups.items(), reverse=True):
        rows = [tuple(v[c] for c in coords) for v in vectors]
        out.extend([key] * la.rank(rows))
    return out


def _hdot_weights_general(rep, H, vectors):
    # restrict each h to the subspace and read eigenvalues off a triangular form
    if not vectors:
        return []
    basis = [tuple(v) for v in vectors]
    A = la.transpose(basis)
    mats = []
    for h in H:
        cols = []
        for v in basis:
            w = la.mat_vec(h, v)
            x = la.solve(A, w)
            if x is None:
                raise VerificationFailure("subspace is not stable under the Cartan", code="not-stable")
            cols.append(x)
        mats.append(la.transpose(cols))
    diag = [_diagonal(m) for m in mats]
    if any(x is None for x in diag):
        raise VerificationFailure("Cartan action is not diagonal on the chosen basis", code="not-diagonal")
    return sorted(
        (tuple(as_cyclotomic(dg[c]).to_fraction() for dg in diag) for c in range(len(basis))), reverse=True
    )


def vplus_is_dominant(rep):
    """Every h-weight occurring in vplus is dominant integral."""
    d, n = rep.d, rep.q.n
    return all(is_dominant_integral(weight_from_labels(d, n, key)) for key in hdot_weights(rep))


def highest_weight(rep):
    labels = hdot_weights(rep)
    if not labels:
        return None
    return weight_from_labels(rep.d, rep.q.n, labels[0])


def _restrict(M, basis):
    """Matrix of M on span(basis), or None if the span is not M-stable."""
    A = la.transpose(basis)
    cols = []
    for v in basis:
        x = la.solve(A, la.mat_vec(M, v))
        if x is None:
            return None
        cols.append(x)
    return la.transpose(cols)


@dataclass
class CentralOperator:
    index: int
    k: int
    h: tuple
    degree: tuple
    restricted: tuple = field(repr=False)

    def to_json(self):
        return {
            "i": self.index + 1,
            "k": self.k,
            "degree": list(self.degree),
            "h": [[as_cyclotomic(x).to_json() for x in row] for row in self.h],
        }


def highest_central_operator(rep, i, bound=4):
    """Search h (x) t_i^{k N_i}, 1 <= k <= bound, acting bijectively on vplus.

    Candidates for h run over h_1..h_{d-1} and then the E_jj.  Returns None
    when nothing within the bound works.
    """
    d, q = rep.d, rep.q
    basis = vplus(rep)
    if not basis:
        return None
    N = min_central_power(q, i)
    hs = [la.mat_sub(la.unit(d, j, j), la.unit(d, j + 1, j + 1)) for j in range(d - 1)]
    hs += [la.unit(d, j, j) for j in range(d)]
    for k in range(1, bound + 1):
        a = tuple(k * N if j == i else 0 for j in range(q.n))
        for h in hs:
            Z = _restrict(rep.generator(h, a), basis)
            if Z is None:
                raise VerificationFailure("vplus is not stable under a central operator", code="not-stable")
            if la.rank(Z) == len(basis):
                return CentralOperator(i, k, h, a, Z)
    return None


def integrability_index(rep, x):
    """Least k with rho(x)^k = 0."""
    A = rep.matrix(x) if isinstance(x, ToroidalElement) else x
    P = A
    for k in range(1, rep.dim + 2):
        if la.is_zero_matrix(P):
            return k
        P = la.mat_mul(P, A)
    raise NotIntegrable(f"image is not nilpotent (checked up to power {rep.dim + 1})")


# -- Lambda series ----------------------------------------------------------


def loop_cartan_images(rep, i, K, h=None):
    """rho(h (x) t_i^{k N_i}) for k = 1..K, the loop algebra in direction i."""
    d, q = rep.d, rep.q
    h = h if h is not None else la.mat_sub(la.unit(d, 0, 0), la.unit(d, 1, 1))
    N = min_central_power(q, i)
    return [rep.generator(h, tuple(k * N if j == i else 0 for j in range(q.n))) for k in range(1, K + 1)]


def lambda_series(H, v, K):
    """Lambda_m v for m = 0..K, where Lambda(u) = exp(-sum_k H_k u^k / k).

    The H_k must commute.  Uses m Lambda_m = -sum_{k=1}^m H_k Lambda_{m-k}.
    """
    if K < 1:
        raise InvalidInput(f"truncation must be at least 1, got {K}", code="invalid-truncation")
    if len(H) < K:
        raise InvalidInput(f"need {K} loop images, got {len(H)}", code="invalid-truncation")
    out = [tuple(v)]
    for m in range(1, K + 1):
        acc = [0] * len(v)
        for k in range(1, m + 1):
            w = la.mat_vec(H[k - 1], out[m - k])
            acc = [a + b for a, b in zip(acc, w)]
        out.append(tuple(la.div(-a, m) if a != 0 else 0 for a in acc))
    return out


def lambda_matrices(H, K):
    """Operator coefficients Lambda_0..Lambda_K of the same series."""
    if K < 1:
        raise InvalidInput(f"truncation must be at least 1, got {K}", code="invalid-truncation")
    n = len(H[0])
    out = [la.identity(n)]
    for m in range(1, K + 1):
        acc = la.zeros(n)
        for k in range(1, m + 1):
            acc = la.mat_add(acc, la.mat_mul(H[k - 1], out[m - k]))
        out.append(la.mat_scale(Fraction(-1, m), acc))
    return out


def log_series(L):
    """Coefficients of log of a commuting operator series with L_0 = I.

    From Lambda' = (log Lambda)' Lambda:
    m Lambda_m = sum_{k=1}^m k G_k Lambda_{m-k}.
    """
    n = len(L[0])
    if L[0] != la.identity(n):
        raise InvalidInput("constant term must be the identity", code="invalid-series")
    G = [la.zeros(n)]
    for m in range(1, len(L)):
        acc = la.mat_scale(m, L[m])
        for k in range(1, m):
            acc = la.mat_sub(acc, la.mat_scale(k, la.mat_mul(G[k], L[m - k])))
        G.append(la.mat_scale(Fraction(1, m), acc))
    return G


def loop_vanishing_check(H, h0, v, K):
    """Both directions of: h v = 0 iff (h (x) t^k) v = 0 for all k >= 1.

    v should be a highest weight vector that is an eigenvector of h (x) 1.

    H holds the images of h (x) t^k for k = 1..K and h0 the image of h (x) 1.
    Also checks that Lambda_m v = 0 once m exceeds the eigenvalue of h on v,
    and that the logarithm of the Lambda series returns -H_k / k.
    """
    v = tuple(v)
    hv = la.mat_vec(h0, v)
    idx = next((i for i, x in enumerate(v) if x != 0), None)
    lam = la.div(hv[idx], v[idx]) if idx is not None else None
    if lam is None or hv != tuple(lam * x for x in v):
        raise InvalidInput("v is not an eigenvector of h (x) 1", code="not-eigenvector")
    lam = as_cyclotomic(lam).to_fraction()
    series = lambda_series(H, v, K)
    Lambda_zero = [all(x == 0 for x in w) for w in series[1:]]
    loop_zero = [all(x == 0 for x in la.mat_vec(Hk, v)) for Hk in H[:K]]
    G = log_series(lambda_matrices(H, K))
    log_ok = all(G[k] == la.mat_scale(Fraction(-1, k), H[k - 1]) for k in range(1, K + 1))
    bound_ok = all(Lambda_zero[m - 1] for m in range(1, K + 1) if m > lam)
    forward = lam != 0 or (all(Lambda_zero) and all(loop_zero))
    converse = not all(loop_zero) or (all(Lambda_zero) and lam == 0)
    return {
        "eigenvalue": str(lam),
        "lambda_zero": Lambda_zero,
        "loop_zero": loop_zero,
        "log_recovers_loop": log_ok,
        "vanishing_above_eigenvalue": bound_ok,
        "forward": forward,
        "converse": converse,
        "holds": forward and converse and log_ok and bound_ok,
    }


def _weight_vectors(h0, vectors, dim):
    """Split vectors along the eigenspaces of a diagonal h0."""
    diag = _diagonal(h0)
    groups = {}
    for c in range(dim):
        groups.setdefault(diag[c], []).append(c)
    out = la.Span(dim)
    for v in vectors:
        for coords in groups.values():
            w = [v[c] if c in coords else 0 for c in range(dim)]
            if any(x != 0 for x in w):
                out.add(w)
    return out.basis()


def loop_vanishing_report(rep, i=0, K=6):
    """Run :func:`loop_vanishing_check` on the highest weight vectors of h_1 (x) 1.

    Needs h_1 (x) 1 to act diagonally in the coordinates of ``rep``, which
    holds for all the built-in representations.
    """
    d = rep.d
    h = la.mat_sub(la.unit(d, 0, 0), la.unit(d, 1, 1))
    h0 = rep.generator(h, (0,) * rep.q.n)
    if _diagonal(h0) is None:
        raise InvalidInput("h_1 does not act diagonally on this representation", code="not-diagonal")
    H = loop_cartan_images(rep, i, K, h)
    out = []
    for v in _weight_vectors(h0, vplus(rep), rep.dim):
        res = loop_vanishing_check(H, h0, v, K)
        res["vector"] = [as_cyclotomic(x).to_json() for x in v]
        out.append(res)
    return {"direction": i + 1, "truncation": K, "vectors": out, "holds": all(r["holds"] for r in out)}


# -- graded module ------------------------------------------------------------


class GradedVector:
    """Finite sum of w (x) t^m, stored as {grade: vector}."""

    __slots__ = ("parts",)

    def __init__(self, parts=None):
        self.parts = {}
        for m, w in (parts or {}).items():
            w = tuple(w)
            if any(x != 0 for x in w):
                self.parts[tuple(m)] = w

    @classmethod
    def single(cls, w, m):
        return cls({tuple(m): w})

    def __add__(self, other):
        out = dict(self.parts)
        for m, w in other.parts.items():
            out[m] = tuple(a + b for a, b in zip(out[m], w)) if m in out else w
        return GradedVector(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return GradedVector({m: tuple(c * x for x in w) for m, w in self.parts.items()})

    def __eq__(self, other):
        return isinstance(other, GradedVector) and self.parts == other.parts

    def is_zero(self):
        return not self.parts

    def __repr__(self):
        return " + ".join(f"{list(map(str, w))}@t^{m}" for m, w in sorted(self.parts.items())) or "0"


class GradedModule:
    def __init__(self, rep):
        self.rep = rep
        self.d, self.q = rep.d, rep.q

    @property
    def slice_dim(self):
        return self.rep.dim

    def generators(self, r):
        """Basis of the degree-r piece of sl_d(C_q) as matrices."""
        d = self.d
        gens = [la.unit(d, i, j) for i in range(d) for j in range(d) if i != j]
        gens += [la.mat_sub(la.unit(d, i, i), la.unit(d, i + 1, i + 1)) for i in range(d - 1)]
        if not radf_basis(self.q).contains(tuple(r)):
            gens.append(la.identity(d))
        return gens


def act(module, x, v):
    rep = module.rep
    out = {}

    def add(m, w):
        out[m] = tuple(a + b for a, b in zip(out[m], w)) if m in out else tuple(w)

    for a, X in x.mat.items():
        A = rep.matrix(ToroidalElement.homogeneous(x.d, x.q, X, a))
        for m, w in v.parts.items():
            add(tuple(i + j for i, j in zip(m, a)), la.mat_vec(A, w))
    if any(c != 0 for c in x.der):
        for m, w in v.parts.items():
            s = sum((c * mi for c, mi in zip(x.der, m)), 0)
            if s != 0:
                add(m, tuple(s * y for y in w))
    # HC_1 acts by zero
    return GradedVector(out)


@dataclass
class WindowReport:
    B: int
    dims: dict
    seeds: list
    spans: dict = field(default=None, repr=False)

    def total(self):
        return sum(self.dims.values())

    def to_json(self):
        return {
            "window": self.B,
            "dims": [{"grade": list(m), "dim": k} for m, k in sorted(self.dims.items()) if k],
            "seeds": [{"grade": list(m), "vector": [as_cyclotomic(x).to_json() for x in w]} for m, w in self.seeds],
            "total": self.total(),
        }


def _window(B, n):
    return list(product(range(-B, B + 1), repeat=n))


def _in_window(m, B):
    return all(-B <= x <= B for x in m)


def submodule_window(module, seeds, B):
    """Closure of the seeds under every homogeneous generator, kept inside [-B, B]^n."""
    if B < 1:
        raise InvalidInput(f"window bound must be at least 1, got {B}", code="invalid-window")
    if isinstance(seeds, GradedVector):
        seeds = [seeds]
    rep, n = module.rep, module.q.n
    spans = {}
    queue = []
    seed_list = []
    for s in seeds:
        for m, w in s.parts.items():
            if not _in_window(m, B):
                raise InvalidInput(f"seed grade {m} outside the window", code="invalid-window")
            seed_list.append((m, w))
            sp = spans.setdefault(m, la.Span(rep.dim))
            if sp.add(w):
                queue.append((m, w))
    shifts = _window(2 * B, n)
    gens = {}
    while queue:
        m, w = queue.pop()
        for r in shifts:
            target = tuple(a + b for a, b in zip(m, r))
            if not _in_window(target, B):
                continue
            sp = spans.setdefault(target, la.Span(rep.dim))
            if len(sp) == rep.dim:
                continue
            if r not in gens:
                gens[r] = [rep.generator(X, r) for X in module.generators(r)]
            for A in gens[r]:
                u = la.mat_vec(A, w)
                if any(x != 0 for x in u) and sp.add(u):
                    queue.append((target, u))
    dims = {m: len(sp) for m, sp in spans.items()}
    return WindowReport(B, dims, seed_list, spans)


@dataclass
class Decomposition:
    B: int
    components: list
    fingerprints: list
    classes: list

    def to_json(self):
        return {
            "window": self.B,
            "components": [c.to_json() for c in self.components],
            "classes": [[i for i in cls] for cls in self.classes],
            "class_count": len(self.classes),
        }


def _loop_degrees(n):
    units = [tuple(int(i == j) for i in range(n)) for j in range(n)]
    units += [tuple(-x for x in u) for u in units]
    return [(a, b) for a in units for b in units]


def _fingerprint(module, comp, top_grade, top, inner):
    """Shift-invariant data attached to a component.

    Per-grade dimensions relative to the seed grade on a small box, the
    Dynkin labels of the top vectors, and traces of the grade-preserving
    loops h t^a . h t^b . h t^(-a-b) on the top space.  All of these are
    invariant under module isomorphisms that shift the grading.
    """
    rep, d, n = module.rep, module.d, module.q.n
    rel = tuple(
        comp.dims.get(tuple(g + s for g, s in zip(top_grade, shift)), 0) for shift in _window(inner, n)
    )
    labels = tuple(hdot_weights(rep, top))
    traces = []
    if d >= 2:
        h = la.mat_sub(la.unit(d, 0, 0), la.unit(d, 1, 1))
        for a, b in _loop_degrees(n):
            c = tuple(-x - y for x, y in zip(a, b))
            P = la.mat_mul(rep.generator(h, a), la.mat_mul(rep.generator(h, b), rep.generator(h, c)))
            R = _restrict(P, top)
            traces.append(la.trace(R) if R is not None else None)
    return (rel, labels, tuple(traces))


def decompose_window(module, B=3, seed_box=1):
    """Generate a component from every highest weight seed and group them.

    Seeds are w (x) t^m with w in vplus and m in [-seed_box, seed_box]^n.  A
    seed already inside the sum of earlier components is skipped.  Components
    are grouped by a fingerprint that is invariant under grade shifts.
    """
    if B < 2:
        raise InvalidInput(f"window bound must be at least 2, got {B}", code="invalid-window")
    rep, n = module.rep, module.q.n
    top = vplus(rep)
    found = {}
    components = []
    tops = []
    for m in _window(seed_box, n):
        sp = found.setdefault(m, la.Span(rep.dim))
        for w in top:
            if sp.contains(w):
                continue
            comp = submodule_window(module, GradedVector.single(w, m), B)
            components.append(comp)
            for g, s in comp.spans.items():
                tgt = found.setdefault(g, la.Span(rep.dim))
                for v in s.basis():
                    tgt.add(v)
            # top space of the component at its seed grade
            tspan = la.Span(rep.dim, comp.spans[m].basis())
            tvecs = [v for v in _intersect(tspan.basis(), top, rep.dim)]
            tops.append((m, tvecs))
    inner = max(1, B - seed_box - 1)
    fps = [_fingerprint(module, c, m, t, inner) for c, (m, t) in zip(components, tops)]
    classes = []
    keys = []
    for i, fp in enumerate(fps):
        for key, cls in zip(keys, classes):
            if key == fp:
                cls.append(i)
                break
        else:
            keys.append(fp)
            classes.append([i])
    return Decomposition(B, components, fps, classes)


def _intersect(U, W, dim):
    """Basis of span(U) & span(W)."""
    if not U or not W:
        return []
    # solve sum x_i u_i = sum y_j w_j
    cols = [tuple(u) for u in U] + [tuple(-x for x in w) for w in W]
    A = la.transpose(cols)
    out = la.Span(dim)
    for sol in la.nullspace(A, len(cols)):
        v = [0] * dim
        for coef, u in zip(sol[: len(U)], U):
            if coef != 0:
                v = [a + coef * b for a, b in zip(v, u)]
        out.add(v)
    return out.basis()


# -- weights of the graded module -------------------------------------------------


def weight_multiplicities(rep):
    """{Dynkin labels: multiplicity} for the h_i (x) 1 action on V."""
    full = [tuple(int(i == j) for i in range(rep.dim)) for j in range(rep.dim)]
    out = {}
    for key in hdot_weights(rep, full):
        out[key] = out.get(key, 0) + 1
    return out


def check_weyl_invariance(rep, roots, grades):
    """dim V_lambda = dim V_{r lambda} for weights mu + delta_m of V (x) C[Z^n]."""
    mult = weight_multiplicities(rep)
    d, n = rep.d, rep.q.n

    def multiplicity(lam):
        if any(x != 0 for x in lam.omega) or any(x.denominator != 1 for x in lam.delta):
            return 0
        return mult.get(tuple(lam.labels()), 0)

    for labels, k in mult.items():
        for m in grades:
            lam = weight_from_labels(d, n, labels, delta=m)
            for g in roots:
                mu = reflect(lam, g)
                if multiplicity(mu) != k:
                    return False
    return True

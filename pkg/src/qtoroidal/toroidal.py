"""The toroidal Lie algebra sl_d(C_q) + HC_1(C_q) + D.

Elements live in gl_d(C_q) coordinates: a dict from degree to a d x d
matrix, an :class:`HC1Element`, and a length-n vector of derivation
coefficients.  Membership in sl_d(C_q) is a predicate, not a structural
constraint, so intermediate results may leave the trace-zero locus.
"""

from . import linalg as la
from .errors import InvalidInput
from .hc1 import HC1Element, derivation_act, normalize_pair, central_element
from .roots_weyl import Root
from .scalars import Cyclotomic, as_cyclotomic, root_of_unity
from .torus_form import radf_basis

__all__ = [
    "ToroidalElement",
    "Root",
    "bracket",
    "jacobi_residual",
    "validate_membership",
    "root_component",
    "cartan_component",
    "root_decomposition",
    "cartan_basis",
    "real_root_vector",
    "random_homogeneous",
    "project_sl",
]


def _clean_matrix(X):
    return tuple(tuple(x for x in row) for row in X)


class ToroidalElement:
    __slots__ = ("d", "q", "mat", "hc", "der")

    def __init__(self, d, q, mat=None, hc=None, der=None):
        if d < 2:
            raise InvalidInput(f"matrix size must be at least 2, got {d}")
        self.d, self.q = d, q
        clean = {}
        for a, X in (mat or {}).items():
            a = q.check_degree(a)
            if len(X) != d or any(len(row) != d for row in X):
                raise InvalidInput(f"matrix at degree {a} is not {d}x{d}")
            if not la.is_zero_matrix(X):
                clean[a] = _clean_matrix(X)
        self.mat = clean
        if hc is None:
            hc = HC1Element(q)
        elif hc.q != q:
            raise InvalidInput("HC1 part lives over a different torus", code="invalid-operand")
        self.hc = hc
        der = tuple(der) if der is not None else (0,) * q.n
        if len(der) != q.n:
            raise InvalidInput(f"derivation part needs {q.n} coefficients")
        self.der = der

    # -- constructors ----------------------------------------------------
    @classmethod
    def zero(cls, d, q):
        return cls(d, q)

    @classmethod
    def homogeneous(cls, d, q, X, a):
        return cls(d, q, {tuple(a): X})

    @classmethod
    def unit(cls, d, q, i, j, a, coef=1):
        """coef * E_ij (x) t^a with 0-based i, j."""
        return cls(d, q, {tuple(a): la.unit(d, i, j, coef)})

    @classmethod
    def derivation(cls, d, q, i, coef=1):
        return cls(d, q, der=tuple(coef if k == i else 0 for k in range(q.n)))

    @classmethod
    def central(cls, d, q, hc):
        return cls(d, q, hc=hc)

    # -- vector space structure -----------------------------------------
    def _same(self, other):
        if not isinstance(other, ToroidalElement) or (other.d, other.q) != (self.d, self.q):
            raise InvalidInput("operands have different ambient data", code="invalid-operand")

    def __add__(self, other):
        self._same(other)
        mat = dict(self.mat)
        for a, X in other.mat.items():
            mat[a] = la.mat_add(mat[a], X) if a in mat else X
        der = tuple(x + y for x, y in zip(self.der, other.der))
        return ToroidalElement(self.d, self.q, mat, self.hc + other.hc, der)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return ToroidalElement(
            self.d,
            self.q,
            {a: la.mat_scale(c, X) for a, X in self.mat.items()},
            self.hc.scale(c),
            tuple(c * x for x in self.der),
        )

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if isinstance(other, ToroidalElement):
            return (
                (self.d, self.q) == (other.d, other.q)
                and self.mat == other.mat
                and self.hc == other.hc
                and all(x == y for x, y in zip(self.der, other.der))
            )
        if other == 0:
            return self.is_zero()
        return NotImplemented

    def __hash__(self):
        return hash((self.d, frozenset(self.mat), self.hc))

    def is_zero(self):
        return not self.mat and self.hc.is_zero() and all(x == 0 for x in self.der)

    def degrees(self):
        """Z^n degrees occurring in the element (the derivation part sits in degree 0)."""
        out = set(self.mat) | set(self.hc.degrees())
        if any(x != 0 for x in self.der):
            out.add((0,) * self.q.n)
        return sorted(out)

    def homogeneous_parts(self):
        """Split into pieces of a single Z^n degree."""
        parts = {}
        for a in self.degrees():
            parts[a] = ToroidalElement(
                self.d,
                self.q,
                {a: self.mat[a]} if a in self.mat else None,
                self.hc.component(a),
                self.der if not any(a) else None,
            )
        return parts

    def trace_terms(self):
        """Tr of the matrix part as {degree: scalar}."""
        out = {}
        for a, X in self.mat.items():
            t = la.trace(X)
            if t != 0:
                out[a] = t
        return out

    def __repr__(self):
        parts = [f"{list(X)}@t^{a}" for a, X in sorted(self.mat.items())]
        if not self.hc.is_zero():
            parts.append(repr(self.hc))
        if any(x != 0 for x in self.der):
            parts.append(f"der{tuple(str(x) for x in self.der)}")
        return " + ".join(parts) or "0"

    # -- serialization ---------------------------------------------------
    def to_json(self):
        return {
            "mat": [
                {"entries": [[as_cyclotomic(x).to_json() for x in row] for row in X], "exp": list(a)}
                for a, X in sorted(self.mat.items())
            ],
            "hc1": self.hc.to_json(),
            "der": [as_cyclotomic(x).to_json() for x in self.der],
        }

    @classmethod
    def from_json(cls, d, q, obj):
        try:
            mat = {}
            for blk in obj.get("mat", []):
                a = tuple(int(x) for x in blk["exp"])
                X = tuple(tuple(Cyclotomic.from_json(x) for x in row) for row in blk["entries"])
                mat[a] = la.mat_add(mat[a], X) if a in mat else X
            hc = HC1Element.from_json(q, obj["hc1"]) if "hc1" in obj else None
            der = [Cyclotomic.from_json(x) for x in obj["der"]] if "der" in obj else None
        except (KeyError, TypeError, AttributeError) as exc:
            raise InvalidInput(f"malformed toroidal element: {exc}") from exc
        return cls(d, q, mat, hc, der)


def bracket(x, y):
    x._same(y)
    d, q = x.d, x.q
    M = q.conductor
    mat = {}
    hc = HC1Element(q)

    def add(a, X):
        mat[a] = la.mat_add(mat[a], X) if a in mat else X

    for a, X in x.mat.items():
        for b, Y in y.mat.items():
            XY, YX = la.mat_mul(X, Y), la.mat_mul(Y, X)
            s_ab = root_of_unity(M, q.sigma_exp(a, b))
            s_ba = root_of_unity(M, q.sigma_exp(b, a))
            c = tuple(i + j for i, j in zip(a, b))
            add(c, la.mat_sub(la.mat_scale(s_ab, XY), la.mat_scale(s_ba, YX)))
            tr = la.trace(XY)
            if tr != 0:
                hc = hc + normalize_pair(q, tr, a, b)
    for i, ci in enumerate(x.der):
        if ci != 0:
            for b, Y in y.mat.items():
                if b[i]:
                    add(b, la.mat_scale(ci * b[i], Y))
            hc = hc + derivation_act(i, y.hc).scale(ci)
    for i, ci in enumerate(y.der):
        if ci != 0:
            for a, X in x.mat.items():
                if a[i]:
                    add(a, la.mat_scale(-ci * a[i], X))
            hc = hc - derivation_act(i, x.hc).scale(ci)
    return ToroidalElement(d, q, mat, hc)


def jacobi_residual(x, y, z):
    return bracket(bracket(x, y), z) + bracket(bracket(y, z), x) + bracket(bracket(z, x), y)


def validate_membership(x):
    """True iff Tr of the matrix part lies in [C_q, C_q]."""
    lattice = radf_basis(x.q)
    return all(not lattice.contains(a) for a in x.trace_terms())


def _diag_part(X):
    d = len(X)
    return tuple(tuple(X[i][j] if i == j else 0 for j in range(d)) for i in range(d))


def root_component(x, root):
    root.check(x.d, x.q.n)
    d, q, m = x.d, x.q, root.m
    X = x.mat.get(m)
    if root.kind == "real":
        i, j = root.alpha
        if X is None or X[i][j] == 0:
            return ToroidalElement(d, q)
        return ToroidalElement.unit(d, q, i, j, m, X[i][j])
    mat = {m: _diag_part(X)} if X is not None else None
    # outside rad f the HC_1 component is empty, so this covers both cases
    return ToroidalElement(d, q, mat, x.hc.component(m))


def cartan_component(x):
    zero = (0,) * x.q.n
    X = x.mat.get(zero)
    mat = {zero: _diag_part(X)} if X is not None else None
    return ToroidalElement(x.d, x.q, mat, x.hc.component(zero), x.der)


def root_decomposition(x):
    """{root or 'cartan': component}, only nonzero components listed."""
    out = {}
    c = cartan_component(x)
    if not c.is_zero():
        out["cartan"] = c
    for m in x.degrees():
        for i in range(x.d):
            for j in range(x.d):
                if i != j:
                    r = Root.real(i, j, m)
                    y = root_component(x, r)
                    if not y.is_zero():
                        out[r] = y
        if any(m):
            r = Root.null(m)
            y = root_component(x, r)
            if not y.is_zero():
                out[r] = y
    return out


def cartan_basis(d, q):
    """h_i = E_ii - E_{i+1,i+1}, then c_1..c_n, then d_1..d_n."""
    zero = (0,) * q.n
    out = []
    for i in range(d - 1):
        H = la.mat_sub(la.unit(d, i, i), la.unit(d, i + 1, i + 1))
        out.append(ToroidalElement.homogeneous(d, q, H, zero))
    out.extend(ToroidalElement.central(d, q, central_element(q, i)) for i in range(q.n))
    out.extend(ToroidalElement.derivation(d, q, i) for i in range(q.n))
    return out


def real_root_vector(d, q, i, j, m, coef=1):
    return ToroidalElement.unit(d, q, i, j, m, coef)


def _random_scalar(rng, M):
    c = rng.randint(-3, 3)
    if M > 2 and rng.random() < 0.5:
        return c * root_of_unity(M, rng.randrange(M))
    return c


def random_homogeneous(d, q, rng, degree, with_center=True):
    """Random element of degree ``degree`` inside sl_d(C_q) + HC_1 + D."""
    M = q.conductor
    a = q.check_degree(degree)
    X = [[_random_scalar(rng, M) for _ in range(d)] for _ in range(d)]
    if radf_basis(q).contains(a):
        # keep the trace out of the center
        X[d - 1][d - 1] = X[d - 1][d - 1] - la.trace(X)
        hc = None
        if with_center:
            terms = {(i, a): _random_scalar(rng, M) for i in range(q.n)}
            hc = HC1Element(q, terms)
        der = None
        if with_center and not any(a):
            der = tuple(_random_scalar(rng, M) for _ in range(q.n))
        return ToroidalElement(d, q, {a: tuple(map(tuple, X))}, hc, der)
    return ToroidalElement(d, q, {a: tuple(map(tuple, X))})


def project_sl(x):
    """Drop the I (x) Z(C_q) part, i.e. the rad f supported trace.

    gl_d(C_q) = sl_d(C_q) + I (x) Z(C_q) with the second summand central, so
    this is a Lie homomorphism modulo HC_1.
    """
    lattice = radf_basis(x.q)
    d = x.d
    mat = {}
    for a, X in x.mat.items():
        tr = la.trace(X)
        if tr != 0 and lattice.contains(a):
            X = la.mat_sub(X, la.identity(d, la.div(tr, d)))
        mat[a] = X
    return ToroidalElement(d, x.q, mat, x.hc, x.der)

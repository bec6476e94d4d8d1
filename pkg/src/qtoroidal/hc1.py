"""First cyclic homology HC_1(C_q), the kernel of the central extension.

Elements are kept on the spanning symbols <t_i, t^r t_i^-1> with r in rad f,
keyed by ``(i, r)`` with ``i`` 0-based.  For r != 0 the symbols of degree r
satisfy one relation, sum_i r_i <t_i, t^r t_i^-1> = 0, and the canonical form
eliminates the first index with r_i != 0.

:func:`bruteforce_dim` recomputes graded dimensions straight from the
quotient (C_q (x) C_q) / J and serves as an oracle for the normal form.
"""

from fractions import Fraction
from itertools import product

from .errors import InvalidInput, VerificationFailure
from .linalg import div
from .scalars import Cyclotomic, as_cyclotomic, root_of_unity
from .torus_form import radf_basis

__all__ = [
    "HC1Element",
    "normalize_pair",
    "graded_dim",
    "bruteforce_dim",
    "derivation_act",
    "TensorQuotient",
    "central_element",
]


def _pivot(r):
    return next((i for i, x in enumerate(r) if x), None)


def _canonical(q, raw):
    by_degree = {}
    for (i, r), c in raw.items():
        if c != 0:
            slot = by_degree.setdefault(r, {})
            slot[i] = slot.get(i, 0) + c
    out = {}
    for r, coeffs in by_degree.items():
        p = _pivot(r)
        if p is not None:
            cp = coeffs.pop(p, 0)
            if cp != 0:
                for i, ri in enumerate(r):
                    if i != p and ri:
                        coeffs[i] = coeffs.get(i, 0) - cp * Fraction(ri, r[p])
        for i, c in coeffs.items():
            if c != 0:
                out[(i, r)] = c
    return out


class HC1Element:
    __slots__ = ("q", "terms")

    def __init__(self, q, terms=None):
        self.q = q
        lattice = radf_basis(q)
        raw = {}
        for (i, r), c in (terms or {}).items():
            r = q.check_degree(r)
            if not 0 <= i < q.n:
                raise InvalidInput(f"generator index {i} out of range")
            if not lattice.contains(r):
                raise InvalidInput(f"degree {r} is not in rad f")
            raw[(i, r)] = raw.get((i, r), 0) + c
        self.terms = _canonical(q, raw)

    @classmethod
    def zero(cls, q):
        return cls(q)

    def __add__(self, other):
        if other.q != self.q:
            raise InvalidInput("operands live in different quantum tori", code="invalid-operand")
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return HC1Element(self.q, out)

    def __neg__(self):
        return HC1Element(self.q, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return HC1Element(self.q, {k: c * x for k, x in self.terms.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if isinstance(other, HC1Element):
            return self.q == other.q and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def degrees(self):
        return sorted({r for _, r in self.terms})

    def component(self, r):
        return HC1Element(self.q, {k: c for k, c in self.terms.items() if k[1] == tuple(r)})

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*<t_{i+1}, t^{r} t_{i+1}^-1>" for (i, r), c in sorted(self.terms.items()))

    def to_json(self):
        return {
            "terms": [
                {"i": i + 1, "r": list(r), "coef": as_cyclotomic(c).to_json()}
                for (i, r), c in sorted(self.terms.items())
            ]
        }

    @classmethod
    def from_json(cls, q, obj):
        try:
            terms = {}
            for t in obj["terms"]:
                key = (int(t["i"]) - 1, tuple(int(x) for x in t["r"]))
                terms[key] = terms.get(key, 0) + Cyclotomic.from_json(t["coef"])
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"malformed HC1 element: {exc}") from exc
        return cls(q, terms)


def central_element(q, i):
    """c_i = <t_i, t_i^-1>."""
    return HC1Element(q, {(i, (0,) * q.n): 1})


def normalize_pair(q, c, a, b):
    """Canonical form of c * <t^a, t^b>, zero unless a + b lies in rad f."""
    a, b = q.check_degree(a), q.check_degree(b)
    r = tuple(x + y for x, y in zip(a, b))
    if c == 0 or not radf_basis(q).contains(r):
        return HC1Element(q)
    s = root_of_unity(q.conductor, q.sigma_exp(a, b)) * c
    return HC1Element(q, {(i, r): s * ai for i, ai in enumerate(a) if ai})


def graded_dim(q, r):
    r = q.check_degree(r)
    if not radf_basis(q).contains(r):
        return 0
    return q.n if not any(r) else q.n - 1


def derivation_act(i, x):
    """[d_i, x] on HC_1: each symbol of degree r is scaled by r_i."""
    if not 0 <= i < x.q.n:
        raise InvalidInput(f"derivation index {i} out of range")
    return HC1Element(x.q, {(k, r): c * r[i] for (k, r), c in x.terms.items() if r[i]})


class TensorQuotient:
    """The degree-r piece of (C_q (x) C_q) / J, truncated to a finite box.

    Unknowns are the monomial tensors t^a (x) t^b with a + b = r and both
    |a|, |b| <= D in the sup norm.  Every relation of J whose terms all lie
    among the unknowns is imposed:

        t^a (x) t^b + t^b (x) t^a
        t^a t^b (x) t^c + t^b t^c (x) t^a + t^c t^a (x) t^b,   a + b + c = r

    The first family is used to fold t^b (x) t^a onto -t^a (x) t^b (a < b),
    so only the second family enters the elimination.  Too small a box
    leaves relations out and can only overestimate the dimension.

    HC_1 is the kernel of <x, y> -> xy - yx on this quotient, which is zero
    on rad f degrees and onto the one-dimensional [C_q, C_q]_r elsewhere;
    :attr:`hc1_dim` subtracts that rank.
    """

    def __init__(self, q, r, D):
        self.q = q
        self.r = q.check_degree(r)
        self.D = int(D)
        box = list(product(range(-self.D, self.D + 1), repeat=q.n))
        self.tensors = [a for a in box if max(abs(ri - x) for ri, x in zip(self.r, a)) <= self.D]
        self._slot = {}
        self.variables = []
        for a in self.tensors:
            b = self._partner(a)
            if a < b:
                self._slot[a] = (len(self.variables), 1)
                self.variables.append((a, b))
        for a in self.tensors:
            b = self._partner(a)
            if b < a:
                self._slot[a] = (self._slot[b][0], -1)
        self._pivots = {}
        self._build(box)

    def _partner(self, a):
        return tuple(ri - x for ri, x in zip(self.r, a))

    def _scalar(self, k):
        M = self.q.conductor
        if k == 0:
            return 1
        if 2 * k == M:
            return -1
        return root_of_unity(M, k)

    def _term(self, row, a, coef):
        # add coef * t^a (x) t^(r - a) to row; the diagonal tensor is zero in J
        hit = self._slot.get(a)
        if hit is None:
            return
        k, sign = hit
        row[k] = row.get(k, 0) + sign * coef

    def _build(self, box):
        q, r = self.q, self.r
        inside = set(self.tensors)
        boxset = set(box)
        for a in box:
            for b in box:
                c = tuple(ri - x - y for ri, x, y in zip(r, a, b))
                if c not in boxset or min((a, b, c), (b, c, a), (c, a, b)) != (a, b, c):
                    continue
                ab = tuple(x + y for x, y in zip(a, b))
                bc = tuple(x + y for x, y in zip(b, c))
                ca = tuple(x + y for x, y in zip(c, a))
                if ab not in inside or bc not in inside or ca not in inside:
                    continue
                row = {}
                self._term(row, ab, self._scalar(q.sigma_exp(a, b)))
                self._term(row, bc, self._scalar(q.sigma_exp(b, c)))
                self._term(row, ca, self._scalar(q.sigma_exp(c, a)))
                if self._commutator_image(row) != 0:
                    raise VerificationFailure(f"relation {(a, b, c)} is not killed by the commutator map")
                self._insert(row)

    def _commutator_image(self, row):
        # <t^a, t^b> -> (sigma(a, b) - sigma(b, a)) t^r
        q = self.q
        total = 0
        for k, v in row.items():
            a, b = self.variables[k]
            d = self._scalar(q.sigma_exp(a, b)) - self._scalar(q.sigma_exp(b, a))
            if d != 0:
                total = total + v * d
        return total

    def _reduce(self, row):
        row = {k: v for k, v in row.items() if v != 0}
        while row:
            hit = min(row)
            if hit not in self._pivots:
                hits = [k for k in row if k in self._pivots]
                if not hits:
                    return row
                hit = min(hits)
            c = row[hit]
            for k, v in self._pivots[hit].items():
                nv = row.get(k, 0) - c * v
                if nv != 0:
                    row[k] = nv
                else:
                    row.pop(k, None)
        return row

    def _insert(self, row):
        row = self._reduce(row)
        if not row:
            return False
        p = min(row)
        inv = div(1, row[p])
        self._pivots[p] = {k: v * inv for k, v in row.items()}
        return True

    @property
    def rank(self):
        return len(self._pivots)

    @property
    def dim(self):
        """Dimension of the truncated quotient itself."""
        return len(self.variables) - self.rank

    @property
    def hc1_dim(self):
        surjective = any(self._commutator_image({k: 1}) != 0 for k in range(len(self.variables)))
        return self.dim - (1 if surjective else 0)

    def in_relations(self, vector):
        """True when sum c * (t^a (x) t^(r-a)), given as {a: c}, lies in J."""
        row = {}
        for a, c in vector.items():
            a = tuple(a)
            if a not in self._slot and a not in self.tensors:
                raise InvalidInput(f"tensor with first factor {a} is outside the box")
            self._term(row, a, c)
        return not self._reduce(row)


def bruteforce_dim(q, r, D):
    """Graded dimension of HC_1 recomputed from the truncated tensor quotient."""
    return TensorQuotient(q, r, D).hc1_dim

"""The associative algebra C_q of noncommutative Laurent polynomials."""

from .errors import DivisionByZero, InvalidInput
from .scalars import Cyclotomic, as_cyclotomic, root_of_unity
from .torus_form import radf_basis

__all__ = [
    "TorusElement",
    "multiply",
    "commutator",
    "monomial_inverse",
    "split_center",
]


class TorusElement:
    """A finite sum of coefficient * t^a."""

    __slots__ = ("q", "terms")

    def __init__(self, q, terms=None):
        self.q = q
        clean = {}
        for a, c in (terms or {}).items():
            if c != 0:
                clean[q.check_degree(a)] = c
        self.terms = clean

    @classmethod
    def monomial(cls, q, a, coef=1):
        return cls(q, {tuple(a): coef})

    @classmethod
    def generator(cls, q, i, power=1):
        return cls.monomial(q, tuple(power if k == i else 0 for k in range(q.n)))

    @classmethod
    def one(cls, q):
        return cls.monomial(q, (0,) * q.n)

    def _same(self, other):
        if not isinstance(other, TorusElement) or other.q != self.q:
            raise InvalidInput("operands live in different quantum tori", code="invalid-operand")

    def __add__(self, other):
        self._same(other)
        out = dict(self.terms)
        for a, c in other.terms.items():
            out[a] = out.get(a, 0) + c
        return TorusElement(self.q, out)

    def __neg__(self):
        return TorusElement(self.q, {a: -c for a, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return TorusElement(self.q, {a: c * x for a, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, TorusElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if isinstance(other, TorusElement):
            return self.q == other.q and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def degrees(self):
        return sorted(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*t^{a}" for a, c in sorted(self.terms.items()))

    def to_json(self):
        return {
            "terms": [
                {"exp": list(a), "coef": as_cyclotomic(c).to_json()}
                for a, c in sorted(self.terms.items())
            ]
        }

    @classmethod
    def from_json(cls, q, obj):
        try:
            terms = {}
            for t in obj["terms"]:
                a = tuple(int(x) for x in t["exp"])
                terms[a] = terms.get(a, 0) + Cyclotomic.from_json(t["coef"])
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"malformed torus element: {exc}") from exc
        return cls(q, terms)


def _add_deg(a, b):
    return tuple(x + y for x, y in zip(a, b))


def multiply(x, y):
    """Bilinear extension of t^a t^b = sigma(a, b) t^(a+b)."""
    x._same(y)
    q = x.q
    M = q.conductor
    out = {}
    for a, c in x.terms.items():
        for b, d in y.terms.items():
            s = root_of_unity(M, q.sigma_exp(a, b))
            k = _add_deg(a, b)
            out[k] = out.get(k, 0) + s * c * d
    return TorusElement(q, out)


def commutator(x, y):
    return multiply(x, y) - multiply(y, x)


def monomial_inverse(q, c, a):
    """Two-sided inverse of c * t^a, namely c^-1 sigma(a, a) t^(-a)."""
    c = as_cyclotomic(c, q.conductor)
    if c.is_zero():
        raise DivisionByZero("monomial with zero coefficient has no inverse")
    a = q.check_degree(a)
    s = root_of_unity(q.conductor, q.sigma_exp(a, a))
    return TorusElement.monomial(q, tuple(-x for x in a), c.inverse() * s)


def split_center(x):
    """Split x into its central part and its part in [C_q, C_q]."""
    lattice = radf_basis(x.q)
    z, c = {}, {}
    for a, coef in x.terms.items():
        (z if lattice.contains(a) else c)[a] = coef
    return TorusElement(x.q, z), TorusElement(x.q, c)

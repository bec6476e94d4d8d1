"""Weights, roots, coroots and Weyl reflections for the toroidal Cartan.

Weights use the basis {alpha_1..alpha_{d-1}, delta_1..delta_n, omega_1..omega_n}
with (alpha_i, alpha_j) the A_{d-1} Cartan matrix, (delta_i, omega_j) = [i == j]
and every other pairing zero.  Under this form the value of a weight on c_i is
its omega_i coordinate and its value on d_i is its delta_i coordinate.
"""

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInput
from .scalars import Cyclotomic

__all__ = [
    "Weight",
    "Root",
    "cartan_matrix",
    "inner",
    "coroot_eval",
    "reflect",
    "translate",
    "is_dominant_integral",
    "fundamental_weight",
    "weight_from_labels",
    "simple_roots",
    "orbit",
]


def _frac(x):
    if isinstance(x, Cyclotomic):
        return x.to_fraction()
    return Fraction(x)


def cartan_matrix(d):
    r = d - 1
    return tuple(
        tuple(2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(r)) for i in range(r)
    )


@dataclass(frozen=True)
class Weight:
    finite: tuple
    delta: tuple
    omega: tuple

    def __post_init__(self):
        if len(self.delta) != len(self.omega):
            raise InvalidInput("delta and omega parts must have the same length")
        object.__setattr__(self, "finite", tuple(_frac(x) for x in self.finite))
        object.__setattr__(self, "delta", tuple(_frac(x) for x in self.delta))
        object.__setattr__(self, "omega", tuple(_frac(x) for x in self.omega))

    @property
    def d(self):
        return len(self.finite) + 1

    @property
    def n(self):
        return len(self.delta)

    @classmethod
    def zero(cls, d, n):
        return cls((0,) * (d - 1), (0,) * n, (0,) * n)

    @classmethod
    def alpha(cls, d, n, i):
        return cls(tuple(int(k == i) for k in range(d - 1)), (0,) * n, (0,) * n)

    @classmethod
    def delta_vec(cls, d, n, m):
        return cls((0,) * (d - 1), tuple(m), (0,) * n)

    @classmethod
    def omega_vec(cls, d, n, j):
        return cls((0,) * (d - 1), (0,) * n, tuple(int(k == j) for k in range(n)))

    def _check(self, other):
        if (self.d, self.n) != (other.d, other.n):
            raise InvalidInput("weights have different shapes", code="dimension-mismatch")

    def __add__(self, other):
        self._check(other)
        return Weight(
            tuple(x + y for x, y in zip(self.finite, other.finite)),
            tuple(x + y for x, y in zip(self.delta, other.delta)),
            tuple(x + y for x, y in zip(self.omega, other.omega)),
        )

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = _frac(c)
        return Weight(
            tuple(c * x for x in self.finite),
            tuple(c * x for x in self.delta),
            tuple(c * x for x in self.omega),
        )

    def __rmul__(self, c):
        return self.scale(c)

    def labels(self):
        """(lambda, alpha_i) for i = 1..d-1, the Dynkin labels of the finite part."""
        A = cartan_matrix(self.d)
        return tuple(sum(A[i][j] * self.finite[j] for j in range(self.d - 1)) for i in range(self.d - 1))

    def to_json(self):
        return {
            "finite": [str(x) for x in self.finite],
            "delta": [str(x) for x in self.delta],
            "omega": [str(x) for x in self.omega],
        }

    @classmethod
    def from_json(cls, obj):
        try:
            return cls(
                tuple(Fraction(x) for x in obj["finite"]),
                tuple(Fraction(x) for x in obj["delta"]),
                tuple(Fraction(x) for x in obj["omega"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInput(f"malformed weight: {exc}") from exc


@dataclass(frozen=True)
class Root:
    """A real root (eps_i - eps_j) + delta_m or a null root delta_m.

    ``alpha`` is a 0-based pair (i, j) with i != j, or None for null roots.
    """

    kind: str
    alpha: tuple
    m: tuple

    @classmethod
    def real(cls, i, j, m):
        if i == j:
            raise InvalidInput("a real root needs i != j")
        return cls("real", (int(i), int(j)), tuple(int(x) for x in m))

    @classmethod
    def null(cls, m):
        m = tuple(int(x) for x in m)
        if not any(m):
            raise InvalidInput("delta_0 is not a root")
        return cls("null", None, m)

    @classmethod
    def simple(cls, i, n):
        return cls.real(i, i + 1, (0,) * n)

    def check(self, d, n):
        if len(self.m) != n:
            raise InvalidInput(f"root degree {self.m} has wrong length", code="invalid-degree")
        if self.kind == "real":
            i, j = self.alpha
            if not (0 <= i < d and 0 <= j < d) or i == j:
                raise InvalidInput(f"{self.alpha} is not a root of sl_{d}")
        elif self.kind != "null" or self.alpha is not None:
            raise InvalidInput(f"malformed root {self}")

    def is_positive_finite(self):
        return self.kind == "real" and self.alpha[0] < self.alpha[1]

    def as_weight(self, d):
        n = len(self.m)
        fin = [0] * (d - 1)
        if self.kind == "real":
            i, j = self.alpha
            lo, hi, sign = (i, j, 1) if i < j else (j, i, -1)
            for k in range(lo, hi):
                fin[k] = sign
        return Weight(tuple(fin), self.m, (0,) * n)


def inner(x, y):
    x._check(y)
    A = cartan_matrix(x.d)
    r = x.d - 1
    s = sum(x.finite[i] * A[i][j] * y.finite[j] for i in range(r) for j in range(r))
    s += sum(a * b for a, b in zip(x.delta, y.omega))
    s += sum(a * b for a, b in zip(x.omega, y.delta))
    return Fraction(s)


def coroot_eval(lam, gamma):
    """lambda(gamma^vee) = lambda(alpha^vee) + sum m_i lambda(c_i)."""
    if gamma.kind != "real":
        raise InvalidInput("null roots have no coroot", code="no-coroot")
    gamma.check(lam.d, lam.n)
    alpha = Root.real(*gamma.alpha, (0,) * lam.n).as_weight(lam.d)
    val = inner(lam, alpha)
    return val + sum(mi * c for mi, c in zip(gamma.m, lam.omega))


def reflect(lam, gamma):
    if gamma.kind != "real":
        raise InvalidInput("null roots have no reflection", code="no-reflection")
    return lam - gamma.as_weight(lam.d).scale(coroot_eval(lam, gamma))


def _highest_root(d, n):
    return Weight((1,) * (d - 1), (0,) * n, (0,) * n)


def translate(mu, j):
    """mu - mu(theta^vee) delta_j, defined when c_j acts trivially."""
    if not 0 <= j < mu.n:
        raise InvalidInput(f"index {j} out of range")
    if mu.omega[j] != 0:
        raise InvalidInput(
            f"weight has nonzero value {mu.omega[j]} on c_{j + 1}", code="hypothesis-violated"
        )
    val = inner(mu, _highest_root(mu.d, mu.n))
    return mu - Weight.delta_vec(mu.d, mu.n, tuple(val if k == j else 0 for k in range(mu.n)))


def is_dominant_integral(lam):
    return all(x.denominator == 1 and x >= 0 for x in lam.labels())


def fundamental_weight(d, n, i):
    """The i-th fundamental weight of sl_d (0-based) in the alpha basis."""
    labels = tuple(int(k == i) for k in range(d - 1))
    return weight_from_labels(d, n, labels)


def weight_from_labels(d, n, labels, delta=None, omega=None):
    """Weight whose finite part has the given Dynkin labels."""
    r = d - 1
    # inverse Cartan matrix of A_r: min(i,j)(r+1-max(i,j))/(r+1), 1-based
    inv = [[Fraction(min(i, j) * (r + 1 - max(i, j)), r + 1) for j in range(1, r + 1)] for i in range(1, r + 1)]
    fin = tuple(sum(inv[i][j] * _frac(labels[j]) for j in range(r)) for i in range(r))
    return Weight(fin, tuple(delta or (0,) * n), tuple(omega or (0,) * n))


def simple_roots(d, n):
    """alpha_1..alpha_{d-1} and the affine roots -theta + delta_{e_j}."""
    out = [Root.simple(i, n) for i in range(d - 1)]
    for j in range(n):
        out.append(Root.real(d - 1, 0, tuple(int(k == j) for k in range(n))))
    return out


def orbit(lam, depth, budget=10000, roots=None):
    """Breadth-first piece of the Weyl orbit of lam, at most ``depth`` reflections deep."""
    roots = roots if roots is not None else simple_roots(lam.d, lam.n)
    seen = {lam: 0}
    queue = deque([lam])
    while queue:
        mu = queue.popleft()
        k = seen[mu]
        if k == depth:
            continue
        for g in roots:
            nu = reflect(mu, g)
            if nu not in seen:
                if len(seen) >= budget:
                    raise InvalidInput(f"orbit exceeds budget {budget}", code="budget-exceeded")
                seen[nu] = k + 1
                queue.append(nu)
    return list(seen)

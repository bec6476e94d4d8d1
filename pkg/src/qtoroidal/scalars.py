"""Exact arithmetic in cyclotomic fields Q(zeta_M).

A :class:`Cyclotomic` stores a conductor ``M`` together with the residue of
a rational polynomial in ``zeta_M`` modulo the cyclotomic polynomial
``Phi_M``.  Internally the coefficients are kept as integer numerators over
one positive common denominator, which keeps the hot paths in integer
arithmetic.  Values with different conductors are combined in the field of
conductor ``lcm`` via ``zeta_M -> zeta_L^(L/M)``.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import DivisionByZero, InvalidInput, NotRootOfUnity

__all__ = [
    "Cyclotomic",
    "root_of_unity",
    "arith",
    "order",
    "as_root_of_unity",
    "nth_roots",
    "euler_phi",
    "cyclotomic_poly",
    "lcm",
]


def lcm(a, b):
    return a * b // gcd(a, b)


@lru_cache(maxsize=None)
def _divisors(m):
    small = [d for d in range(1, int(m**0.5) + 1) if m % d == 0]
    return tuple(sorted(set(small + [m // d for d in small])))


@lru_cache(maxsize=None)
def euler_phi(m):
    return sum(1 for k in range(1, m + 1) if gcd(k, m) == 1)


@lru_cache(maxsize=None)
def _mobius(m):
    result, p, x = 1, 2, m
    while p * p <= x:
        if x % p == 0:
            x //= p
            if x % p == 0:
                return 0
            result = -result
        p += 1
    if x > 1:
        result = -result
    return result


def _exact_div(num, den):
    """Divide integer polynomials (low -> high) by a monic divisor."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    assert not any(num), "non-exact cyclotomic division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(m):
    """Integer coefficients of Phi_m, lowest degree first."""
    if m < 1:
        raise InvalidInput(f"conductor must be positive, got {m}", code="invalid-conductor")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in _divisors(m):
        if d < m:
            poly = _exact_div(poly, cyclotomic_poly(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(m):
    # row j holds x^j mod Phi_m for 0 <= j < m; x^m == 1 closes the cycle
    phi = cyclotomic_poly(m)
    deg = len(phi) - 1
    rows = []
    cur = [1] + [0] * (deg - 1)
    for _ in range(m):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for k in range(deg):
                cur[k] -= top * phi[k]
    return tuple(rows)


@lru_cache(maxsize=None)
def _trace_weights(m):
    # normalized trace of zeta_m^j: Ramanujan sum c_m(j) / phi(m)
    out = []
    for j in range(euler_phi(m)):
        r = m // gcd(j, m)
        out.append(Fraction(_mobius(r), euler_phi(r)))
    return tuple(out)


@lru_cache(maxsize=None)
def _units(m):
    return tuple(k for k in range(1, m + 1) if gcd(k, m) == 1)


def _reduce(m, poly):
    deg = euler_phi(m)
    if len(poly) <= deg:
        return tuple(poly) + (0,) * (deg - len(poly))
    table = _power_table(m)
    acc = list(poly[:deg])
    for j in range(deg, len(poly)):
        c = poly[j]
        if c:
            row = table[j % m]
            for k in range(deg):
                if row[k]:
                    acc[k] += c * row[k]
    return tuple(acc)


def _promote(m, nums, target):
    if m == target:
        return nums
    step = target // m
    poly = [0] * ((len(nums) - 1) * step + 1)
    for j, c in enumerate(nums):
        poly[j * step] = c
    return _reduce(target, poly)


def _normalized(nums, den):
    g = den
    for c in nums:
        if c:
            g = gcd(g, c)
            if g == 1:
                break
    if not any(nums):
        return tuple(0 for _ in nums), 1
    if den < 0:
        g = -g
    if g != 1:
        nums = tuple(c // g for c in nums)
        den //= g
    return nums, den


class Cyclotomic:
    """An element of Q(zeta_M) in canonical residue form."""

    __slots__ = ("conductor", "_num", "_den")

    def __init__(self, conductor, coeffs=(0,)):
        conductor = int(conductor)
        if conductor < 1:
            raise InvalidInput(
                f"conductor must be positive, got {conductor}", code="invalid-conductor"
            )
        fr = [Fraction(c) for c in coeffs] or [Fraction(0)]
        den = 1
        for c in fr:
            den = lcm(den, c.denominator)
        nums = _reduce(conductor, [int(c * den) for c in fr])
        self.conductor = conductor
        self._num, self._den = _normalized(nums, den)

    @classmethod
    def _raw(cls, conductor, nums, den):
        obj = object.__new__(cls)
        obj.conductor = conductor
        obj._num, obj._den = _normalized(nums, den)
        return obj

    @classmethod
    def rational(cls, value, conductor=1):
        value = Fraction(value)
        nums = (value.numerator,) + (0,) * (euler_phi(conductor) - 1)
        return cls._raw(conductor, nums, value.denominator)

    # -- accessors -------------------------------------------------------
    @property
    def coeffs(self):
        return tuple(Fraction(c, self._den) for c in self._num)

    def is_zero(self):
        return not any(self._num)

    def is_rational(self):
        return not any(self._num[1:])

    def to_fraction(self):
        if not self.is_rational():
            raise InvalidInput(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    def promote(self, conductor):
        if conductor % self.conductor:
            raise InvalidInput(
                f"conductor {conductor} is not a multiple of {self.conductor}",
                code="invalid-conductor",
            )
        return Cyclotomic._raw(conductor, _promote(self.conductor, self._num, conductor), self._den)

    # -- arithmetic ------------------------------------------------------
    @staticmethod
    def _parts(x):
        if isinstance(x, Cyclotomic):
            return x.conductor, x._num, x._den
        if isinstance(x, int):
            return 1, (x,), 1
        if isinstance(x, Fraction):
            return 1, (x.numerator,), x.denominator
        return None

    def _binary(self, other):
        p = self._parts(other)
        if p is None:
            return None
        m2, n2, d2 = p
        m1, n1, d1 = self.conductor, self._num, self._den
        if m1 == m2:
            return m1, n1, d1, n2, d2
        L = lcm(m1, m2)
        return L, _promote(m1, n1, L), d1, _promote(m2, n2, L), d2

    def __add__(self, other):
        b = self._binary(other)
        if b is None:
            return NotImplemented
        L, n1, d1, n2, d2 = b
        if d1 == d2:
            return Cyclotomic._raw(L, tuple(x + y for x, y in zip(n1, n2)), d1)
        return Cyclotomic._raw(L, tuple(x * d2 + y * d1 for x, y in zip(n1, n2)), d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self.conductor, tuple(-c for c in self._num), self._den)

    def __sub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        b = self._binary(other)
        if b is None:
            return NotImplemented
        L, n1, d1, n2, d2 = b
        if len(n1) == 1:
            return Cyclotomic._raw(L, (n1[0] * n2[0],), d1 * d2)
        if not any(n1[1:]):
            c = n1[0]
            return Cyclotomic._raw(L, tuple(c * y for y in n2), d1 * d2)
        if not any(n2[1:]):
            c = n2[0]
            return Cyclotomic._raw(L, tuple(c * x for x in n1), d1 * d2)
        prod = [0] * (2 * len(n1) - 1)
        for i, x in enumerate(n1):
            if x:
                for j, y in enumerate(n2):
                    if y:
                        prod[i + j] += x * y
        return Cyclotomic._raw(L, _reduce(L, prod), d1 * d2)

    __rmul__ = __mul__

    def _conjugate(self, k):
        m = self.conductor
        poly = [0] * m
        for j, c in enumerate(self._num):
            if c:
                poly[(j * k) % m] += c
        return Cyclotomic._raw(m, _reduce(m, poly), self._den)

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        if self.is_rational():
            num = self._num[0]
            sign = -1 if num < 0 else 1
            nums = (sign * self._den,) + (0,) * (len(self._num) - 1)
            return Cyclotomic._raw(self.conductor, nums, abs(num))
        # product of the non-identity Galois conjugates divided by the norm
        rest = None
        for k in _units(self.conductor):
            if k == 1:
                continue
            c = self._conjugate(k)
            rest = c if rest is None else rest * c
        norm = self * rest
        assert norm.is_rational(), "norm is not rational"
        return rest * Fraction(norm._den, norm._num[0])

    def __truediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        if isinstance(other, Cyclotomic):
            return self * other.inverse()
        other = Fraction(other)
        if other == 0:
            raise DivisionByZero("division by zero")
        return self * (1 / other)

    def __rtruediv__(self, other):
        if self._parts(other) is None:
            return NotImplemented
        return self.inverse() * other

    def __pow__(self, n):
        n = int(n)
        base = self
        if n < 0:
            base, n = self.inverse(), -n
        result = Cyclotomic.rational(1, self.conductor)
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- comparison ------------------------------------------------------
    def __eq__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        m2, n2, d2 = p
        if m2 == self.conductor:
            return self._num == tuple(n2) and self._den == d2
        L = lcm(self.conductor, m2)
        a = _normalized(_promote(self.conductor, self._num, L), self._den)
        b = _normalized(_promote(m2, tuple(n2), L), d2)
        return a == b

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        # the normalized trace is invariant under conductor promotion
        w = _trace_weights(self.conductor)
        t = sum((c * wj for c, wj in zip(self._num, w) if c), Fraction(0))
        return hash(t / self._den)

    def __bool__(self):
        return not self.is_zero()

    # -- display / serialization ------------------------------------------
    def __repr__(self):
        return f"Cyclotomic({self.conductor}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            if j == 0:
                parts.append(str(c))
                continue
            z = f"z{self.conductor}" + (f"^{j}" if j > 1 else "")
            if c == 1:
                parts.append(z)
            elif c == -1:
                parts.append("-" + z)
            else:
                parts.append(f"{c}*{z}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self):
        return {
            "conductor": self.conductor,
            "coeffs": [[str(c.numerator), str(c.denominator)] for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, (int, str)) and not isinstance(obj, bool):
            # rational shorthand such as 1, "-1" or "1/2"
            try:
                return cls.rational(Fraction(obj))
            except (ValueError, ZeroDivisionError) as exc:
                raise InvalidInput(f"malformed rational value: {obj!r}") from exc
        try:
            M = int(obj["conductor"])
            coeffs = [Fraction(int(p), int(q)) for p, q in obj["coeffs"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInput(f"malformed cyclotomic value: {obj!r}") from exc
        if M < 1:
            raise InvalidInput(f"conductor must be positive, got {M}", code="invalid-conductor")
        if len(coeffs) != euler_phi(M):
            raise InvalidInput(f"expected {euler_phi(M)} coefficients for conductor {M}")
        return cls(M, coeffs)


def as_cyclotomic(x, conductor=1):
    if isinstance(x, Cyclotomic):
        return x
    return Cyclotomic.rational(x, conductor)


@lru_cache(maxsize=None)
def _zeta_power(M, k):
    table = _power_table(M)
    return Cyclotomic._raw(M, table[k % M], 1)


def root_of_unity(M, k=1):
    """Return zeta_M**k in canonical form."""
    M = int(M)
    if M < 1:
        raise InvalidInput(f"conductor must be positive, got {M}", code="invalid-conductor")
    return _zeta_power(M, int(k) % M)


def arith(kind, x, y=None):
    """Field operation by name: add, mul, neg or inv."""
    if kind == "add":
        return as_cyclotomic(x) + y
    if kind == "mul":
        return as_cyclotomic(x) * y
    if kind == "neg":
        return -as_cyclotomic(x)
    if kind == "inv":
        return as_cyclotomic(x).inverse()
    raise InvalidInput(f"unknown operation {kind!r}")


def order(x):
    """Multiplicative order of a root of unity."""
    x = as_cyclotomic(x)
    L = lcm(2, x.conductor)
    for d in _divisors(L):
        if x**d == 1:
            return d
    raise NotRootOfUnity(f"{x} is not a root of unity")


@lru_cache(maxsize=4096)
def as_root_of_unity(x):
    """Return (m, e) with x == zeta_m**e, m the order of x and gcd(e, m) == 1."""
    m = order(x)
    for e in _units(m):
        if root_of_unity(m, e) == x:
            return m, e % m
    raise NotRootOfUnity(f"{x} is not a root of unity")  # pragma: no cover


def nth_roots(x, k):
    """All k-th roots of the root of unity x, as roots of unity of order dividing k*ord(x)."""
    m, e = as_root_of_unity(x)
    L = m * k
    # zeta_m^e = zeta_L^(e k); roots are zeta_L^(e + m j)
    return [root_of_unity(L, e + m * j) for j in range(k)]

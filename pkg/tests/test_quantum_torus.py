import random

import pytest

from qtoroidal.errors import DivisionByZero
from qtoroidal.quantum_torus import TorusElement, commutator, monomial_inverse, multiply, split_center
from qtoroidal.scalars import root_of_unity
from qtoroidal.suites import center_suite, random_torus_element
from qtoroidal.torus_form import in_radf, skew

from conftest import mixed_torus, t1_torus


def mono(q, a, c=1):
    return TorusElement.monomial(q, a, c)


def test_products(t1):
    t1_, t2_ = TorusElement.generator(t1, 0), TorusElement.generator(t1, 1)
    assert t1_ * t2_ == mono(t1, (1, 1))
    assert t2_ * t1_ == mono(t1, (1, 1), -1)
    x = mono(t1, (3, -1), 5) + mono(t1, (0, 2))
    assert TorusElement.one(t1) * x == x


def test_commutators(t1):
    t1_, t2_ = TorusElement.generator(t1, 0), TorusElement.generator(t1, 1)
    assert commutator(t1_, t2_) == mono(t1, (1, 1), 2)
    assert commutator(TorusElement.generator(t1, 0, 2), t2_).is_zero()
    x = mono(t1, (1, 2)) + mono(t1, (-1, 0), 3)
    assert commutator(x, x).is_zero()


def test_monomial_inverse(t1):
    assert monomial_inverse(t1, 1, (1, 1)) == mono(t1, (-1, -1), -1)
    assert monomial_inverse(t1, 1, (0, 0)) == TorusElement.one(t1)
    i = root_of_unity(4, 1)
    assert monomial_inverse(t1, i, (1, 0)) == mono(t1, (-1, 0), i.inverse())
    with pytest.raises(DivisionByZero):
        monomial_inverse(t1, 0, (1, 0))


def test_inverse_is_two_sided(mixed):
    rng = random.Random(5)
    for _ in range(30):
        a = tuple(rng.randint(-4, 4) for _ in range(3))
        c = root_of_unity(6, rng.randrange(6)) * 2
        x, y = mono(mixed, a, c), monomial_inverse(mixed, c, a)
        assert x * y == TorusElement.one(mixed) == y * x


def test_split_center_examples(t1):
    z, c = split_center(mono(t1, (2, 0)) + mono(t1, (1, 0)))
    assert (z, c) == (mono(t1, (2, 0)), mono(t1, (1, 0)))
    z, c = split_center(TorusElement(t1))
    assert z.is_zero() and c.is_zero()
    z, c = split_center(mono(t1, (1, 1)))
    assert z.is_zero() and c == mono(t1, (1, 1))


@pytest.mark.parametrize("make", [t1_torus, mixed_torus])
def test_associativity(make):
    q = make()
    rng = random.Random(2)
    for _ in range(100):
        x, y, z = (random_torus_element(q, rng, terms=2, bound=3) for _ in range(3))
        assert multiply(multiply(x, y), z) == multiply(x, multiply(y, z))


@pytest.mark.parametrize("make", [t1_torus, mixed_torus])
def test_center_suite(make):
    assert center_suite(make(), trials=100, probes=20, seed=4)["failures"] == 0


@pytest.mark.parametrize("make", [t1_torus, mixed_torus])
def test_noncentral_part_is_spanned_by_commutators(make):
    # each monomial outside rad f is a multiple of a single commutator [t_i, t^(a - e_i)]
    q = make()
    rng = random.Random(8)
    for _ in range(40):
        a = tuple(rng.randint(-5, 5) for _ in range(q.n))
        if in_radf(q, a):
            continue
        found = False
        for i in range(q.n):
            ei = tuple(int(k == i) for k in range(q.n))
            rest = tuple(x - y for x, y in zip(a, ei))
            com = commutator(mono(q, ei), mono(q, rest))
            if not com.is_zero():
                coef = com.terms[a]
                assert com.scale(coef.inverse() if hasattr(coef, "inverse") else 1 / coef) == mono(q, a)
                found = True
                break
        assert found
        assert any(skew(q, tuple(int(k == i) for k in range(q.n)), a) != 1 for i in range(q.n))

import random

import pytest

from qtoroidal import linalg as la
from qtoroidal.errors import InvalidInput
from qtoroidal.hc1 import HC1Element, central_element
from qtoroidal.roots_weyl import Root
from qtoroidal.suites import jacobi_suite
from qtoroidal.toroidal import (
    ToroidalElement,
    bracket,
    cartan_basis,
    jacobi_residual,
    random_homogeneous,
    root_component,
    root_decomposition,
    validate_membership,
)

from conftest import mixed_torus, t1_torus

H = ((1, 0), (0, -1))


def E(t1, i, j, a, c=1):
    return ToroidalElement.unit(2, t1, i, j, a, c)


def test_bracket_examples(t1):
    lhs = bracket(E(t1, 0, 1, (1, 0)), E(t1, 1, 0, (-1, 0)))
    rhs = ToroidalElement.homogeneous(2, t1, H, (0, 0)) + ToroidalElement.central(2, t1, central_element(t1, 0))
    assert lhs == rhs
    d1 = ToroidalElement.derivation(2, t1, 0)
    x = E(t1, 0, 1, (3, 0))
    assert bracket(d1, x) == x.scale(3)
    c1 = ToroidalElement.central(2, t1, central_element(t1, 0))
    assert bracket(c1, x).is_zero() and bracket(c1, d1).is_zero()


def test_jacobi_examples(t1):
    x = E(t1, 0, 1, (1, 0))
    y = E(t1, 1, 0, (0, 1))
    z = ToroidalElement.homogeneous(2, t1, H, (-1, 0))
    assert jacobi_residual(x, y, z).is_zero()
    assert jacobi_residual(x, x, y).is_zero()


def test_membership_examples(t1):
    I = la.identity(2)
    assert validate_membership(E(t1, 0, 1, (1, 0)))
    assert validate_membership(ToroidalElement.homogeneous(2, t1, I, (1, 1)))
    assert not validate_membership(ToroidalElement.homogeneous(2, t1, I, (2, 0)))


def test_root_component_examples(t1):
    x = E(t1, 0, 1, (1, 0))
    assert root_component(x, Root.real(0, 1, (1, 0))) == x
    assert root_component(x, Root.real(0, 1, (0, 1))).is_zero()
    y = ToroidalElement.homogeneous(2, t1, H, (1, 1))
    assert root_component(y, Root.null((1, 1))) == y


def test_cartan_dimension():
    for d, q in [(2, t1_torus()), (3, t1_torus()), (4, mixed_torus())]:
        assert len(cartan_basis(d, q)) == 2 * q.n + d - 1


@pytest.mark.parametrize("d,make", [(2, t1_torus), (3, t1_torus), (2, mixed_torus), (3, mixed_torus)])
def test_jacobi_suite(d, make):
    report = jacobi_suite(d, make(), trials=100, seed=13)
    assert report["failures"] == 0
    assert report["hc1_triples"] >= 20


@pytest.mark.parametrize("make", [t1_torus, mixed_torus])
def test_antisymmetry_and_sl_closure(make):
    q = make()
    rng = random.Random(21)
    for _ in range(60):
        a = tuple(rng.randint(-2, 2) for _ in range(q.n))
        b = tuple(rng.randint(-2, 2) for _ in range(q.n))
        x, y = random_homogeneous(3, q, rng, a), random_homogeneous(3, q, rng, b)
        z = bracket(x, y)
        assert (z + bracket(y, x)).is_zero()
        assert validate_membership(z)


def test_root_decomposition_is_direct(mixed):
    rng = random.Random(4)
    x = ToroidalElement.zero(2, mixed)
    for _ in range(4):
        a = tuple(rng.randint(-2, 2) for _ in range(3))
        x = x + random_homogeneous(2, mixed, rng, a)
    x = x + random_homogeneous(2, mixed, rng, (0, 0, 0))
    parts = root_decomposition(x)
    total = ToroidalElement.zero(2, mixed)
    seen = set()
    for key, part in parts.items():
        support = {(a, i, j) for a, X in part.mat.items() for i in range(2) for j in range(2) if X[i][j] != 0}
        assert not (support & seen)
        seen |= support
        total = total + part
    assert total == x


def test_json_roundtrip(t1):
    x = E(t1, 0, 1, (1, 0)) + ToroidalElement.central(2, t1, HC1Element(t1, {(1, (2, 2)): 3}))
    x = x + ToroidalElement.derivation(2, t1, 1, 5)
    assert ToroidalElement.from_json(2, t1, x.to_json()) == x


def test_rejects_mismatched_operands(t1, mixed):
    with pytest.raises(InvalidInput):
        bracket(E(t1, 0, 1, (1, 0)), ToroidalElement.unit(2, mixed, 0, 1, (1, 0, 0)))

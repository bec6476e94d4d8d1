import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qtoroidal.errors import InvalidInput
from qtoroidal.scalars import Cyclotomic, root_of_unity
from qtoroidal.suites import cocycle_suite
from qtoroidal.torus_form import (
    QMatrix,
    in_radf,
    min_central_power,
    radf_basis,
    sigma,
    skew,
)

from conftest import mixed_torus, t1_torus


def test_sigma_examples(t1):
    assert sigma(t1, (1, 0), (0, 1)) == 1
    assert sigma(t1, (0, 1), (1, 0)) == -1
    assert sigma(t1, (0, 0), (3, -2)) == 1


def test_skew_examples(t1):
    assert skew(t1, (1, 0), (0, 1)) == -1
    a, b = (3, -5), (2, 7)
    assert skew(t1, a, a) == 1
    assert skew(t1, a, b) * skew(t1, b, a) == 1


def test_defining_relation_for_all_pairs(mixed):
    for i in range(3):
        for j in range(3):
            ei = tuple(int(k == i) for k in range(3))
            ej = tuple(int(k == j) for k in range(3))
            assert sigma(mixed, ei, ej) == mixed.entry(i, j) * sigma(mixed, ej, ei)


def test_validation_rejects_bad_matrices():
    with pytest.raises(InvalidInput):
        QMatrix(2, 4, ((1, 1), (3, 0)))
    with pytest.raises(InvalidInput):
        QMatrix(2, 4, ((0, 1), (1, 0)))
    with pytest.raises(InvalidInput):
        QMatrix.from_entries(((1, Cyclotomic.rational(2)), (Cyclotomic.rational(1, 1) / 2, 1)))


def test_from_entries_matches_pairs():
    z = root_of_unity(6, 1)
    q = QMatrix.from_entries(((1, z), (z.inverse(), 1)))
    assert q == QMatrix.from_pairs(2, 6, {(0, 1): 1})


def test_radf_examples(t1, zeta3):
    assert radf_basis(t1).basis == ((2, 0), (0, 2))
    assert radf_basis(QMatrix.commutative(3)).basis == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert radf_basis(zeta3).basis == ((3, 0), (0, 3))


def test_min_central_power_examples(t1):
    assert min_central_power(t1, 0) == 2
    assert min_central_power(QMatrix.commutative(2), 1) == 1
    assert min_central_power(QMatrix.from_pairs(2, 6, {(0, 1): 1}), 0) == 6


def test_radf_generators_and_index(mixed):
    lattice = radf_basis(mixed)
    assert all(in_radf(mixed, g) for g in lattice.basis)
    prod = 1
    for e in lattice.elementary_divisors():
        prod *= e
    assert prod == lattice.index() == 36


@pytest.mark.parametrize("make", [t1_torus, mixed_torus])
def test_radf_membership_by_probing(make):
    q = make()
    rng = random.Random(3)
    for _ in range(50):
        a = tuple(rng.randint(-8, 8) for _ in range(q.n))
        probes = [tuple(rng.randint(-8, 8) for _ in range(q.n)) for _ in range(100)]
        assert in_radf(q, a) == all(skew(q, a, b) == 1 for b in probes)


@pytest.mark.parametrize("make", [t1_torus, mixed_torus])
def test_cocycle_identities(make):
    report = cocycle_suite(make(), trials=200, seed=11)
    assert report["failures"] == 0, report


@given(st.lists(st.integers(-6, 6), min_size=3, max_size=3), st.lists(st.integers(-6, 6), min_size=3, max_size=3))
def test_skew_is_sigma_ratio(a, b):
    q = mixed_torus()
    assert skew(q, a, b) == sigma(q, a, b) * sigma(q, b, a).inverse()


def test_json_roundtrip(mixed):
    assert QMatrix.from_json(mixed.to_json()) == mixed
    with pytest.raises(InvalidInput):
        QMatrix.from_json({"n": 2})

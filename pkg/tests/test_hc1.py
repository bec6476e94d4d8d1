import random
from itertools import product

import pytest

from qtoroidal.errors import InvalidInput
from qtoroidal.hc1 import (
    HC1Element,
    TensorQuotient,
    bruteforce_dim,
    central_element,
    derivation_act,
    graded_dim,
    normalize_pair,
)
from qtoroidal.quantum_torus import monomial_inverse
from qtoroidal.scalars import root_of_unity
from qtoroidal.suites import hc1_suite
from qtoroidal.torus_form import radf_basis

from conftest import mixed_torus, t1_torus


def test_normalize_pair_examples(t1):
    assert normalize_pair(t1, 1, (1, 0), (-1, 0)) == central_element(t1, 0)
    assert normalize_pair(t1, 1, (0, 0), (3, 1)).is_zero()
    assert normalize_pair(t1, 1, (2, 0), (0, 0)).is_zero()
    assert normalize_pair(t1, 1, (1, 0), (0, 0)).is_zero()


def test_keys_in_radf_and_pivot_eliminated(mixed):
    rng = random.Random(1)
    lattice = radf_basis(mixed)
    for _ in range(50):
        a = tuple(rng.randint(-6, 6) for _ in range(3))
        k = rng.choice(lattice.basis)
        b = tuple(x - y for x, y in zip(k, a))
        x = normalize_pair(mixed, 1, a, b)
        for i, r in x.terms:
            assert lattice.contains(r)
            if any(r):
                assert i != next(j for j, v in enumerate(r) if v)


def test_graded_dim_examples(t1):
    assert graded_dim(t1, (1, 0)) == 0
    assert graded_dim(t1, (2, 0)) == 1
    assert graded_dim(t1, (0, 0)) == 2


def test_bruteforce_examples(t1):
    assert bruteforce_dim(t1, (2, 0), 3) == 1
    assert bruteforce_dim(t1, (0, 0), 3) == 2
    assert bruteforce_dim(t1, (1, 1), 3) == 0


def test_raw_quotient_outside_radf_is_commutator_line(t1):
    # (C_q (x) C_q)/J is one-dimensional off rad f; that line maps onto [C_q, C_q]_r
    tq = TensorQuotient(t1, (1, 1), 3)
    assert tq.dim == 1 and tq.hc1_dim == 0


def test_derivation_examples(t1):
    c1 = central_element(t1, 0)
    assert derivation_act(0, c1).is_zero()
    x = HC1Element(t1, {(1, (2, 0)): 1})
    assert not x.is_zero()
    assert derivation_act(0, x) == x.scale(2)
    assert derivation_act(1, x).is_zero()


def test_rejects_degrees_outside_radf(t1):
    with pytest.raises(InvalidInput):
        HC1Element(t1, {(0, (1, 0)): 1})


@pytest.mark.parametrize("make", [t1_torus, mixed_torus])
def test_antisymmetry_and_cyclic(make):
    assert hc1_suite(make(), trials=100, seed=9)["failures"] == 0


@pytest.mark.parametrize("make", [t1_torus, mixed_torus])
def test_pair_expansion_identity(make):
    # <t^a, t^b (t^a)^-1> = sum_i a_i <t_i, t^b t_i^-1>
    q = make()
    rng = random.Random(6)
    lattice = radf_basis(q)
    for _ in range(30):
        a = tuple(rng.randint(-3, 3) for _ in range(q.n))
        b = rng.choice(lattice.basis + ((0,) * q.n,))
        inv = monomial_inverse(q, 1, a)
        (deg, coef), = inv.terms.items()
        # t^b t^-a = sigma(b, -a) t^(b - a)
        shift = tuple(x + y for x, y in zip(b, deg))
        s = root_of_unity(q.conductor, q.sigma_exp(b, deg)) * coef
        lhs = normalize_pair(q, s, a, shift)
        rhs = HC1Element(q)
        for i, ai in enumerate(a):
            if ai:
                ei = tuple(int(k == i) for k in range(q.n))
                ei_inv = tuple(-x for x in ei)
                rhs = rhs + normalize_pair(
                    q, ai * root_of_unity(q.conductor, q.sigma_exp(b, ei_inv)), ei, tuple(x - y for x, y in zip(b, ei))
                )
        assert lhs == rhs


def test_normal_form_relations_lie_in_J(t1):
    # the degree-r relation sum r_i <t_i, t^r t_i^-1> is killed in the brute-force quotient
    r = (2, 2)
    tq = TensorQuotient(t1, r, 3)
    vec = {}
    for i, ri in enumerate(r):
        ei = tuple(int(k == i) for k in range(2))
        vec[ei] = vec.get(ei, 0) + ri * root_of_unity(2, t1.sigma_exp(r, tuple(-x for x in ei)))
    assert tq.in_relations(vec)


def test_bruteforce_matches_on_t1_small(t1):
    for r in product(range(-2, 3), repeat=2):
        assert bruteforce_dim(t1, r, 3) == graded_dim(t1, r), r


def test_bruteforce_matches_on_mixed_torus(mixed):
    # the support bound must cover |r|; a smaller box drops relations and overestimates
    for r in [(1, 0, 0), (0, 1, -1), (1, 1, 1)]:
        assert bruteforce_dim(mixed, r, 2) == graded_dim(mixed, r), r
    assert bruteforce_dim(mixed, (1, -2, 3), 3) == graded_dim(mixed, (1, -2, 3)) == 2


def test_small_box_only_overestimates(mixed):
    assert bruteforce_dim(mixed, (1, 4, 3), 2) >= graded_dim(mixed, (1, 4, 3))


def test_json_roundtrip(mixed):
    x = normalize_pair(mixed, root_of_unity(6, 1), (1, 2, 0), (0, 2, 3))
    assert HC1Element.from_json(mixed, x.to_json()) == x


def test_bruteforce_sweep_mixed_torus(mixed):
    for r in product(range(-1, 2), repeat=3):
        assert bruteforce_dim(mixed, r, 2) == graded_dim(mixed, r), r

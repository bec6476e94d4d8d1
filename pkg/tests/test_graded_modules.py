from fractions import Fraction

import pytest

from qtoroidal import linalg as la
from qtoroidal.fiber import EvalPoints
from qtoroidal.graded_modules import (
    FinRep,
    GradedModule,
    GradedVector,
    act,
    check_weyl_invariance,
    decompose_window,
    highest_central_operator,
    hdot_weights,
    integrability_index,
    lambda_matrices,
    lambda_series,
    log_series,
    loop_cartan_images,
    loop_vanishing_report,
    submodule_window,
    vplus,
    vplus_is_dominant,
    weight_multiplicities,
)
from qtoroidal.hc1 import central_element
from qtoroidal.roots_weyl import simple_roots
from qtoroidal.suites import central_action_suite, module_axiom_suite
from qtoroidal.toroidal import ToroidalElement

H = ((1, 0), (0, -1))


@pytest.fixture
def natural(t1, t1_points):
    return FinRep.natural(2, t1, t1_points)


@pytest.fixture
def trivial(t1, t1_points):
    return FinRep.trivial(2, t1, t1_points)


def e(j, n=4):
    return tuple(int(i == j) for i in range(n))


def test_action_examples(t1, natural):
    mod = GradedModule(natural)
    w = e(0)
    v = GradedVector.single(w, (2, 1))
    assert act(mod, ToroidalElement.derivation(2, t1, 0), v) == v.scale(2)
    x = ToroidalElement.unit(2, t1, 0, 1, (1, 0))
    expected = GradedVector.single(la.mat_vec(natural.matrix(x), w), (1, 0))
    assert act(mod, x, GradedVector.single(w, (0, 0))) == expected
    c1 = ToroidalElement.central(2, t1, central_element(t1, 0))
    assert act(mod, c1, v).is_zero()


@pytest.mark.parametrize("kind", ["natural", "trivial", "dual", "adjoint", "tensor", "sum"])
def test_module_axiom_all_kinds(t1, t1_points, kind):
    rep = FinRep.by_name(kind, 2, t1, t1_points)
    trials = 100 if rep.dim <= 8 else 15
    assert module_axiom_suite(GradedModule(rep), trials=trials, seed=1)["failures"] == 0


def test_central_action(natural):
    assert central_action_suite(GradedModule(natural), grades=2)["failures"] == 0


def test_vplus_natural(natural):
    basis = vplus(natural)
    assert len(basis) == 2
    for R in natural.raising():
        for w in basis:
            assert all(x == 0 for x in la.mat_vec(R, w))
    assert hdot_weights(natural) == [(1,), (1,)]
    assert vplus_is_dominant(natural)


def test_vplus_trivial_and_adjoint(t1, t1_points, trivial):
    assert len(vplus(trivial)) == trivial.dim == 1
    adj = FinRep.adjoint(2, t1, t1_points)
    assert len(vplus(adj)) > 0
    assert vplus_is_dominant(adj)


def test_highest_central_operator(natural):
    for i in range(2):
        op = highest_central_operator(natural, i, bound=4)
        assert op is not None and op.k <= 4
        assert la.rank(op.restricted) == len(vplus(natural))
    assert highest_central_operator(FinRep.trivial(2, natural.q, natural.pts), 0) is None


def test_integrability(t1, natural, trivial):
    for a in [(0, 0), (1, 0), (2, -1), (-2, 2)]:
        x = ToroidalElement.unit(2, t1, 0, 1, a)
        assert integrability_index(natural, x) == 2
        assert integrability_index(trivial, x) == 1


def test_lambda_series_examples(natural, trivial):
    H1 = loop_cartan_images(natural, 0, 6, H)
    top = e(0)
    series = lambda_series(H1, top, 6)
    assert any(x != 0 for x in series[1])
    assert all(x == 0 for x in series[2])
    Ht = loop_cartan_images(trivial, 0, 6, H)
    assert all(all(x == 0 for x in w) for w in lambda_series(Ht, (1,), 6)[1:])


def test_log_inverts_exp(natural):
    H1 = loop_cartan_images(natural, 1, 5, H)
    G = log_series(lambda_matrices(H1, 5))
    for k in range(1, 6):
        assert G[k] == la.mat_scale(Fraction(-1, k), H1[k - 1])


@pytest.mark.parametrize("kind", ["natural", "trivial", "dual", "adjoint"])
def test_loop_vanishing(t1, t1_points, kind):
    rep = FinRep.by_name(kind, 2, t1, t1_points)
    for i in range(2):
        assert loop_vanishing_report(rep, i, 6)["holds"]


def test_weights_and_weyl_invariance(natural):
    assert weight_multiplicities(natural) == {(1,): 2, (-1,): 2}
    grades = [(0, 0), (1, 0), (0, 1), (1, -1)]
    assert check_weyl_invariance(natural, simple_roots(2, 2), grades)


def test_window_examples(natural, trivial):
    mod = GradedModule(natural)
    seeds = [GradedVector.single(w, (0, 0)) for w in vplus(natural)]
    rep = submodule_window(mod, seeds, 2)
    assert set(rep.dims.values()) == {4}
    assert len(rep.dims) == 25
    zero = submodule_window(mod, GradedVector.single((0, 0, 0, 0), (0, 0)), 2)
    assert zero.total() == 0
    triv = submodule_window(GradedModule(trivial), GradedVector.single((1,), (1, 0)), 2)
    assert {m: k for m, k in triv.dims.items() if k} == {(1, 0): 1}


def test_decompose_trivial(trivial):
    dec = decompose_window(GradedModule(trivial), 2)
    assert len(dec.classes) == 1
    assert len(dec.components) == 9


def test_decompose_natural_plus_trivial(t1, t1_points, natural, trivial):
    rep = FinRep.direct_sum(natural, trivial)
    dec = decompose_window(GradedModule(rep), 2)
    assert len(dec.classes) == 2

import pytest

from qtoroidal import linalg as la
from qtoroidal.errors import InvalidInput
from qtoroidal.fiber import (
    EvalPoints,
    NotInDomain,
    NotSimple,
    block_reps,
    build_fiber,
    crt_check,
    fiber_reps,
    irreducible_rep,
    pi_tilde,
    rep_monomial,
    wedderburn,
)
from qtoroidal.hc1 import central_element
from qtoroidal.scalars import root_of_unity
from qtoroidal.suites import pi_suite
from qtoroidal.toroidal import ToroidalElement
from qtoroidal.torus_form import QMatrix

from conftest import mixed_torus, t1_torus, zeta3_torus


def fiber_at_one(q):
    return build_fiber(q, EvalPoints.ones(q), (0,) * q.n)


def test_t1_fiber_relations(t1):
    F = fiber_at_one(t1)
    assert F.dim == 4
    t1_, t2_ = F.monomial((1, 0)), F.monomial((0, 1))
    assert F.mul(t1_, t2_) == [-x for x in F.mul(t2_, t1_)]
    assert F.mul(t1_, t1_) == F.one()
    assert F.check_associative()


def test_wedderburn_examples(t1, zeta3):
    w = wedderburn(fiber_at_one(t1))
    assert (w.center_dim, w.size, w.dim) == (1, 2, 4)
    w = wedderburn(fiber_at_one(zeta3))
    assert (w.dim, w.center_dim, w.size) == (9, 1, 3)
    w = wedderburn(fiber_at_one(QMatrix.commutative(2)))
    assert (w.dim, w.size) == (1, 1)


def test_size_squared_times_blocks(mixed):
    F = fiber_at_one(mixed)
    w = wedderburn(F)
    assert w.size**2 * w.blocks == F.dim
    reps = block_reps(F)
    assert len(reps) == w.blocks
    with pytest.raises(NotSimple):
        irreducible_rep(F)


def test_t1_rep_shape(t1):
    rep = irreducible_rep(fiber_at_one(t1))
    assert rep.size == 2
    assert rep.verify()
    T1, T2 = rep.gens
    assert la.mat_mul(T1, T2) == la.mat_neg(la.mat_mul(T2, T1))
    assert la.mat_mul(T1, T1) == la.identity(2) == la.mat_mul(T2, T2)
    assert la.trace(rep_monomial(rep, (1, 1))) == 0
    # t_1 is diagonalised with eigenvalues 1, -1
    assert T1 == ((1, 0), (0, -1))


@pytest.mark.parametrize("make", [t1_torus, zeta3_torus, mixed_torus])
def test_reps_are_irreducible(make):
    # Burnside: an irreducible rep's monomial images span the full matrix algebra
    q = make()
    F = fiber_at_one(q)
    for rep in block_reps(F):
        rows = [tuple(x for row in rep_monomial(rep, a) for x in row) for a in F.basis]
        assert la.rank(rows) == rep.size**2


def test_points_with_nontrivial_values(zeta3):
    pts = EvalPoints(zeta3, ((1, root_of_unity(3, 1)), (root_of_unity(3, 2),)))
    reps = fiber_reps(zeta3, pts)
    assert len(reps) == 2
    for rep in reps:
        assert rep.verify()
    assert crt_check(zeta3, pts)


def test_crt(t1):
    pts = EvalPoints(t1, ((1, -1), (1, -1)))
    assert crt_check(t1, pts)


def test_point_validation(t1):
    with pytest.raises(InvalidInput):
        EvalPoints(t1, ((1, 1), (1,)))
    with pytest.raises(InvalidInput):
        EvalPoints(t1, ((0,), (1,)))
    with pytest.raises(InvalidInput):
        EvalPoints(t1, ((2,), (1,)))
    with pytest.raises(InvalidInput):
        EvalPoints(t1, ((1,),))


def test_pi_tilde_examples(t1, t1_points):
    reps = fiber_reps(t1, t1_points)
    (img,) = pi_tilde(ToroidalElement.unit(2, t1, 0, 1, (0, 0)), reps)
    assert img == la.kron(la.unit(2, 0, 1), la.identity(2))
    H = ((1, 0), (0, -1))
    (img,) = pi_tilde(ToroidalElement.homogeneous(2, t1, H, (1, 0)), reps)
    assert img == la.kron(H, ((1, 0), (0, -1)))
    c = ToroidalElement.central(2, t1, central_element(t1, 0))
    with pytest.raises(NotInDomain):
        pi_tilde(c, reps)
    assert pi_tilde(c, reps, allow_central=True) == (la.zeros(4),)
    with pytest.raises(NotInDomain):
        pi_tilde(ToroidalElement.derivation(2, t1, 0), reps)


@pytest.mark.parametrize("make,d", [(t1_torus, 2), (zeta3_torus, 2), (t1_torus, 3)])
def test_pi_homomorphism(make, d):
    q = make()
    reps = fiber_reps(q, EvalPoints.ones(q))
    assert pi_suite(d, q, reps, trials=100, seed=3)["failures"] == 0


def test_json_roundtrip(zeta3):
    pts = EvalPoints(zeta3, ((1, root_of_unity(3, 1)), (1,)))
    assert EvalPoints.from_json(zeta3, pts.to_json()) == pts

"""Seeded randomized verification suites.

Each suite returns a plain dict with at least ``trials`` and ``failures`` so
the CLI and the tests can report it directly.
"""

import random
from itertools import product

from . import linalg as la
from .hc1 import normalize_pair
from .quantum_torus import TorusElement, commutator, multiply, split_center
from .scalars import root_of_unity
from .toroidal import ToroidalElement, bracket, jacobi_residual, random_homogeneous
from .torus_form import in_radf, radf_basis

__all__ = [
    "DEFAULT_SEED",
    "cocycle_suite",
    "center_suite",
    "hc1_suite",
    "jacobi_suite",
    "pi_suite",
    "module_axiom_suite",
    "central_action_suite",
    "random_degree",
    "random_torus_element",
]

DEFAULT_SEED = 20240917


def random_degree(rng, n, bound):
    return tuple(rng.randint(-bound, bound) for _ in range(n))


def _random_coef(rng, M):
    c = rng.choice([-3, -2, -1, 1, 2, 3])
    return c * root_of_unity(M, rng.randrange(M)) if M > 2 else c


def random_torus_element(q, rng, terms=3, bound=4):
    out = {}
    for _ in range(terms):
        a = random_degree(rng, q.n, bound)
        out[a] = out.get(a, 0) + _random_coef(rng, q.conductor)
    return TorusElement(q, out)


def cocycle_suite(q, trials=200, seed=DEFAULT_SEED, bound=10):
    """The bilinearity and skew identities of sigma and f, plus monomial products.

    Everything is compared as exponents of zeta_M, which is exact.
    """
    rng = random.Random(seed)
    n, M = q.n, q.conductor
    s, f = q.sigma_exp, q.skew_exp
    add = lambda x, y: tuple(i + j for i, j in zip(x, y))  # noqa: E731
    mul = lambda k, x: tuple(k * i for i in x)  # noqa: E731
    checks = {
        "f_is_sigma_ratio": lambda a, b, c, k: f(a, b) == (s(a, b) - s(b, a)) % M,
        "f_skew": lambda a, b, c, k: (f(a, b) + f(b, a)) % M == 0,
        "sigma_left_additive": lambda a, b, c, k: s(add(a, b), c) == (s(a, c) + s(b, c)) % M,
        "sigma_right_additive": lambda a, b, c, k: s(a, add(b, c)) == (s(a, b) + s(a, c)) % M,
        "f_left_additive": lambda a, b, c, k: f(add(a, b), c) == (f(a, c) + f(b, c)) % M,
        "f_right_additive": lambda a, b, c, k: f(a, add(b, c)) == (f(a, b) + f(a, c)) % M,
        "f_multiple_left": lambda a, b, c, k: f(mul(k, a), a) == 0,
        "f_multiple_right": lambda a, b, c, k: f(a, mul(k, a)) == 0,
    }
    per = {name: 0 for name in checks}
    products = 0
    for _ in range(trials):
        a, b, c = (random_degree(rng, n, bound) for _ in range(3))
        k = rng.randint(-bound, bound)
        for name, check in checks.items():
            if not check(a, b, c, k):
                per[name] += 1
        # t^a t^b = sigma(a, b) t^(a+b) = f(a, b) t^b t^a on actual monomials
        ta, tb = TorusElement.monomial(q, a), TorusElement.monomial(q, b)
        ab, ba = multiply(ta, tb), multiply(tb, ta)
        if ab != TorusElement.monomial(q, add(a, b), root_of_unity(M, s(a, b))):
            products += 1
        elif ab != ba.scale(root_of_unity(M, f(a, b))):
            products += 1
    per["monomial_products"] = products
    return {"trials": trials, "identities": per, "failures": sum(per.values())}


def center_suite(q, trials=100, probes=20, seed=DEFAULT_SEED, bound=4):
    """Center/commutator splitting and monomial centrality against rad f."""
    rng = random.Random(seed)
    recombine = commute = centrality = 0
    gens = [TorusElement.generator(q, i) for i in range(q.n)]
    for _ in range(trials):
        x = random_torus_element(q, rng, terms=rng.randint(1, 4), bound=bound)
        z, c = split_center(x)
        if z + c != x:
            recombine += 1
        for _ in range(probes):
            p = random_torus_element(q, rng, terms=2, bound=bound)
            if not commutator(z, p).is_zero():
                commute += 1
                break
        a = random_degree(rng, q.n, bound)
        ta = TorusElement.monomial(q, a)
        central = all(commutator(ta, g).is_zero() for g in gens)
        if central != in_radf(q, a):
            centrality += 1
    per = {"recombine": recombine, "central_part_commutes": commute, "monomial_centrality": centrality}
    return {"trials": trials, "probes": probes, "checks": per, "failures": sum(per.values())}


def _random_in_coset(rng, q, target, bound):
    """Random (a, b, c) with a + b + c = target."""
    a = random_degree(rng, q.n, bound)
    b = random_degree(rng, q.n, bound)
    c = tuple(t - x - y for t, x, y in zip(target, a, b))
    return a, b, c


def hc1_suite(q, trials=50, seed=DEFAULT_SEED, bound=3):
    """Antisymmetry and the cyclic relation of the HC_1 normal form."""
    rng = random.Random(seed)
    lattice = radf_basis(q)
    M = q.conductor
    anti = cyc = 0
    for _ in range(trials):
        coords = [rng.randint(-1, 1) for _ in lattice.basis]
        r = tuple(sum(k * row[i] for k, row in zip(coords, lattice.basis)) for i in range(q.n))
        a, b, c = _random_in_coset(rng, q, r, bound)
        ab = tuple(x + y for x, y in zip(a, b))
        coef = _random_coef(rng, M)
        if not (normalize_pair(q, coef, ab, c) + normalize_pair(q, coef, c, ab)).is_zero():
            anti += 1
        bc = tuple(x + y for x, y in zip(b, c))
        ca = tuple(x + y for x, y in zip(c, a))
        total = (
            normalize_pair(q, root_of_unity(M, q.sigma_exp(a, b)), ab, c)
            + normalize_pair(q, root_of_unity(M, q.sigma_exp(b, c)), bc, a)
            + normalize_pair(q, root_of_unity(M, q.sigma_exp(c, a)), ca, b)
        )
        if not total.is_zero():
            cyc += 1
    per = {"antisymmetry": anti, "cyclic": cyc}
    return {"trials": trials, "checks": per, "failures": sum(per.values())}


def _pick_degrees(rng, q, bound):
    """Three degrees, biased so that pairwise sums often land in rad f."""
    lattice = radf_basis(q)
    a = random_degree(rng, q.n, bound)
    b = random_degree(rng, q.n, bound)
    if rng.random() < 0.5:
        # b = -a + (small element of rad f)
        row = rng.choice(lattice.basis) if rng.random() < 0.5 else (0,) * q.n
        b = tuple(-x + y for x, y in zip(a, row))
    c = random_degree(rng, q.n, bound)
    return a, b, c


def jacobi_suite(d, q, trials=100, seed=DEFAULT_SEED, bound=2):
    """Zero Jacobi residual on random homogeneous triples.

    ``hc1_triples`` counts triples where some pairwise bracket has a nonzero
    HC_1 component, so the central cocycle is genuinely exercised.
    """
    rng = random.Random(seed)
    failures = central = 0
    for _ in range(trials):
        x, y, z = (random_homogeneous(d, q, rng, deg) for deg in _pick_degrees(rng, q, bound))
        if any(not bracket(u, v).hc.is_zero() for u, v in ((x, y), (y, z), (z, x))):
            central += 1
        if not jacobi_residual(x, y, z).is_zero():
            failures += 1
    return {"trials": trials, "hc1_triples": central, "failures": failures}


def pi_suite(d, q, reps, trials=100, seed=DEFAULT_SEED, bound=3):
    """pi_tilde([x, y]) = [pi_tilde x, pi_tilde y] blockwise, with HC_1 sent to zero."""
    from .fiber import pi_tilde

    rng = random.Random(seed)
    failures = 0
    for _ in range(trials):
        a, b, _ = _pick_degrees(rng, q, bound)
        x = random_homogeneous(d, q, rng, a, with_center=False)
        y = random_homogeneous(d, q, rng, b, with_center=False)
        lhs = pi_tilde(bracket(x, y), reps, allow_central=True)
        X, Y = pi_tilde(x, reps), pi_tilde(y, reps)
        if any(L != la.commutator(A, B) for L, A, B in zip(lhs, X, Y)):
            failures += 1
    return {"trials": trials, "blocks": len(reps), "failures": failures}


def _random_graded_vector(module, rng, bound):
    from .graded_modules import GradedVector

    parts = {}
    for _ in range(rng.randint(1, 2)):
        m = random_degree(rng, module.q.n, bound)
        parts[m] = tuple(rng.randint(-2, 2) for _ in range(module.slice_dim))
    return GradedVector(parts)


def module_axiom_suite(module, trials=100, seed=DEFAULT_SEED, bound=2):
    """x.(y.v) - y.(x.v) = [x, y].v on random homogeneous x, y and graded v."""
    from .graded_modules import act

    rng = random.Random(seed)
    d, q = module.d, module.q
    failures = 0
    for _ in range(trials):
        a, b, _ = _pick_degrees(rng, q, bound)
        x = random_homogeneous(d, q, rng, a)
        y = random_homogeneous(d, q, rng, b)
        v = _random_graded_vector(module, rng, bound)
        lhs = act(module, x, act(module, y, v)) - act(module, y, act(module, x, v))
        if lhs != act(module, bracket(x, y), v):
            failures += 1
    return {"trials": trials, "failures": failures}


def central_action_suite(module, grades=1):
    """c_i and the HC_1 symbols of every small rad f degree act by zero."""
    from .graded_modules import GradedVector, act
    from .hc1 import HC1Element

    d, q = module.d, module.q
    lattice = radf_basis(q)
    failures = checked = 0
    degrees = [
        tuple(sum(k * row[i] for k, row in zip(ks, lattice.basis)) for i in range(q.n))
        for ks in product(range(-grades, grades + 1), repeat=len(lattice.basis))
    ]
    for r in degrees:
        for i in range(q.n):
            z = ToroidalElement.central(d, q, HC1Element(q, {(i, r): 1}))
            for j in range(module.slice_dim):
                w = tuple(int(k == j) for k in range(module.slice_dim))
                checked += 1
                if not act(module, z, GradedVector.single(w, (0,) * q.n)).is_zero():
                    failures += 1
    return {"checked": checked, "failures": failures}

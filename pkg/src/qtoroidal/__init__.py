"""Exact computations with rational quantum tori and their toroidal Lie algebras."""

from .errors import DivisionByZero, InvalidInput, NotRootOfUnity, ToroidalError, VerificationFailure
from .fiber import EvalPoints, FiberAlgebra, MatrixRep, build_fiber, crt_check, fiber_reps, pi_tilde, wedderburn
from .graded_modules import (
    FinRep,
    GradedModule,
    GradedVector,
    act,
    decompose_window,
    highest_central_operator,
    integrability_index,
    loop_vanishing_check,
    submodule_window,
    vplus,
)
from .hc1 import HC1Element, bruteforce_dim, graded_dim, normalize_pair
from .quantum_torus import TorusElement, commutator, multiply, split_center
from .roots_weyl import Root, Weight, coroot_eval, is_dominant_integral, reflect, translate
from .scalars import Cyclotomic, root_of_unity
from .toroidal import ToroidalElement, bracket, jacobi_residual
from .torus_form import QMatrix, Sublattice, radf_basis, sigma, skew

__version__ = "0.1.0"

__all__ = [
    "Cyclotomic",
    "root_of_unity",
    "QMatrix",
    "Sublattice",
    "radf_basis",
    "sigma",
    "skew",
    "TorusElement",
    "multiply",
    "commutator",
    "split_center",
    "HC1Element",
    "normalize_pair",
    "graded_dim",
    "bruteforce_dim",
    "ToroidalElement",
    "bracket",
    "jacobi_residual",
    "Root",
    "Weight",
    "coroot_eval",
    "reflect",
    "translate",
    "is_dominant_integral",
    "EvalPoints",
    "FiberAlgebra",
    "MatrixRep",
    "build_fiber",
    "wedderburn",
    "fiber_reps",
    "pi_tilde",
    "crt_check",
    "FinRep",
    "GradedModule",
    "GradedVector",
    "act",
    "vplus",
    "highest_central_operator",
    "integrability_index",
    "loop_vanishing_check",
    "submodule_window",
    "decompose_window",
    "ToroidalError",
    "InvalidInput",
    "DivisionByZero",
    "NotRootOfUnity",
    "VerificationFailure",
]

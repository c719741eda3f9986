"""Metaplectic SSV polynomials for GL_r by alcove walks, with a Hecke-operator oracle."""

from . import kernel
from .daha import (
    apply_CG,
    apply_omega,
    apply_S,
    apply_T,
    apply_T0,
    apply_Ti,
    apply_U,
    apply_Y,
    apply_Y_lattice,
    eigenvalue_check,
    intertwiner_E,
)
from .errors import (
    DivergentLimitError,
    DomainError,
    InternalInconsistencyError,
    MalformedMetaplecticError,
    MalformedScalarError,
    NotDivisibleError,
    RankMismatchError,
    SpecializationPoleError,
    SSVError,
)
from .field import Scalar, param_ring, scalar_equals, scalar_limit_q, scalar_normalize, scalar_substitute
from .formulas import compute_E, compute_E_limit, compute_P, compute_P_limit, compute_TuE, walk_coefficient
from .laurent import LaurentPolynomial, exact_divide_linear, geometric_ratio, poly_substitute_power
from .rootsys import AffineRoot, AffineWeylElement, MetaplecticContext, gamma_eval, psi_n, sigma_eval, weyl_act
from .walks import AlcoveWalk, classify_step, enumerate_walks, walk_filter
from .words import bruhat_lower_set, canonical_perm_word, order_compare_step, reduce_to_fundamental

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]

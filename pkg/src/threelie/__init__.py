"""Exact-arithmetic kernel for 3-Lie algebras.

Structure constants, r-matrices and coproducts are held as polynomials
with rational coefficients in named parameters (see :mod:`threelie.scalar`),
so every identity is checked exactly.
"""
from .algebra import ThreeLieAlgebra, check_fundamental_identity
from .catalog import CATALOG
from .cocycle import check_local_cocycle_bialgebra, check_one_cocycle, dual_algebra
from .cybe import (cybe_conditions, cybe_residual_naive, cybe_residual_skew,
                   induced_coproduct_components, induced_coproduct_wedge)
from .double import (build_double, check_manin_triple, constraint_eq26, constraint_eq27,
                      phi_action, solve_delta_families)
from .scalar import Scalar
from .tensor import Coproduct, RMatrix, Tensor, wedge

__version__ = "0.1.0"

"""Kronecker coefficients, reduced Kronecker coefficients and their stabilization."""

from ._kernels import DEFAULT_BACKEND as BACKEND
from .bounds import (
    bound_n1,
    bound_n2,
    bound_nb,
    bound_nv,
    max_gamma1,
    row_bound,
    stab_product,
    weight_range,
)
from .characters import CharacterCache, character, z
from .kronecker import kronecker_coefficient, kronecker_product
from .lr import lr_coefficient, lr_triple, perp, schur_product, skew_expansion
from .partitions import Partition, fmt, parse
from .reduced import (
    SupportTable,
    murnaghan_expansion,
    recover_kronecker,
    reduced_coefficient,
    reduced_coefficient_littlewood,
)
from .schur import SchurExpansion, lift_u, shift_v, straighten
from .stability import (
    BoundReport,
    compare_bounds,
    stab_product_empirical,
    stab_triple_empirical,
)

__version__ = "0.1.0"

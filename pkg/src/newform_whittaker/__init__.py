"""Exact newform Whittaker values on the torus of GL(n) over a p-adic field."""

from .scalars import Laurent, TruncSeries, numeric_eval, parse_rational, series_invert
from .symfunc import (
    SatakeParams,
    complete_h,
    dominant_signatures,
    elementary_e,
    is_dominant,
    pieri_expand,
    schur,
    schur_bialternant,
    schur_jacobi_trudi,
    schur_ssyt_oracle,
)
from .whittaker import (
    WhittakerTable,
    eigen_from_satake,
    lfactor_den_from_eigen,
    modulus_sqrt,
    solve_recursion_linear,
    verify_recursion,
    whittaker_table,
    whittaker_value,
)
from .zeta import lfactor_series, zeta_equals_lfactor, zeta_series
from .cosets import CosetSpec, ResidueMatrix, verify_coset_transversal

__version__ = "0.1.0"

"""Exact q-series workbench for crank-type generating functions.

Quick tour::

    >>> from crankforms import CRANK, crank_table, crank_dissection_dft
    >>> crank_table(CRANK, 3)[2]
    {-2: 1, 2: 1}
    >>> crank_dissection_dft(CRANK, 5, 0, 10).coeffs
    (1, -1, 0, 1, 1, 3, 1, 3, 4, 6)
"""

__version__ = "0.1.0"

from .cranks import (
    BIRANK,
    CRANK,
    CrankSpec,
    column_sum_series,
    crank_dissection_dft,
    crank_series_laurent,
    crank_table,
    dissect_laurent,
    k_crank_spec,
    klein_expansion,
    klein_series,
    klein_shift_factor,
    omega,
    omega_over_klein,
)
from .cyclotomic import CycInt, cyc_arith, cyc_embed, cyc_to_integer, cyclotomic_polynomial, gauss_sum
from .harness import (
    ClaimLedger,
    CongruenceClaim,
    VerificationReport,
    regression_suite,
    search,
    verify_claim,
)
from .modforms import (
    HeckeContext,
    QuadChar,
    TheoremParams,
    admissible_prime,
    assembly_target,
    build_Gm,
    build_P,
    eta_weight_char,
    hecke_Tp2,
    ligozat_order,
    theorem_params,
    tilde,
    twist,
    twist_slash,
)
from .numtheory import jacobi_symbol, kronecker_symbol
from .partitions import ColoredPartition, Partition, birank, brute_counts, crank, k_crank
from .qseries import (
    EtaQuotient,
    QSeries,
    coincide_on_progression,
    eta_expansion,
    extract_progression,
    freshman_pow,
    pochhammer,
    series_dilate,
    series_div,
    series_inv,
    series_mul,
)
from .rings import ZZ, CyclotomicRing, ModInt, ModRing
from .serialize import emit, load_series

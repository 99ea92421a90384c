"""Zeros of the Riemann zeta function from a damped Lambert-W fixed-point map.

Submodules: ``special_functions``, ``zeta``, ``zeros``, ``dcrt``,
``dynamics``, ``reference_data`` and the ``cli`` front end.
"""
__version__ = "0.1.0"

from .errors import (
    DomainError,
    IllConditionedArgument,
    MapDomainError,
    NotFoundError,
    PoleError,
    TableFormatError,
    ZetamapError,
)
from .special_functions import lambert_w0, log_gamma, theta
from .zeta import arg_zeta_half, hardy_z, zeta
from .zeros import (
    OrbitRecord,
    ZeroEstimate,
    asymptotic_residual,
    estimate_zero,
    exact_residual,
    iterate_map,
    map_step,
    solve_zero,
)
from .dcrt import Spectrum, dcrt_spectrum, detect_peaks, factor_via_dcrt, perturb_zeros
from .dynamics import BifurcationScan, bifurcation_scan, first_bifurcation_delta, orbit
from .reference_data import ComparisonStats, ZeroTable, compare_zeros, load_zero_table

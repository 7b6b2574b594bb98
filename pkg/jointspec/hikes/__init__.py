"""Simple cycles, hikes (heaps of cycles), excursions and their generating functions."""

from .series import TruncatedSeries, MatrixSeries
from .cycles import SimpleCycle, enumerate_simple_cycles, cycle_weight_sum, mobius_from_cycles
from .heaps import (
    Hike,
    build_hike,
    enumerate_hikes,
    right_divisor_filter,
    u_visits,
    von_mangoldt,
    von_mangoldt_u,
    log_weight,
    walk_to_hike,
)
from .walks import closed_walks, excursion_weights, pyramid_walk_counts
from .generating import (
    zeta_series,
    mobius_series,
    induced_zeta,
    resolvent_series,
    excursion_matrix,
    resolvent_block,
    ru_series,
    von_mangoldt_series,
    von_mangoldt_u_series,
    log_ru_series,
    rooted_moment_series,
    boolean_cumulants,
)
from .reconcile import (
    zeta_check,
    excursion_check,
    resolvent_block_check,
    ru_check,
    von_mangoldt_check,
    log_ru_check,
    boolean_cumulant_check,
    pyramid_check,
    induced_zeta_witness,
    reconcile_all,
)

__all__ = [
    "TruncatedSeries",
    "MatrixSeries",
    "SimpleCycle",
    "enumerate_simple_cycles",
    "cycle_weight_sum",
    "mobius_from_cycles",
    "Hike",
    "build_hike",
    "enumerate_hikes",
    "right_divisor_filter",
    "u_visits",
    "von_mangoldt",
    "von_mangoldt_u",
    "log_weight",
    "walk_to_hike",
    "closed_walks",
    "excursion_weights",
    "pyramid_walk_counts",
    "zeta_series",
    "mobius_series",
    "induced_zeta",
    "resolvent_series",
    "excursion_matrix",
    "resolvent_block",
    "ru_series",
    "von_mangoldt_series",
    "von_mangoldt_u_series",
    "log_ru_series",
    "rooted_moment_series",
    "boolean_cumulants",
    "zeta_check",
    "excursion_check",
    "resolvent_block_check",
    "ru_check",
    "von_mangoldt_check",
    "log_ru_check",
    "boolean_cumulant_check",
    "pyramid_check",
    "induced_zeta_witness",
    "reconcile_all",
]

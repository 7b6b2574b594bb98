"""Star products of graphs and their multivariate central limit."""

from .product import (
    StarProduct,
    build_star_product,
    literal_moment,
    direct_moment,
    reduced_moment,
    reduced_block_powers,
    star_moment,
    paths_agree,
    star_resolvent_closed_form,
    support_norm_check,
)
from .limit import (
    LimitLaw,
    limit_law,
    law_of,
    scaled_moment,
    limit_moment,
    mgf_tail_bound,
    rademacher_mgf_check,
    limit_mgf_from_moments,
)
from .report import convergence_report, fitted_slope, obata_degree, obata_special_case

__all__ = [
    "StarProduct",
    "build_star_product",
    "literal_moment",
    "direct_moment",
    "reduced_moment",
    "reduced_block_powers",
    "star_moment",
    "paths_agree",
    "star_resolvent_closed_form",
    "support_norm_check",
    "LimitLaw",
    "limit_law",
    "law_of",
    "scaled_moment",
    "limit_moment",
    "mgf_tail_bound",
    "rademacher_mgf_check",
    "limit_mgf_from_moments",
    "convergence_report",
    "fitted_slope",
    "obata_degree",
    "obata_special_case",
]

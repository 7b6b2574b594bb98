"""Joint spectral measure of a symmetric matrix and its moment identities."""

from .polynomial import Polynomial
from .partitions import SetPartition, set_partitions
from .measure import (
    Atom,
    SignedMeasure,
    build_measure,
    moment_oracle,
    moment_scale,
    rooted_spectral_measure,
    marginal_distribution,
)
from .moments import (
    generalized_moment,
    marginal_check,
    covariance_matrix,
    laplacian,
    power_covariance,
    principal_minor,
    cumulant,
    cycle_partition_identity,
    analytic_minor,
    trace_identity,
    submatrix_charpoly,
    resolvent_moment_series,
    index_on,
)
from .slater import slater_probability, slater_completeness, multivariate_marginal
from .basis import hadamard_lemma, class_rotation, measure_deviation, basis_independence_check

__all__ = [
    "Polynomial",
    "SetPartition",
    "set_partitions",
    "Atom",
    "SignedMeasure",
    "build_measure",
    "moment_oracle",
    "moment_scale",
    "rooted_spectral_measure",
    "marginal_distribution",
    "generalized_moment",
    "marginal_check",
    "covariance_matrix",
    "laplacian",
    "power_covariance",
    "principal_minor",
    "cumulant",
    "cycle_partition_identity",
    "analytic_minor",
    "trace_identity",
    "submatrix_charpoly",
    "resolvent_moment_series",
    "index_on",
    "slater_probability",
    "slater_completeness",
    "multivariate_marginal",
    "hadamard_lemma",
    "class_rotation",
    "measure_deviation",
    "basis_independence_check",
]

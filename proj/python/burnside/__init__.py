from _burnside import (
    bell,
    block_count_matrix,
    eigenvalues,
    fixed_point_moment,
    lumped_matrix,
    lumped_transition,
    minorization,
    mixing_time,
    sample_partition,
    spectral_report,
    stam_sample,
    stationary_lumped,
    stirling2,
    subfactorial,
    tv_curve,
    __version__,
)

__all__ = [
    "bell",
    "block_count_matrix",
    "eigenvalues",
    "fixed_point_moment",
    "lumped_matrix",
    "lumped_transition",
    "minorization",
    "mixing_time",
    "sample_partition",
    "spectral_report",
    "stam_sample",
    "stationary_lumped",
    "stirling2",
    "subfactorial",
    "tv_curve",
    "__version__",
]

"""Explicit Wasserstein-1 bounds for the normal approximation of empirical
autocovariances of AR(1) data, plus a Monte Carlo estimate of the true
distance."""
from ._accel import USE_NUMBA
from .ar1 import AR1Model, MDepApprox, cum_X, cum_Y, gamma, lag_product_moment, mdep_error, moment_Y, norm_X
from .bound import BoundBreakdown, MStarWarning, bound_curve, bound_stationary, noncentered_correction, optimize_m
from .innovations import InnovationModel, RngHandle, parse_dist
from .partitions import IndexedTable, Partition, PartitionFilter, enumerate_partitions, indecomposable_partitions
from .qbound import QMethod, QTermContext, d_tilde, m_terms, q_bound_method1, q_bound_method2, q_bound_sum
from .variance import c_tilde, sigma_asymptotic, sigma_tilde
from .wasserstein import W1Estimate, estimate_w1, normal_quantile, simulate_ar1, statistic, w1_vs_normal

__version__ = "0.1.0"

"""Bayesian nonparametric causal inference for semi-competing risks data.

Pipeline: ingest observed records, fit a truncated enriched mixture of
log-normal failure-time regressions by blocked Gibbs sampling, then run
Gaussian-copula G-computation for the landmark estimand tau(u) under
analyst-supplied sensitivity correlations.
"""

__version__ = "0.1.0"

from .data_model import CovariateSchema, Dataset, Mode, ObservedRecord, crosstab, ingest_dataset

__all__ = [
    "CovariateSchema",
    "Dataset",
    "Mode",
    "ObservedRecord",
    "crosstab",
    "ingest_dataset",
    "__version__",
]

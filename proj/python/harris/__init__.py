"""Harris discrete distributions: probabilities, sampling, fitting and stability checks."""

from ._core import (
    HarrisError,
    cdf,
    fit,
    gamma_harris_identity,
    id_check,
    moments,
    pgf,
    pmf,
    pmf_table,
    quantile,
    sample,
    sd_check,
)

__all__ = [
    "HarrisError",
    "cdf",
    "fit",
    "gamma_harris_identity",
    "id_check",
    "moments",
    "pgf",
    "pmf",
    "pmf_table",
    "quantile",
    "sample",
    "sd_check",
]

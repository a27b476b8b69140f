"""Peer-effect regression and log-likelihood model selection.

The model family is simple linear regression with Gaussian errors:
O_v = beta0 + beta1 * x_v + e_v, with x_v the aggregation covariate built
under one semantics. Parameters by least squares, variance by MLE, so
log L = -n/2 * (ln(2*pi*sigma2) + 1). Selecting a semantics means
comparing the log-likelihoods of the two fitted models.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph
from .neighborhoods import SemanticsKind
from .synth import AggKind, AttributeTable, peer_covariate

VARIANCE_FLOOR = 1e-12


class DegenerateCovariateError(ValueError):
    pass


class InsufficientDataError(ValueError):
    pass


@dataclass(frozen=True)
class FitResult:
    beta0: float
    beta1: float
    sigma2: float
    log_likelihood: float
    n_used: int
    semantics: SemanticsKind | None = None
    agg: AggKind | None = None
    floored: bool = False
    tie: bool = False


def gaussian_log_likelihood(n: int, sigma2: float) -> float:
    """Profile log-likelihood of an OLS fit at the MLE variance."""
    return -0.5 * n * (math.log(2.0 * math.pi * sigma2) + 1.0)


def ols_fit(x: np.ndarray, y: np.ndarray, *, semantics=None, agg=None,
            label: str = "") -> FitResult:
    """Least-squares line fit with MLE variance and Gaussian log-likelihood.

    sigma2 below VARIANCE_FLOOR is clamped (and flagged) so noise-free
    data yields a finite likelihood.
    """
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    n = len(x)
    if n != len(y):
        raise ValueError("x and y lengths differ")
    if n < 3:
        raise InsufficientDataError(f"need at least 3 points, got {n}{label}")
    xm = x.mean()
    sxx = float(((x - xm) ** 2).sum())
    if sxx == 0.0:
        raise DegenerateCovariateError(f"covariate is constant{label}")
    ym = y.mean()
    beta1 = float(((x - xm) * (y - ym)).sum()) / sxx
    beta0 = float(ym - beta1 * xm)
    resid = y - beta0 - beta1 * x
    sigma2 = float((resid ** 2).sum()) / n
    floored = sigma2 < VARIANCE_FLOOR
    if floored:
        sigma2 = VARIANCE_FLOOR
    return FitResult(
        beta0=beta0,
        beta1=beta1,
        sigma2=sigma2,
        log_likelihood=gaussian_log_likelihood(n, sigma2),
        n_used=n,
        semantics=semantics,
        agg=agg,
        floored=floored,
    )


def compare_semantics(
    g: Graph,
    table: AttributeTable,
    agg: AggKind,
    drop_empty: bool = False,
) -> tuple[FitResult, FitResult]:
    """Fit the peer-effect model under both set semantics on one sample.

    Returns (strictly-2 fit, 2-and-1 fit); the caller compares
    log-likelihoods. Identical covariates are a tie: both results carry
    tie=True and equal numbers. With drop_empty, vertices whose set is
    empty under either semantics are excluded from both fits so the
    samples stay identical.
    """
    x_strict = peer_covariate(g, table.treatment, SemanticsKind.SHORTEST_K, agg)
    x_path = peer_covariate(g, table.treatment, SemanticsKind.PATH_K, agg)
    y = table.outcome
    if drop_empty:
        sizes_strict = np.array(
            [len(m) for m in _member_arrays(g, SemanticsKind.SHORTEST_K)])
        sizes_path = np.array(
            [len(m) for m in _member_arrays(g, SemanticsKind.PATH_K)])
        keep = (sizes_strict > 0) & (sizes_path > 0)
        x_strict, x_path, y = x_strict[keep], x_path[keep], y[keep]
    if np.array_equal(x_strict, x_path):
        fit = ols_fit(x_strict, y, semantics=SemanticsKind.SHORTEST_K, agg=agg,
                      label=" (both semantics, tied covariates)")
        tied = FitResult(**{**fit.__dict__, "tie": True})
        return (
            tied,
            FitResult(**{**tied.__dict__, "semantics": SemanticsKind.PATH_K}),
        )
    try:
        fit_strict = ols_fit(x_strict, y, semantics=SemanticsKind.SHORTEST_K, agg=agg,
                             label=f" (semantics={SemanticsKind.SHORTEST_K.value})")
    except DegenerateCovariateError as err:
        raise DegenerateCovariateError(f"{err} [agg={agg.value}]") from None
    try:
        fit_path = ols_fit(x_path, y, semantics=SemanticsKind.PATH_K, agg=agg,
                           label=f" (semantics={SemanticsKind.PATH_K.value})")
    except DegenerateCovariateError as err:
        raise DegenerateCovariateError(f"{err} [agg={agg.value}]") from None
    return fit_strict, fit_path


def _member_arrays(g: Graph, kind: SemanticsKind):
    from .neighborhoods import members_k2

    return [members_k2(g, v, kind) for v in range(g.vertex_count)]

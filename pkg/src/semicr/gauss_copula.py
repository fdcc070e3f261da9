"""Scalar kernels for Gaussian-copula construction.

All latent-variable machinery in the estimation pipeline reduces to four
operations on standard-normal scores: a clamped probit, a bivariate normal
CDF, conditional draws V2 | V1 = v ~ N(rho*v, 1 - rho^2), and the inverse
standardization (v2 - rho*v1) / sqrt(1 - rho^2).
"""

import numpy as np
from scipy import integrate
from scipy.special import ndtr, ndtri

# Probit arguments are clamped into [EPS, 1-EPS] so that mixture CDFs that
# numerically hit 0 or 1 still map to finite scores.
PROBIT_EPS = 1e-12


def validate_correlation(value):
    """Return ``value`` if it is a correlation in the open interval (-1, 1)."""
    v = float(value)
    if not np.isfinite(v) or not -1.0 < v < 1.0:
        raise ValueError(f"correlation must lie strictly inside (-1, 1), got {value}")
    return v


def safe_probit(p):
    """Clamped standard-normal quantile, Phi^{-1}(clip(p, eps, 1-eps)).

    Accepts scalars or arrays; raises for arguments outside [0, 1].
    """
    arr = np.asarray(p, dtype=float)
    if np.any(np.isnan(arr)) or np.any(arr < 0.0) or np.any(arr > 1.0):
        raise ValueError(f"probability outside [0, 1]: {p}")
    out = ndtri(np.clip(arr, PROBIT_EPS, 1.0 - PROBIT_EPS))
    return float(out) if np.isscalar(p) or arr.ndim == 0 else out


def bivariate_gaussian_cdf(a, b, rho):
    """P(V1 <= a, V2 <= b) for standard bivariate normal with correlation rho.

    Evaluated as Phi(a)*Phi(b) plus the integral of the bivariate density
    over correlations [0, rho] (the derivative identity dPhi2/drho = phi2),
    which an adaptive quadrature resolves well below 1e-9 for |rho| <= 0.99.
    Used by tests and the vine bookkeeping only, never in the sampling loop.
    """
    rho = validate_correlation(rho)
    a = float(a)
    b = float(b)
    base = ndtr(a) * ndtr(b)
    if rho == 0.0:
        return base

    def density(r):
        om = 1.0 - r * r
        return np.exp(-(a * a - 2.0 * r * a * b + b * b) / (2.0 * om)) / (
            2.0 * np.pi * np.sqrt(om)
        )

    add, _ = integrate.quad(density, 0.0, rho, epsabs=1e-13, epsrel=1e-13, limit=200)
    return float(min(1.0, max(0.0, base + add)))


def conditional_latent_draw(v, rho, rng):
    """Draw V2 | V1 = v ~ N(rho * v, 1 - rho^2). Vectorizes over ``v``."""
    rho = validate_correlation(rho)
    v = np.asarray(v, dtype=float)
    draw = rho * v + np.sqrt(1.0 - rho * rho) * rng.standard_normal(v.shape)
    return float(draw) if v.ndim == 0 else draw


def conditional_score(v_given, v_anchor, rho):
    """Standardize a conditional draw: (v_given - rho*v_anchor)/sqrt(1-rho^2).

    Applied to the output of :func:`conditional_latent_draw` this recovers a
    standard-normal variate.
    """
    rho = validate_correlation(rho)
    out = (np.asarray(v_given, dtype=float) - rho * np.asarray(v_anchor, dtype=float)) / np.sqrt(
        1.0 - rho * rho
    )
    return float(out) if out.ndim == 0 else out

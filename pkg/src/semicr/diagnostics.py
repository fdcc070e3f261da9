"""Chain diagnostics: effective sample size and the split-chain
scale-reduction statistic."""

from dataclasses import dataclass

import numpy as np

from .errors import InsufficientDrawsError

MIN_DRAWS = 10


def effective_sample_size(x):
    """ESS with Geyer's initial-monotone-sequence truncation of the
    autocorrelation sum. Returns (ess, zero_variance_flag)."""
    x = np.asarray(x, dtype=float)
    n = x.size
    if n < MIN_DRAWS:
        raise InsufficientDrawsError(f"need at least {MIN_DRAWS} draws, got {n}")
    scale = max(1.0, float(np.max(np.abs(x))))
    x = x - x.mean()
    var = np.dot(x, x) / n
    if var <= (1e-12 * scale) ** 2:
        return float(n), True
    # autocovariance via FFT
    m = 1 << (2 * n - 1).bit_length()
    f = np.fft.rfft(x, m)
    acov = np.fft.irfft(f * np.conjugate(f), m)[:n].real / n
    rho = acov / acov[0]
    # Geyer: sum consecutive pairs, stop at first negative, enforce monotone
    max_pairs = (n - 1) // 2
    pair_sums = []
    for k in range(max_pairs):
        g = rho[2 * k + 1] + rho[2 * k + 2]
        if g < 0.0:
            break
        pair_sums.append(g)
    running_min = np.inf
    total = 0.0
    for g in pair_sums:
        running_min = min(running_min, g)
        total += running_min
    tau = max(1.0, -1.0 + 2.0 * (1.0 + total))
    return float(min(float(n), n / tau)), False


def split_rhat(chains):
    """Classic split-chain potential scale reduction over >= 2 chains of
    equal length."""
    chains = [np.asarray(c, dtype=float) for c in chains]
    if len(chains) < 2:
        raise ValueError("split_rhat needs at least two chains")
    n = min(c.size for c in chains)
    if n < MIN_DRAWS:
        raise InsufficientDrawsError(f"need at least {MIN_DRAWS} draws per chain, got {n}")
    half = n // 2
    halves = []
    for c in chains:
        halves.append(c[:half])
        halves.append(c[half : 2 * half])
    arr = np.asarray(halves)
    m, n2 = arr.shape
    w = arr.var(axis=1, ddof=1).mean()
    b = n2 * arr.mean(axis=1).var(ddof=1)
    if w == 0.0:
        return 1.0
    var_plus = (n2 - 1) / n2 * w + b / n2
    return float(np.sqrt(var_plus / w))


@dataclass(frozen=True)
class ParamDiagnostic:
    name: str
    ess: float
    rhat: float | None
    zero_variance: bool


def diagnose(named_chains):
    """Per-parameter diagnostics from {name: list-of-chains arrays}.

    Scale reduction is reported only when two or more chains are given.
    """
    rows = []
    for name, chains in named_chains.items():
        chains = [np.asarray(c, dtype=float) for c in chains]
        pooled = np.concatenate(chains)
        ess_total = 0.0
        zero_var = True
        for c in chains:
            ess, zv = effective_sample_size(c)
            ess_total += ess
            zero_var = zero_var and zv
        rhat = split_rhat(chains) if len(chains) >= 2 else None
        rows.append(
            ParamDiagnostic(
                name=name,
                ess=ess_total if not zero_var else float(pooled.size),
                rhat=rhat,
                zero_variance=zero_var,
            )
        )
    return rows

"""Descriptive survival estimators: Kaplan-Meier curves and cause-specific
cumulative-incidence functions.

These serve plots and data sanity checks; the causal pipeline's hazards live
inside the fitted mixture model.
"""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class StepFunction:
    """Right-continuous step function: ``initial`` before the first jump,
    ``values[i]`` from ``times[i]`` (inclusive) onward."""

    times: np.ndarray
    values: np.ndarray
    initial: float

    def __call__(self, t):
        idx = np.searchsorted(self.times, np.asarray(t, dtype=float), side="right")
        padded = np.concatenate(([self.initial], self.values))
        out = padded[idx]
        return float(out) if np.ndim(t) == 0 else out


def _check_inputs(times, flags):
    t = np.asarray(times, dtype=float)
    f = np.asarray(flags)
    if t.shape != f.shape:
        raise ValueError(f"length mismatch: {t.shape} times vs {f.shape} flags")
    if t.ndim != 1:
        raise ValueError("times must be one-dimensional")
    if np.any(t <= 0):
        raise ValueError("times must be positive")
    return t, f


def kaplan_meier(times, event_flags):
    """Product-limit survival estimate.

    Subjects censored at an event time are still counted at risk for that
    event (deaths processed before censorings at ties).
    """
    t, e = _check_inputs(times, event_flags)
    order = np.argsort(t, kind="mergesort")
    t, e = t[order], e[order].astype(int)
    jump_times, values = [], []
    s = 1.0
    n_at_risk = len(t)
    for ut in np.unique(t):
        mask = t == ut
        d = int(e[mask].sum())
        if d > 0:
            s *= 1.0 - d / n_at_risk
            jump_times.append(float(ut))
            values.append(s)
        n_at_risk -= int(mask.sum())
    return StepFunction(np.asarray(jump_times), np.asarray(values), 1.0)


def cause_specific_cdf(times, event_causes, cause):
    """Cumulative incidence 1 - exp(-Lambda) from the Nelson-Aalen cumulative
    hazard of one cause.

    ``event_causes`` holds integer cause codes (0 = censored); only events
    with code ``cause`` contribute hazard increments, while competing causes
    and censorings remove subjects from the risk set.
    """
    t, c = _check_inputs(times, event_causes)
    c = c.astype(int)
    if cause == 0:
        raise ValueError("cause code 0 denotes censoring")
    order = np.argsort(t, kind="mergesort")
    t, c = t[order], c[order]
    jump_times, values = [], []
    cum_hazard = 0.0
    n_at_risk = len(t)
    for ut in np.unique(t):
        mask = t == ut
        d = int(np.sum(c[mask] == cause))
        if d > 0:
            if n_at_risk <= 0:
                raise ValueError(f"no subjects at risk at event time {ut}")
            cum_hazard += d / n_at_risk
            jump_times.append(float(ut))
            values.append(1.0 - np.exp(-cum_hazard))
        n_at_risk -= int(mask.sum())
    return StepFunction(np.asarray(jump_times), np.asarray(values), 0.0)

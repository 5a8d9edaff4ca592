"""Construction and calibration of the default capacity.

The capacity family is symmetric except for an elevated weight on every
subset containing neuroticism: each behaviour gets base weight 1, neuroticism
1 + beta, and v(S) = (normalized subset weight) ** p. The two parameters
(p, beta) are grid-searched so that the reference worked example aggregates
to the published value while still labelling as High.
"""

from __future__ import annotations

from dataclasses import dataclass

from .choquet import BEHAVIOURS, Capacity, choquet_integral, validate_capacity, _subsets

# Published worked example: per-behaviour disinformer-profile memberships
# and the aggregated suspicion value they must reproduce.
REFERENCE_MEMBERSHIPS = {
    "agreeableness": 0.0,
    "conscientiousness": 0.41,
    "extroversion": 0.6,
    "openness": 0.61,
    "neuroticism": 0.95,
}
REFERENCE_VALUE = 0.65
REFERENCE_TOLERANCE = 0.02


def build_capacity(p: float, beta: float) -> Capacity:
    """Capacity from the two-parameter family: element weights 1 everywhere,
    1 + beta for neuroticism, v(S) = (w(S) / w(full)) ** p."""
    elem = {b: (1.0 + beta if b == "neuroticism" else 1.0) for b in BEHAVIOURS}
    total = sum(elem.values())
    values = {}
    for s in _subsets(BEHAVIOURS):
        if not s:
            values[s] = 0.0
        else:
            values[s] = (sum(elem[b] for b in s) / total) ** p
    return Capacity(tuple(BEHAVIOURS), values)


@dataclass(frozen=True)
class CalibrationResult:
    p: float
    beta: float
    value: float
    capacity: Capacity


def calibrate(target: float = REFERENCE_VALUE,
              tolerance: float = REFERENCE_TOLERANCE,
              high_threshold: float = 0.655) -> CalibrationResult:
    """Grid search (p, beta) minimizing |C - target| subject to the result
    staying at or above high_threshold, so the worked example keeps its
    published High label (with margin) under the default suspicion sets."""
    best = None
    for pi in range(12, 33):          # p in [0.6, 1.6] step 0.05
        p = pi * 0.05
        for bi in range(0, 101):      # beta in [0, 5] step 0.05
            beta = bi * 0.05
            cap = build_capacity(p, beta)
            value = choquet_integral(REFERENCE_MEMBERSHIPS, cap)
            if value < high_threshold or abs(value - target) > tolerance:
                continue
            err = abs(value - target)
            if best is None or err < best[0] - 1e-15:
                best = (err, p, beta, value, cap)
    if best is None:
        raise RuntimeError("calibration grid produced no feasible capacity")
    _, p, beta, value, cap = best
    assert validate_capacity(cap).ok
    return CalibrationResult(round(p, 2), round(beta, 2), value, cap)

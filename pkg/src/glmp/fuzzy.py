"""Fuzzy primitives: membership functions, partitions, label weights,
rule-base inference, weighted averaging and centroid defuzzification.

Inference is Mamdani-style: min for rule firing, max for per-label
aggregation, followed by renormalization so outputs always sum to 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

INF = math.inf
WEIGHT_TOL = 1e-9


class ConfigError(ValueError):
    """Invalid partition / rule-base / model configuration."""


class InputError(ValueError):
    """Invalid runtime input (non-finite value, out-of-range criterion...)."""


@dataclass(frozen=True)
class MembershipFunction:
    """Piecewise-linear membership function.

    shape is "triangular" (a, b, c) or "trapezoidal" (a, b, c, d);
    upper parameters may be +inf for plateaus extending to infinity.
    """

    shape: str
    params: tuple[float, ...]

    def __post_init__(self):
        if self.shape == "triangular":
            if len(self.params) != 3:
                raise ConfigError("triangular function needs 3 parameters")
        elif self.shape == "trapezoidal":
            if len(self.params) != 4:
                raise ConfigError("trapezoidal function needs 4 parameters")
        else:
            raise ConfigError(f"unknown membership shape {self.shape!r}")

    def ordered(self) -> bool:
        """True when parameters are non-decreasing. Unordered functions are
        invalid; they are rejected at config load and flagged by
        validate_partition, but may exist transiently for diagnostics."""
        return list(self.params) == sorted(self.params)

    @property
    def as_trapezoid(self) -> tuple[float, float, float, float]:
        if self.shape == "triangular":
            a, b, c = self.params
            return (a, b, b, c)
        return self.params  # type: ignore[return-value]

    def __call__(self, x: float) -> float:
        if not math.isfinite(x):
            raise InputError(f"membership input must be finite, got {x}")
        a, b, c, d = self.as_trapezoid
        if b <= x <= c:
            return 1.0
        if x < a or x > d:
            return 0.0
        if x < b:  # rising edge, a < x < b so a < b
            return (x - a) / (b - a)
        if math.isinf(d):  # plateau extending to infinity
            return 1.0
        # falling edge, c < x < d so c < d
        return (d - x) / (d - c)

    def centroid(self, universe_hi: float) -> float:
        """Area centroid, with unbounded plateaus truncated at universe_hi."""
        a, b, c, d = self.as_trapezoid
        c = min(c, universe_hi)
        d = min(d, universe_hi)
        b = min(b, universe_hi)
        # piece areas and centroids: rising ramp, plateau, falling ramp
        pieces = [
            ((b - a) / 2.0, (a + 2 * b) / 3.0),
            (c - b, (b + c) / 2.0),
            ((d - c) / 2.0, (2 * c + d) / 3.0),
        ]
        area = sum(p[0] for p in pieces)
        if area <= 0.0:
            return a
        return sum(w * x for w, x in pieces) / area


@dataclass(frozen=True)
class LabelWeights:
    """Validity weights over an ordered label vocabulary (sums to 1)."""

    labels: tuple[str, ...]
    weights: tuple[float, ...]

    def __post_init__(self):
        if len(self.labels) != len(self.weights):
            raise ConfigError("labels and weights must have the same length")

    @staticmethod
    def one_hot(labels: Sequence[str], label: str) -> "LabelWeights":
        if label not in labels:
            raise ConfigError(f"label {label!r} not in {labels}")
        return LabelWeights(tuple(labels), tuple(1.0 if l == label else 0.0 for l in labels))

    def normalized(self) -> "LabelWeights":
        total = sum(self.weights)
        if total <= 0.0:
            raise InputError("cannot normalize all-zero weights")
        return LabelWeights(self.labels, tuple(w / total for w in self.weights))

    def weight(self, label: str) -> float:
        return self.weights[self.labels.index(label)]

    @property
    def argmax_label(self) -> str:
        best = max(range(len(self.weights)), key=lambda i: self.weights[i])
        return self.labels[best]

    def reported_label(self, tau: float, sep: str = "/") -> str:
        """Argmax label, or a combined label such as "medium/high" when the
        runner-up is adjacent and trails by less than tau."""
        order = sorted(range(len(self.weights)), key=lambda i: -self.weights[i])
        top = order[0]
        if len(order) > 1:
            second = order[1]
            if abs(top - second) == 1 and (self.weights[top] - self.weights[second]) < tau:
                lo, hi = sorted((top, second))
                return f"{self.labels[lo]}{sep}{self.labels[hi]}"
        return self.labels[top]

    def as_dict(self) -> dict[str, float]:
        return dict(zip(self.labels, self.weights))

    def is_one_hot(self) -> bool:
        return any(w == 1.0 for w in self.weights) and sum(self.weights) == 1.0


@dataclass(frozen=True)
class FuzzyPartition:
    """Ordered labelled membership functions over a closed universe."""

    labels: tuple[str, ...]
    functions: tuple[MembershipFunction, ...]
    universe: tuple[float, float]
    normalized: bool = True

    def __post_init__(self):
        if len(self.labels) < 2:
            raise ConfigError("partition needs at least 2 labels")
        if len(self.labels) != len(self.functions):
            raise ConfigError("one membership function per label required")
        lo, hi = self.universe
        if not (lo < hi):
            raise ConfigError(f"empty universe [{lo}, {hi}]")

    def fuzzify(self, x: float, warnings: Optional[list[str]] = None) -> LabelWeights:
        """Per-label memberships at x, renormalized to sum 1.

        Out-of-universe inputs are clamped; a note is appended to warnings.
        """
        if not math.isfinite(x):
            raise InputError(f"cannot fuzzify non-finite value {x}")
        lo, hi = self.universe
        if x < lo or x > hi:
            clamped = min(max(x, lo), hi)
            if warnings is not None:
                warnings.append(f"value {x:g} outside universe [{lo:g}, {hi:g}], clamped to {clamped:g}")
            x = clamped
        raw = LabelWeights(self.labels, tuple(fn(x) for fn in self.functions))
        return raw.normalized()

    def centroids(self) -> tuple[float, ...]:
        return tuple(fn.centroid(self.universe[1]) for fn in self.functions)


@dataclass(frozen=True)
class PartitionDiagnostics:
    issues: tuple[str, ...]
    ruspini_deviation: Optional[float]

    @property
    def ok(self) -> bool:
        return not self.issues


def validate_partition(p: FuzzyPartition, grid_points: int = 1000) -> PartitionDiagnostics:
    """Check parameter ordering and, for normalized partitions, the maximum
    deviation of the membership sum from 1 over a uniform grid."""
    issues: list[str] = []
    for label, fn in zip(p.labels, p.functions):
        if not fn.ordered():
            issues.append(f"{label}: parameters out of order {fn.params}")
    deviation = None
    if p.normalized and not issues:
        lo, hi = p.universe
        step = (hi - lo) / (grid_points - 1)
        deviation = 0.0
        for i in range(grid_points):
            x = lo + i * step
            total = sum(fn(x) for fn in p.functions)
            deviation = max(deviation, abs(total - 1.0))
        if deviation >= WEIGHT_TOL:
            issues.append(f"membership sum deviates from 1 by up to {deviation:g}")
    return PartitionDiagnostics(tuple(issues), deviation)


@dataclass(frozen=True)
class RuleBase:
    """Complete deterministic rule table over up to 3 inputs.

    input_labels holds one ordered label vocabulary per input; rules maps
    every antecedent label tuple to one consequent label.
    """

    input_labels: tuple[tuple[str, ...], ...]
    output_labels: tuple[str, ...]
    rules: dict[tuple[str, ...], str]

    def __post_init__(self):
        if not 1 <= len(self.input_labels) <= 3:
            raise ConfigError("rule bases support 1 to 3 inputs")
        for combo, out in self.rules.items():
            if out not in self.output_labels:
                raise ConfigError(f"rule {combo} -> {out!r}: unknown consequent")

    def _combos(self) -> Iterable[tuple[str, ...]]:
        import itertools

        return itertools.product(*self.input_labels)

    def missing_antecedents(self) -> list[tuple[str, ...]]:
        """Antecedent combinations without a rule (complete bases return [])."""
        return [combo for combo in self._combos() if combo not in self.rules]

    def infer(self, inputs: Sequence[LabelWeights]) -> LabelWeights:
        """Min firing / max aggregation inference, renormalized."""
        if len(inputs) != len(self.input_labels):
            raise ConfigError(f"expected {len(self.input_labels)} inputs, got {len(inputs)}")
        for lw, expected in zip(inputs, self.input_labels):
            if set(lw.labels) != set(expected):
                raise ConfigError(f"input labels {lw.labels} do not match rule base {expected}")
        strengths = {label: 0.0 for label in self.output_labels}
        for combo, out in self.rules.items():
            firing = min(lw.weight(lab) for lw, lab in zip(inputs, combo))
            if firing > strengths[out]:
                strengths[out] = firing
        total = sum(strengths.values())
        if total <= 0.0:
            raise RuntimeError("no rule fired on normalized inputs (internal error)")
        return LabelWeights(self.output_labels, tuple(strengths[l] / total for l in self.output_labels))


@dataclass(frozen=True)
class WeightVector:
    weights: tuple[float, ...]

    def __post_init__(self):
        if any(w < 0 for w in self.weights):
            raise ConfigError("weights must be nonnegative")
        total = sum(self.weights)
        if total <= 0:
            raise ConfigError("weights must not all be zero")

    def normalized(self) -> tuple[float, ...]:
        total = sum(self.weights)
        return tuple(w / total for w in self.weights)


def weighted_average(inputs: Sequence[LabelWeights], w: WeightVector,
                     output_labels: Optional[Sequence[str]] = None) -> LabelWeights:
    """Convex combination of label-weight vectors, aligned by label name.

    All inputs must share one label set (order may differ; weights are
    matched by name). Output order follows output_labels when given,
    otherwise the first input.
    """
    if len(inputs) != len(w.weights):
        raise ConfigError(f"{len(inputs)} inputs but {len(w.weights)} weights")
    if not inputs:
        raise ConfigError("weighted average needs at least one input")
    label_set = set(inputs[0].labels)
    for lw in inputs[1:]:
        if set(lw.labels) != label_set:
            raise ConfigError(f"mismatched label sets: {lw.labels} vs {inputs[0].labels}")
    out_labels = tuple(output_labels) if output_labels is not None else inputs[0].labels
    if set(out_labels) != label_set:
        raise ConfigError(f"output labels {out_labels} do not match inputs")
    weights = w.normalized()
    combined = tuple(
        sum(wi * lw.weight(label) for wi, lw in zip(weights, inputs))
        for label in out_labels
    )
    return LabelWeights(out_labels, combined)


def defuzzify_centroid(p: FuzzyPartition, lw: LabelWeights) -> float:
    """Weighted center-of-sets: sum of label weights times each function's
    area centroid (unbounded shapes truncated at the universe edge)."""
    if set(lw.labels) != set(p.labels):
        raise ConfigError(f"weights labels {lw.labels} do not match partition {p.labels}")
    cents = dict(zip(p.labels, p.centroids()))
    return sum(lw.weight(label) * cents[label] for label in p.labels)


def parse_membership(spec: dict) -> MembershipFunction:
    """Build a MembershipFunction from config data; null params mean +inf."""
    shape = spec.get("shape")
    raw = spec.get("params", ())
    params = tuple(INF if v is None else float(v) for v in raw)
    fn = MembershipFunction(shape, params)
    if not fn.ordered():
        raise ConfigError(f"membership parameters must be non-decreasing: {params}")
    return fn


def parse_partition(spec: dict) -> FuzzyPartition:
    labels = tuple(spec["labels"])
    functions = tuple(parse_membership(f) for f in spec["functions"])
    lo, hi = spec["universe"]
    return FuzzyPartition(labels, functions, (float(lo), float(hi)),
                          normalized=bool(spec.get("normalized", True)))

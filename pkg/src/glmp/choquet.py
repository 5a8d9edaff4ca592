"""Capacity (fuzzy measure) handling, the Choquet integral, disinformer
profile membership and suspicion labelling."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .fuzzy import (
    ConfigError,
    FuzzyPartition,
    InputError,
    LabelWeights,
    MembershipFunction,
    parse_membership,
    parse_partition,
)

BEHAVIOURS = ("agreeableness", "conscientiousness", "extroversion", "neuroticism", "openness")


def _subsets(ground: Sequence[str]):
    for r in range(len(ground) + 1):
        for combo in itertools.combinations(ground, r):
            yield frozenset(combo)


@dataclass(frozen=True)
class Capacity:
    """Monotone set function on the behaviour set, v(empty)=0, v(full)=1."""

    ground: tuple[str, ...]
    values: Mapping[frozenset, float]

    def __post_init__(self):
        for subset in _subsets(self.ground):
            if subset not in self.values:
                raise ConfigError(f"capacity missing subset {sorted(subset)}")

    def __call__(self, subset) -> float:
        return self.values[frozenset(subset)]

    @staticmethod
    def additive(weights: Mapping[str, float]) -> "Capacity":
        """Capacity from per-element weights (normalized to sum 1)."""
        ground = tuple(sorted(weights))
        total = sum(weights.values())
        if total <= 0:
            raise ConfigError("additive capacity needs positive total weight")
        values = {
            s: sum(weights[e] for e in s) / total for s in _subsets(ground)
        }
        return Capacity(ground, values)

    @staticmethod
    def from_config(spec: dict) -> "Capacity":
        ground = tuple(sorted(spec["ground"]))
        values = {}
        for key, v in spec["values"].items():
            subset = frozenset(k for k in key.split("+") if k) if key else frozenset()
            values[subset] = float(v)
        return Capacity(ground, values)

    def to_config(self) -> dict:
        return {
            "ground": list(self.ground),
            "values": {
                "+".join(sorted(s)): self.values[s]
                for s in _subsets(self.ground)
            },
        }


@dataclass(frozen=True)
class CapacityDiagnostics:
    issues: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.issues


def validate_capacity(c: Capacity) -> CapacityDiagnostics:
    """Boundary and monotonicity check; every violating pair is listed."""
    issues: list[str] = []
    empty = frozenset()
    full = frozenset(c.ground)
    if abs(c.values[empty]) > 1e-12:
        issues.append(f"v(empty) = {c.values[empty]:g}, expected 0")
    if abs(c.values[full] - 1.0) > 1e-12:
        issues.append(f"v(full) = {c.values[full]:g}, expected 1")
    subsets = list(_subsets(c.ground))
    for s in subsets:
        for extra in c.ground:
            if extra in s:
                continue
            t = s | {extra}
            if c.values[s] > c.values[t] + 1e-12:
                issues.append(
                    f"monotonicity: v({sorted(s)})={c.values[s]:g} > v({sorted(t)})={c.values[t]:g}"
                )
    return CapacityDiagnostics(tuple(issues))


def choquet_integral(x: Mapping[str, float], c: Capacity) -> float:
    """Discrete Choquet integral of criteria x under capacity c.

    Criteria are sorted ascending (ties broken by name, which cannot change
    the value); each increment is weighted by the capacity of the index set
    of the still-larger components.
    """
    if set(x) != set(c.ground):
        raise ConfigError(f"criteria {sorted(x)} do not match ground set {sorted(c.ground)}")
    for name, v in x.items():
        if not 0.0 <= v <= 1.0:
            raise InputError(f"criterion {name}={v} outside [0, 1]")
    order = sorted(x, key=lambda name: (x[name], name))
    total = 0.0
    prev = 0.0
    for i, name in enumerate(order):
        remaining = frozenset(order[i:])
        total += (x[name] - prev) * c.values[remaining]
        prev = x[name]
    return total


@dataclass(frozen=True)
class ProfileSets:
    """Per-behaviour membership of a crisp [0, 10] score in the
    political-domain disinformer profile."""

    functions: Mapping[str, MembershipFunction]

    def membership(self, behaviour: str, score: float) -> float:
        if behaviour not in self.functions:
            raise ConfigError(f"unknown behaviour {behaviour!r}")
        if not 0.0 <= score <= 10.0:
            raise InputError(f"behaviour score {score} outside [0, 10]")
        return self.functions[behaviour](score)

    @staticmethod
    def from_config(spec: dict) -> "ProfileSets":
        return ProfileSets({name: parse_membership(fn) for name, fn in spec.items()})


@dataclass(frozen=True)
class SuspicionResult:
    value: float
    base_label: str
    reported_label: str
    memberships: LabelWeights

    def as_dict(self) -> dict:
        return {
            "value": self.value,
            "base_label": self.base_label,
            "reported_label": self.reported_label,
            "memberships": self.memberships.as_dict(),
        }


@dataclass(frozen=True)
class SuspicionSets:
    """Fuzzy partition of the [0, 1] suspicion scale plus the threshold for
    combined labels such as "Medium/High"."""

    partition: FuzzyPartition
    tau: float = 0.2
    combined_labels: bool = True

    def label(self, value: float) -> SuspicionResult:
        if not 0.0 <= value <= 1.0:
            raise InputError(f"suspicion value {value} outside [0, 1]")
        memberships = self.partition.fuzzify(value)
        base = memberships.argmax_label
        reported = memberships.reported_label(self.tau) if self.combined_labels else base
        return SuspicionResult(value, base, reported, memberships)

    @property
    def report_labels(self) -> tuple[str, ...]:
        """All reachable reported labels, low to high."""
        labels = []
        for i, lab in enumerate(self.partition.labels):
            labels.append(lab)
            if i + 1 < len(self.partition.labels):
                labels.append(f"{lab}/{self.partition.labels[i + 1]}")
        return tuple(labels)

    @staticmethod
    def from_config(spec: dict) -> "SuspicionSets":
        return SuspicionSets(
            partition=parse_partition(spec["partition"]),
            tau=float(spec.get("tau", 0.2)),
            combined_labels=bool(spec.get("combined_labels", True)),
        )


def suspicion_label(value: float, ss: SuspicionSets) -> SuspicionResult:
    return ss.label(value)

"""Measure schema, measure-document parsing and batch evaluation."""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .fuzzy import ConfigError


class MeasureDocumentError(ValueError):
    """Schema violation in a measure document; message carries the field path."""


@dataclass(frozen=True)
class MeasureDef:
    id: str
    modality: str            # audio | text | topic | video
    kind: str                # numeric | categorical
    unit: Optional[str] = None
    range: Optional[tuple[float, float]] = None
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        if self.kind == "numeric" and self.range is None:
            raise ConfigError(f"numeric measure {self.id!r} needs a range")
        if self.kind == "categorical" and not self.labels:
            raise ConfigError(f"categorical measure {self.id!r} needs labels")


@dataclass(frozen=True)
class MeasureSchema:
    measures: tuple[MeasureDef, ...]

    def __post_init__(self):
        ids = [m.id for m in self.measures]
        if len(ids) != len(set(ids)):
            raise ConfigError("duplicate measure ids in schema")

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(m.id for m in self.measures)

    def get(self, measure_id: str) -> MeasureDef:
        for m in self.measures:
            if m.id == measure_id:
                return m
        raise KeyError(measure_id)

    @staticmethod
    def from_config(specs: Iterable[dict]) -> "MeasureSchema":
        defs = []
        for spec in specs:
            defs.append(MeasureDef(
                id=spec["id"],
                modality=spec["modality"],
                kind=spec["kind"],
                unit=spec.get("unit"),
                range=tuple(float(v) for v in spec["range"]) if "range" in spec else None,
                labels=tuple(spec["labels"]) if "labels" in spec else None,
            ))
        return MeasureSchema(tuple(defs))


@dataclass(frozen=True)
class MeasureSet:
    """Validated per-video measure values; None marks an explicit null."""

    video_id: str
    values: dict[str, object]
    provenance: dict[str, str] = field(default_factory=dict)
    warnings: tuple[str, ...] = ()


def parse_measures(doc: str, schema: MeasureSchema) -> MeasureSet:
    """Parse and validate a measure document against the schema.

    Numeric values outside the declared range are clamped with a warning;
    nulls are kept as None; unknown measure ids are an error.
    """
    try:
        data = json.loads(doc)
    except json.JSONDecodeError as exc:
        raise MeasureDocumentError(
            f"measure document parse error at line {exc.lineno}: {exc.msg}") from exc
    if not isinstance(data, dict):
        raise MeasureDocumentError("measure document must be a JSON object")
    video_id = data.get("video_id")
    if not isinstance(video_id, str) or not video_id:
        raise MeasureDocumentError("video_id: missing or not a string")
    raw = data.get("measures")
    if not isinstance(raw, dict):
        raise MeasureDocumentError("measures: missing or not an object")

    warnings: list[str] = []
    values: dict[str, object] = {}
    provenance: dict[str, str] = {}
    known = set(schema.ids)
    for key, value in raw.items():
        if key not in known:
            raise MeasureDocumentError(f"measures.{key}: unknown measure id")
        mdef = schema.get(key)
        if value is None:
            values[key] = None
            warnings.append(f"measures.{key}: null value")
            continue
        if mdef.kind == "categorical":
            if value not in mdef.labels:
                raise MeasureDocumentError(
                    f"measures.{key}: {value!r} not in {list(mdef.labels)}")
            values[key] = value
        else:
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise MeasureDocumentError(f"measures.{key}: expected a number, got {value!r}")
            value = float(value)
            if not math.isfinite(value):
                raise MeasureDocumentError(f"measures.{key}: non-finite value")
            lo, hi = mdef.range
            if value < lo or value > hi:
                clamped = min(max(value, lo), hi)
                warnings.append(f"measures.{key}: {value:g} outside [{lo:g}, {hi:g}], clamped")
                value = clamped
            values[key] = value
    meta = data.get("meta", {})
    if isinstance(meta, dict):
        prov = meta.get("provenance", {})
        if isinstance(prov, dict):
            provenance = {k: str(v) for k, v in prov.items()}
    return MeasureSet(video_id=video_id, values=values,
                      provenance=provenance, warnings=tuple(warnings))


def parse_measures_file(path, schema: MeasureSchema) -> MeasureSet:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_measures(fh.read(), schema)


@dataclass(frozen=True)
class BatchItem:
    index: int
    source: str
    assessment: Optional[object] = None     # Assessment on success
    error: Optional[str] = None


@dataclass(frozen=True)
class BatchResult:
    items: tuple[BatchItem, ...]
    histogram: dict[str, int]

    @property
    def failures(self) -> tuple[BatchItem, ...]:
        return tuple(item for item in self.items if item.error is not None)

    def summary(self) -> dict:
        succeeded = sum(1 for i in self.items if i.error is None)
        total = len(self.items)
        percentages = {
            label: (100.0 * count / succeeded if succeeded else 0.0)
            for label, count in self.histogram.items()
        }
        return {
            "total": total,
            "succeeded": succeeded,
            "failed": total - succeeded,
            "histogram": dict(self.histogram),
            "percentages": percentages,
            "failures": [{"source": i.source, "error": i.error} for i in self.failures],
        }


def batch_evaluate(inputs, g, policy: str = "renormalize",
                   jobs: int = 1) -> BatchResult:
    """Assess each MeasureSet independently and tally the five-level label
    histogram. Per-item failures are recorded without aborting the batch;
    results keep the input order regardless of scheduling."""
    from .model import assess  # deferred: model imports this module

    labelled = list(inputs)

    def run_one(pair):
        index, item = pair
        source = getattr(item, "video_id", str(index))
        try:
            return BatchItem(index=index, source=source, assessment=assess(g, item, policy=policy))
        except Exception as exc:  # per-item isolation: any failure is recorded
            return BatchItem(index=index, source=source, error=f"{type(exc).__name__}: {exc}")

    pairs = list(enumerate(labelled))
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            items = list(pool.map(run_one, pairs))
    else:
        items = [run_one(p) for p in pairs]
    items.sort(key=lambda it: it.index)

    histogram = {label: 0 for label in g.suspicion_sets.report_labels}
    for item in items:
        if item.assessment is not None:
            histogram[item.assessment.suspicion.reported_label] += 1
    return BatchResult(tuple(items), histogram)

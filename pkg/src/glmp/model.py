"""Perception-graph data model, config loading/validation and the evaluation
engine that runs raw measures up the hierarchy to the suspicion verdict.

A model is a DAG of perception nodes: level 1 fuzzifies one raw measure each,
levels 2-4 aggregate lower nodes through rule bases or weighted averages, and
the single level-5 node defuzzifies the five behaviour nodes, maps the scores
through the disinformer profile sets and aggregates them with the Choquet
integral.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Optional

from . import fuzzy
from .choquet import (
    Capacity,
    ProfileSets,
    SuspicionResult,
    SuspicionSets,
    choquet_integral,
    validate_capacity,
)
from .fuzzy import (
    ConfigError,
    FuzzyPartition,
    LabelWeights,
    RuleBase,
    WeightVector,
    defuzzify_centroid,
    parse_partition,
    validate_partition,
    weighted_average,
)
from .measures import MeasureSchema, MeasureSet

DEFAULT_MODEL_NAME = "political-disinfo-v1"

AGGREGATORS = ("partition-fuzzify", "categorical", "rule-base", "weighted-average", "choquet-pipeline")


class EvaluationError(RuntimeError):
    """Raised when a required measure is missing under the strict policy."""


@dataclass(frozen=True)
class PerceptionNode:
    id: str
    level: int
    name: str
    aggregator: str
    inputs: tuple[str, ...] = ()            # child node ids (levels 2-5)
    measure: Optional[str] = None           # measure id (level 1)
    partition: Optional[FuzzyPartition] = None
    categorical_labels: Optional[tuple[str, ...]] = None
    rules: Optional[RuleBase] = None
    weights: Optional[WeightVector] = None
    output_labels: Optional[tuple[str, ...]] = None
    behaviours: Optional[dict[str, str]] = None   # child id -> behaviour name
    relevance: Optional[tuple[float, ...]] = None
    template: Optional[str] = None


@dataclass(frozen=True)
class ModelGraph:
    name: str
    schema_version: int
    nodes: dict[str, PerceptionNode]
    schema: MeasureSchema
    score_partition: FuzzyPartition
    capacity: Capacity
    profile_sets: ProfileSets
    suspicion_sets: SuspicionSets
    report_tau: float = 0.2
    dependency_template: str = "{name} depends on {children}."

    @property
    def root(self) -> PerceptionNode:
        roots = [n for n in self.nodes.values() if n.level == 5]
        if len(roots) != 1:
            raise ConfigError(f"expected one level-5 node, found {len(roots)}")
        return roots[0]

    def level_counts(self) -> tuple[int, ...]:
        counts = [0] * 5
        for n in self.nodes.values():
            if 1 <= n.level <= 5:
                counts[n.level - 1] += 1
        return tuple(counts)

    def ordered_nodes(self) -> list[PerceptionNode]:
        return sorted(self.nodes.values(), key=lambda n: (n.level, n.id))


@dataclass
class TreeNode:
    """One evaluated perception: linguistic value plus raw event data."""

    id: str
    name: str
    level: int
    weights: Optional[LabelWeights]
    crisp: Optional[float] = None
    event: object = None                    # raw measure value at level 1
    children: list["TreeNode"] = field(default_factory=list)

    @property
    def label(self) -> Optional[str]:
        return self.weights.argmax_label if self.weights is not None else None

    def reported_label(self, tau: float) -> Optional[str]:
        return self.weights.reported_label(tau) if self.weights is not None else None

    def walk(self):
        yield self
        for child in self.children:
            yield from child.walk()

    def as_dict(self, tau: float) -> dict:
        out = {
            "id": self.id,
            "name": self.name,
            "level": self.level,
            "label": self.label,
            "reported_label": self.reported_label(tau),
            "weights": self.weights.as_dict() if self.weights is not None else None,
        }
        if self.crisp is not None:
            out["crisp"] = self.crisp
        if self.level == 1:
            out["event"] = self.event
        if self.children:
            out["children"] = [c.as_dict(tau) for c in self.children]
        return out


@dataclass(frozen=True)
class Assessment:
    video_id: str
    tree: TreeNode
    behaviour_scores: dict[str, float]
    profile_memberships: dict[str, float]
    suspicion: SuspicionResult
    warnings: tuple[str, ...]

    def as_dict(self, include_tree: bool = True, tau: float = 0.2) -> dict:
        out = {
            "video_id": self.video_id,
            "behaviour_scores": self.behaviour_scores,
            "profile_memberships": self.profile_memberships,
            "suspicion": self.suspicion.as_dict(),
            "warnings": list(self.warnings),
        }
        if include_tree:
            out["tree"] = self.tree.as_dict(tau)
        return out


# --- loading ---------------------------------------------------------------

def _parse_rules(spec: dict) -> RuleBase:
    table = {}
    for entry in spec["table"]:
        table[tuple(entry["if"])] = entry["then"]
    return RuleBase(
        input_labels=tuple(tuple(labels) for labels in spec["input_labels"]),
        output_labels=tuple(spec["output_labels"]),
        rules=table,
    )


def _parse_node(spec: dict) -> PerceptionNode:
    agg = spec.get("aggregator")
    if agg not in AGGREGATORS:
        raise ConfigError(f"node {spec.get('id')!r}: unknown aggregator {agg!r}")
    return PerceptionNode(
        id=spec["id"],
        level=int(spec["level"]),
        name=spec["name"],
        aggregator=agg,
        inputs=tuple(spec.get("inputs", ())),
        measure=spec.get("measure"),
        partition=parse_partition(spec["partition"]) if "partition" in spec else None,
        categorical_labels=tuple(spec["labels"]) if "labels" in spec else None,
        rules=_parse_rules(spec["rules"]) if "rules" in spec else None,
        weights=WeightVector(tuple(float(w) for w in spec["weights"])) if "weights" in spec else None,
        output_labels=tuple(spec["output_labels"]) if "output_labels" in spec else None,
        behaviours=dict(spec["behaviours"]) if "behaviours" in spec else None,
        relevance=tuple(float(r) for r in spec["relevance"]) if "relevance" in spec else None,
        template=spec.get("template"),
    )


def load_model(document: str) -> ModelGraph:
    """Parse a model-config document into a fully resolved graph.

    Raises ConfigError with position information on malformed documents,
    duplicate ids or unresolved references.
    """
    if not document.strip():
        raise ConfigError("empty model document")
    try:
        data = json.loads(document)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"model parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(data, dict):
        raise ConfigError("model document must be a JSON object")

    nodes: dict[str, PerceptionNode] = {}
    for spec in data.get("nodes", ()):
        node = _parse_node(spec)
        if node.id in nodes:
            raise ConfigError(f"duplicate node id {node.id!r}")
        nodes[node.id] = node
    for node in nodes.values():
        for ref in node.inputs:
            if ref not in nodes:
                raise ConfigError(f"node {node.id!r} references unknown node {ref!r}")

    schema = MeasureSchema.from_config(data["measures"])
    return ModelGraph(
        name=data.get("name", "unnamed"),
        schema_version=int(data.get("schema_version", 1)),
        nodes=nodes,
        schema=schema,
        score_partition=parse_partition(data["score_partition"]),
        capacity=Capacity.from_config(data["capacity"]),
        profile_sets=ProfileSets.from_config(data["profile_sets"]),
        suspicion_sets=SuspicionSets.from_config(data["suspicion_sets"]),
        report_tau=float(data.get("report", {}).get("tau", 0.2)),
        dependency_template=data.get("report", {}).get(
            "dependency_template", "{name} depends on {children}."),
    )


def load_model_file(path) -> ModelGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return load_model(fh.read())


def default_model() -> ModelGraph:
    text = resources.files("glmp.data").joinpath(f"{DEFAULT_MODEL_NAME}.json").read_text("utf-8")
    return load_model(text)


# --- validation ------------------------------------------------------------

def validate_model(g: ModelGraph) -> list[str]:
    """Structural diagnostics; an empty list means the model is valid."""
    issues: list[str] = []

    # cycle / level discipline
    for node in g.nodes.values():
        for ref in node.inputs:
            child = g.nodes.get(ref)
            if child is not None and child.level >= node.level:
                issues.append(
                    f"{node.id}: input {ref} is at level {child.level}, "
                    f"not strictly below {node.level}")
    if _has_cycle(g):
        issues.append("graph contains a cycle")

    # arity and payloads
    level5 = [n for n in g.nodes.values() if n.level == 5]
    if len(level5) != 1:
        issues.append(f"expected exactly one level-5 node, found {len(level5)}")
    for node in g.nodes.values():
        if node.level == 1:
            if node.measure is None:
                issues.append(f"{node.id}: level-1 node without a measure")
            elif node.measure not in g.schema.ids:
                issues.append(f"{node.id}: unknown measure {node.measure!r}")
            if node.aggregator == "partition-fuzzify" and node.partition is None:
                issues.append(f"{node.id}: missing partition")
            if node.aggregator == "categorical" and not node.categorical_labels:
                issues.append(f"{node.id}: missing categorical labels")
        elif 2 <= node.level <= 4:
            if len(node.inputs) < 2:
                issues.append(f"{node.id}: level-{node.level} node needs at least 2 inputs")
            if node.aggregator == "rule-base":
                if node.rules is None:
                    issues.append(f"{node.id}: missing rule base")
                else:
                    if len(node.inputs) > 3:
                        issues.append(f"{node.id}: rule-base aggregator with more than 3 inputs")
                    for combo in node.rules.missing_antecedents():
                        issues.append(f"{node.id}: rule base missing antecedent {combo}")
            elif node.aggregator == "weighted-average":
                if node.weights is None or len(node.weights.weights) != len(node.inputs):
                    issues.append(f"{node.id}: weight vector does not match inputs")
        elif node.level == 5:
            if node.aggregator != "choquet-pipeline":
                issues.append(f"{node.id}: level-5 node must use the choquet pipeline")
            if len(node.inputs) != 5:
                issues.append(f"{node.id}: level-5 node needs exactly the 5 behaviour inputs")
            for ref in node.inputs:
                child = g.nodes.get(ref)
                if child is not None and child.level != 4:
                    issues.append(f"{node.id}: input {ref} is not a level-4 node")

    # reachability from the root
    if len(level5) == 1 and not _has_cycle(g):
        reachable = set()
        stack = [level5[0].id]
        while stack:
            nid = stack.pop()
            if nid in reachable:
                continue
            reachable.add(nid)
            stack.extend(g.nodes[nid].inputs)
        for nid in g.nodes:
            if nid not in reachable:
                issues.append(f"{nid}: not reachable from the level-5 root")

    # partitions
    for node in g.nodes.values():
        if node.partition is not None and node.partition.normalized:
            diag = validate_partition(node.partition)
            for issue in diag.issues:
                issues.append(f"{node.id}: {issue}")
    diag = validate_partition(g.score_partition)
    issues.extend(f"score partition: {i}" for i in diag.issues)
    diag = validate_partition(g.suspicion_sets.partition)
    issues.extend(f"suspicion sets: {i}" for i in diag.issues)

    issues.extend(f"capacity: {i}" for i in validate_capacity(g.capacity).issues)
    return issues


def _has_cycle(g: ModelGraph) -> bool:
    WHITE, GREY, BLACK = 0, 1, 2
    state = {nid: WHITE for nid in g.nodes}

    def visit(nid: str) -> bool:
        state[nid] = GREY
        for ref in g.nodes[nid].inputs:
            if ref not in state:
                continue
            if state[ref] == GREY:
                return True
            if state[ref] == WHITE and visit(ref):
                return True
        state[nid] = BLACK
        return False

    return any(state[nid] == WHITE and visit(nid) for nid in g.nodes)


# --- evaluation ------------------------------------------------------------

def _neutral(labels: tuple[str, ...]) -> LabelWeights:
    return LabelWeights.one_hot(labels, labels[len(labels) // 2])


def _child_vocabulary(node: PerceptionNode, index: int, child: PerceptionNode) -> tuple[str, ...]:
    if node.rules is not None:
        return node.rules.input_labels[index]
    if child.output_labels is not None:
        return child.output_labels
    if child.partition is not None:
        return child.partition.labels
    if child.categorical_labels is not None:
        return child.categorical_labels
    raise ConfigError(f"cannot determine label vocabulary of {child.id}")


def evaluate(g: ModelGraph, m: MeasureSet, policy: str = "renormalize",
             warnings: Optional[list[str]] = None) -> TreeNode:
    """Topological evaluation of every perception node.

    policy "strict" fails on missing measures; "renormalize" substitutes a
    neutral value for rule inputs and drops weighted-average inputs,
    recording a warning either way.
    """
    if policy not in ("strict", "renormalize"):
        raise ConfigError(f"unknown policy {policy!r}")
    if warnings is None:
        warnings = []
    memo: dict[str, TreeNode] = {}
    for node in g.ordered_nodes():
        memo[node.id] = _evaluate_node(g, node, m, memo, policy, warnings)
    return memo[g.root.id]


def _evaluate_node(g: ModelGraph, node: PerceptionNode, m: MeasureSet,
                   memo: dict[str, TreeNode], policy: str,
                   warnings: list[str]) -> TreeNode:
    if node.level == 1:
        value = m.values.get(node.measure)
        if value is None:
            if policy == "strict":
                raise EvaluationError(f"missing measure {node.measure!r} required by {node.id}")
            warnings.append(f"{node.id}: measure {node.measure!r} missing, value substituted")
            return TreeNode(node.id, node.name, 1, weights=None, event=None)
        if node.aggregator == "categorical":
            lw = LabelWeights.one_hot(node.categorical_labels, value)
        else:
            lw = node.partition.fuzzify(float(value), warnings)
        return TreeNode(node.id, node.name, 1, weights=lw, event=value)

    children = [memo[ref] for ref in node.inputs]

    if node.aggregator == "rule-base":
        resolved = []
        for i, child in enumerate(children):
            if child.weights is None:
                vocab = _child_vocabulary(node, i, g.nodes[child.id])
                resolved.append(_neutral(vocab))
                warnings.append(f"{node.id}: neutral substitute for missing input {child.id}")
            else:
                resolved.append(child.weights)
        lw = node.rules.infer(resolved)
    elif node.aggregator == "weighted-average":
        present = [(child.weights, wt) for child, wt in zip(children, node.weights.weights)
                   if child.weights is not None]
        if not present:
            lw = _neutral(node.output_labels)
            warnings.append(f"{node.id}: all inputs missing, neutral value used")
        else:
            if len(present) < len(children):
                warnings.append(f"{node.id}: missing inputs dropped, weights renormalized")
            lws, wts = zip(*present)
            lw = weighted_average(list(lws), WeightVector(wts), node.output_labels)
    elif node.aggregator == "choquet-pipeline":
        return _evaluate_root(g, node, children)
    else:
        raise ConfigError(f"{node.id}: aggregator {node.aggregator!r} not valid above level 1")

    crisp = None
    if node.level == 4:
        crisp = defuzzify_centroid(g.score_partition, lw)
    return TreeNode(node.id, node.name, node.level, weights=lw, crisp=crisp, children=children)


def _evaluate_root(g: ModelGraph, node: PerceptionNode, children: list[TreeNode]) -> TreeNode:
    memberships = {}
    for child in children:
        behaviour = node.behaviours[child.id]
        memberships[behaviour] = g.profile_sets.membership(behaviour, child.crisp)
    value = choquet_integral(memberships, g.capacity)
    result = g.suspicion_sets.label(value)
    return TreeNode(node.id, node.name, 5, weights=result.memberships,
                    crisp=value, children=children)


def verify_tree(g: ModelGraph, tree: TreeNode) -> list[str]:
    """Re-apply each node's aggregator to its children's stored values and
    report any node whose stored value does not reproduce exactly."""
    mismatches: list[str] = []
    for tn in tree.walk():
        node = g.nodes[tn.id]
        if node.level == 1 or tn.weights is None:
            continue
        if node.aggregator == "rule-base":
            resolved = []
            for i, child in enumerate(tn.children):
                if child.weights is None:
                    resolved.append(_neutral(_child_vocabulary(node, i, g.nodes[child.id])))
                else:
                    resolved.append(child.weights)
            redone = node.rules.infer(resolved)
        elif node.aggregator == "weighted-average":
            present = [(c.weights, wt) for c, wt in zip(tn.children, node.weights.weights)
                       if c.weights is not None]
            if not present:
                redone = _neutral(node.output_labels)
            else:
                lws, wts = zip(*present)
                redone = weighted_average(list(lws), WeightVector(wts), node.output_labels)
        elif node.aggregator == "choquet-pipeline":
            redone = _evaluate_root(g, node, tn.children).weights
        else:
            continue
        if redone != tn.weights:
            mismatches.append(f"{tn.id}: stored value does not match recomputation")
    return mismatches


def assess(g: ModelGraph, m: MeasureSet, policy: str = "renormalize") -> Assessment:
    """Full pipeline: evaluate, defuzzify behaviours, profile memberships,
    Choquet aggregation and suspicion labelling."""
    warnings = list(m.warnings)
    tree = evaluate(g, m, policy=policy, warnings=warnings)
    root = g.root
    scores = {}
    memberships = {}
    for child in tree.children:
        behaviour = root.behaviours[child.id]
        scores[behaviour] = child.crisp
        memberships[behaviour] = g.profile_sets.membership(behaviour, child.crisp)
    suspicion = g.suspicion_sets.label(tree.crisp)
    return Assessment(
        video_id=m.video_id,
        tree=tree,
        behaviour_scores=scores,
        profile_memberships=memberships,
        suspicion=suspicion,
        warnings=tuple(warnings),
    )

#!/usr/bin/env python3
"""Regenerates the shipped default model config (political-disinfo-v1).

Run from the repository root:

    python scripts/build_default_model.py

Rule bases are generated from each input's semantic label order (ascending
intensity). The generic consequent is the rounded mean of the antecedent
indices; exact .5 ties go to the first input's label, except for the
"optimistic" attributes (confidence, conviction) where ties round up. The
published rule fragments for speech fluency, energy and extroversion are all
reproduced by the tie-toward-first scheme.
"""

from __future__ import annotations

import itertools
import json
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from glmp.calibration import calibrate  # noqa: E402

LMH = ["low", "medium", "high"]
BNG = ["bad", "normal", "good"]

DEFAULT_PARTITION = {
    "labels": LMH,
    "functions": [
        {"shape": "trapezoidal", "params": [0, 0, 2.5, 5]},
        {"shape": "triangular", "params": [2.5, 5, 7.5]},
        {"shape": "trapezoidal", "params": [5, 7.5, 10, 10]},
    ],
    "universe": [0, 10],
}


def scaled_partition(labels):
    p = json.loads(json.dumps(DEFAULT_PARTITION))
    p["labels"] = list(labels)
    return p


def rules_for(semantic_inputs, output_labels, tie="first"):
    """semantic_inputs: per input, labels in ascending semantic order.
    The stored rule base keys use these same label names."""
    n_out = len(output_labels)
    table = []
    for combo in itertools.product(*(range(len(labels)) for labels in semantic_inputs)):
        mean = sum(combo) / len(combo)
        frac = mean - int(mean)
        if abs(frac - 0.5) < 1e-9:
            idx = combo[0] if tie == "first" else int(mean) + 1
        else:
            idx = round(mean)
        idx = min(idx, n_out - 1)
        table.append({
            "if": [labels[i] for labels, i in zip(semantic_inputs, combo)],
            "then": output_labels[idx],
        })
    return {
        "input_labels": [list(labels) for labels in semantic_inputs],
        "output_labels": list(output_labels),
        "table": table,
    }


MEASURES = [
    {"id": "reaction_time", "modality": "audio", "kind": "numeric", "unit": "s", "range": [0, 30]},
    {"id": "mood", "modality": "audio", "kind": "categorical",
     "labels": ["reading", "normal", "passionate"]},
    {"id": "pauses", "modality": "audio", "kind": "numeric", "unit": "count", "range": [0, 100]},
    {"id": "voice_uniformity", "modality": "audio", "kind": "numeric", "unit": "score", "range": [0, 10]},
    {"id": "speech_speed", "modality": "audio", "kind": "numeric", "unit": "syll/s", "range": [0, 20]},
    {"id": "concreteness", "modality": "text", "kind": "numeric", "unit": "score", "range": [0, 10]},
    {"id": "organisation", "modality": "text", "kind": "numeric", "unit": "score", "range": [0, 10]},
    {"id": "crutches", "modality": "text", "kind": "numeric", "unit": "per 100 words", "range": [0, 50]},
    {"id": "originality", "modality": "text", "kind": "numeric", "unit": "score", "range": [0, 10]},
    {"id": "redundancy", "modality": "text", "kind": "numeric", "unit": "score", "range": [0, 10]},
    {"id": "pos_profile", "modality": "text", "kind": "numeric", "unit": "score", "range": [0, 10]},
    {"id": "polarity", "modality": "text", "kind": "categorical",
     "labels": ["negative", "neutral", "positive"]},
    {"id": "congruence", "modality": "text", "kind": "numeric", "unit": "score", "range": [0, 10]},
    {"id": "constancy_of_ideas", "modality": "text", "kind": "numeric", "unit": "score", "range": [0, 10]},
    {"id": "topic_relevance", "modality": "topic", "kind": "numeric", "unit": "score", "range": [0, 10]},
    {"id": "topic_depth", "modality": "topic", "kind": "numeric", "unit": "score", "range": [0, 10]},
    {"id": "topic_coherence", "modality": "topic", "kind": "numeric", "unit": "score", "range": [0, 10]},
    {"id": "gaze", "modality": "video", "kind": "numeric", "unit": "score", "range": [0, 10]},
    {"id": "blink", "modality": "video", "kind": "numeric", "unit": "score", "range": [0, 10]},
    {"id": "mouth_movement", "modality": "video", "kind": "numeric", "unit": "score", "range": [0, 10]},
    {"id": "head_motion", "modality": "video", "kind": "numeric", "unit": "score", "range": [0, 10]},
    {"id": "gesture_profile", "modality": "video", "kind": "numeric", "unit": "score", "range": [0, 10]},
]


def level1_nodes():
    nodes = []

    def add(nid, name, measure, partition=None, labels=None):
        node = {"id": nid, "level": 1, "name": name, "measure": measure}
        if labels is not None:
            node["aggregator"] = "categorical"
            node["labels"] = labels
        else:
            node["aggregator"] = "partition-fuzzify"
            node["partition"] = partition
        nodes.append(node)

    add("1PM_1", "reaction time", "reaction_time", {
        "labels": ["fast", "medium", "slow"],
        "functions": [
            {"shape": "trapezoidal", "params": [0, 0, 1, 3]},
            {"shape": "triangular", "params": [1, 3, 6]},
            {"shape": "trapezoidal", "params": [3, 6, None, None]},
        ],
        "universe": [0, 30],
    })
    add("1PM_2", "mood", "mood", labels=["reading", "normal", "passionate"])
    # published fluency partition, labelled by support order over pauses
    add("1PM_3", "fluency", "pauses", {
        "labels": ["high", "medium", "low"],
        "functions": [
            {"shape": "trapezoidal", "params": [0, 0, 10, 20]},
            {"shape": "triangular", "params": [10, 20, 30]},
            {"shape": "trapezoidal", "params": [20, 30, None, None]},
        ],
        "universe": [0, 100],
    })
    add("1PM_4", "voice uniformity", "voice_uniformity", scaled_partition(LMH))
    # published speech speed partition (syllables per second)
    add("1PM_5", "speech speed", "speech_speed", {
        "labels": LMH,
        "functions": [
            {"shape": "trapezoidal", "params": [0, 0, 4, 5]},
            {"shape": "triangular", "params": [4, 5, 6]},
            {"shape": "trapezoidal", "params": [5, 6, None, None]},
        ],
        "universe": [0, 20],
    })
    add("1PM_6", "concreteness", "concreteness", scaled_partition(LMH))
    add("1PM_7", "organisation", "organisation", scaled_partition(LMH))
    add("1PM_8", "crutches", "crutches", {
        "labels": ["good", "normal", "bad"],
        "functions": [
            {"shape": "trapezoidal", "params": [0, 0, 2, 5]},
            {"shape": "triangular", "params": [2, 5, 10]},
            {"shape": "trapezoidal", "params": [5, 10, None, None]},
        ],
        "universe": [0, 50],
    })
    add("1PM_9", "originality", "originality", scaled_partition(BNG))
    add("1PM_10", "redundancy", "redundancy", scaled_partition(LMH))
    add("1PM_11", "pos profile", "pos_profile", scaled_partition(BNG))
    add("1PM_12", "polarity", "polarity", labels=["negative", "neutral", "positive"])
    add("1PM_13", "congruence", "congruence", scaled_partition(LMH))
    add("1PM_14", "constancy in expressing ideas", "constancy_of_ideas", scaled_partition(LMH))
    add("1PM_15", "topic relevance", "topic_relevance", scaled_partition(BNG))
    add("1PM_16", "topic depth", "topic_depth", scaled_partition(BNG))
    add("1PM_17", "topic coherence", "topic_coherence", scaled_partition(BNG))
    add("1PM_18", "gaze", "gaze", scaled_partition(BNG))
    add("1PM_19", "blink", "blink", scaled_partition(BNG))
    add("1PM_20", "mouth movement", "mouth_movement", scaled_partition(BNG))
    # low head motion reads as high serenity
    add("1PM_21", "serenity", "head_motion", {
        "labels": ["high", "medium", "low"],
        "functions": [
            {"shape": "trapezoidal", "params": [0, 0, 2.5, 5]},
            {"shape": "triangular", "params": [2.5, 5, 7.5]},
            {"shape": "trapezoidal", "params": [5, 7.5, 10, 10]},
        ],
        "universe": [0, 10],
    })
    add("1PM_22", "gestures", "gesture_profile", scaled_partition(BNG))
    return nodes


def upper_nodes():
    nodes = []

    def rule_node(nid, level, name, inputs, semantic_inputs, output=LMH, tie="first"):
        nodes.append({
            "id": nid, "level": level, "name": name, "inputs": inputs,
            "aggregator": "rule-base",
            "rules": rules_for(semantic_inputs, output, tie=tie),
        })

    def wa_node(nid, level, name, inputs, weights, output):
        nodes.append({
            "id": nid, "level": level, "name": name, "inputs": inputs,
            "aggregator": "weighted-average",
            "weights": weights, "output_labels": output,
        })

    reversed_lmh = ["high", "medium", "low"]   # ascending semantic = reversed stored order
    mood = ["reading", "normal", "passionate"]
    polarity = ["negative", "neutral", "positive"]

    # level 2 attributes
    wa_node("2PM_23", 2, "vocabulary", ["1PM_8", "1PM_9", "1PM_11"], [0.3, 0.4, 0.3], BNG)
    wa_node("2PM_24", 2, "ideas", ["1PM_15", "1PM_16", "1PM_17"], [0.4, 0.3, 0.3], BNG)
    wa_node("2PM_25", 2, "non-verbal communication",
            ["1PM_18", "1PM_19", "1PM_20", "1PM_22"], [0.3, 0.2, 0.2, 0.3], BNG)
    rule_node("2PM_26", 2, "speech fluency", ["1PM_3", "1PM_5"], [LMH, LMH])
    rule_node("2PM_27", 2, "expressiveness", ["1PM_2", "1PM_21"], [mood, LMH])
    rule_node("2PM_28", 2, "confidence", ["1PM_4", "1PM_14"], [LMH, LMH], tie="up")
    rule_node("2PM_29", 2, "conviction", ["1PM_13", "1PM_6"], [LMH, LMH], tie="up")
    rule_node("2PM_30", 2, "conciseness", ["1PM_10", "1PM_7"], [reversed_lmh, LMH])
    rule_node("2PM_31", 2, "interaction tone", ["1PM_1", "1PM_12", "1PM_4"],
              [["slow", "medium", "fast"], polarity, LMH], output=BNG)
    rule_node("2PM_32", 2, "emotional stability", ["1PM_21", "1PM_4"], [LMH, LMH])

    # level 3 dimensions
    rule_node("3PM_33", 3, "text quality", ["2PM_23", "2PM_24"], [BNG, BNG])
    rule_node("3PM_34", 3, "clarity", ["2PM_30", "2PM_24"], [LMH, BNG])
    rule_node("3PM_35", 3, "energy", ["2PM_26", "2PM_27"], [LMH, LMH])
    rule_node("3PM_36", 3, "assertiveness", ["2PM_28", "2PM_29"], [LMH, LMH])
    rule_node("3PM_37", 3, "empathy", ["1PM_12", "2PM_27"], [polarity, LMH])

    # level 4 behaviours
    rule_node("4PM_38", 4, "openness", ["3PM_33", "2PM_25"], [LMH, BNG])
    rule_node("4PM_39", 4, "conscientiousness", ["3PM_34", "2PM_30"], [LMH, LMH])
    rule_node("4PM_40", 4, "extroversion", ["3PM_35", "3PM_36"], [LMH, LMH])
    rule_node("4PM_41", 4, "agreeableness", ["3PM_37", "2PM_31"], [LMH, BNG])
    rule_node("4PM_42", 4, "neuroticism", ["2PM_32", "2PM_25"],
              [reversed_lmh, ["good", "normal", "bad"]])

    # level 5 suspicion
    nodes.append({
        "id": "5PM_43", "level": 5, "name": "suspicion of disinformation",
        "inputs": ["4PM_38", "4PM_39", "4PM_40", "4PM_41", "4PM_42"],
        "aggregator": "choquet-pipeline",
        "behaviours": {
            "4PM_38": "openness",
            "4PM_39": "conscientiousness",
            "4PM_40": "extroversion",
            "4PM_41": "agreeableness",
            "4PM_42": "neuroticism",
        },
        "template": "The suspicion of disinformation is {label}.",
    })
    return nodes


PROFILE_SETS = {
    # fitted to the published point constraints; increasing for openness,
    # extroversion and neuroticism, decreasing for the other two
    "openness": {"shape": "trapezoidal", "params": [1, 6, None, None]},
    "conscientiousness": {"shape": "trapezoidal", "params": [0, 0, 2.0, 7.9]},
    "extroversion": {"shape": "trapezoidal", "params": [2, 7, None, None]},
    "agreeableness": {"shape": "trapezoidal", "params": [0, 0, 0.5, 2.0]},
    "neuroticism": {"shape": "trapezoidal", "params": [1.8, 7.4, None, None]},
}

SUSPICION_SETS = {
    "partition": {
        "labels": ["Low", "Medium", "High"],
        "functions": [
            {"shape": "trapezoidal", "params": [0, 0, 0.25, 0.5]},
            {"shape": "triangular", "params": [0.25, 0.5, 0.75]},
            {"shape": "trapezoidal", "params": [0.5, 0.75, 1, 1]},
        ],
        "universe": [0, 1],
    },
    "tau": 0.2,
    "combined_labels": True,
}


def build():
    cal = calibrate()
    return {
        "schema_version": 1,
        "name": "political-disinfo-v1",
        "calibration": {"p": cal.p, "beta": cal.beta, "reference_value": round(cal.value, 6)},
        "measures": MEASURES,
        "nodes": level1_nodes() + upper_nodes(),
        "score_partition": DEFAULT_PARTITION,
        "capacity": cal.capacity.to_config(),
        "profile_sets": PROFILE_SETS,
        "suspicion_sets": SUSPICION_SETS,
        "report": {"tau": 0.2, "dependency_template": "{name} depends on {children}."},
    }


def main():
    out = os.path.join(os.path.dirname(__file__), "..", "src", "glmp", "data",
                       "political-disinfo-v1.json")
    config = build()
    with open(out, "w", encoding="utf-8") as fh:
        json.dump(config, fh, indent=1)
        fh.write("\n")
    print(f"wrote {os.path.normpath(out)}: {len(config['nodes'])} nodes, "
          f"capacity p={config['calibration']['p']} beta={config['calibration']['beta']}")


if __name__ == "__main__":
    main()

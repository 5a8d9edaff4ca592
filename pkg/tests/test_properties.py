import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from glmp.choquet import BEHAVIOURS, Capacity, choquet_integral
from glmp.fuzzy import LabelWeights, WeightVector, defuzzify_centroid, weighted_average

unit = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)
criteria = st.fixed_dictionaries({b: unit for b in BEHAVIOURS})


def shipped_capacity():
    from glmp.model import default_model

    return default_model().capacity


CAPACITY = shipped_capacity()


def shipped_score_partition():
    from glmp.model import default_model

    return default_model().score_partition


SCORE_PARTITION = shipped_score_partition()


def shipped_partitions():
    from glmp.model import default_model

    g = default_model()
    parts = [(n.id, n.partition) for n in g.nodes.values() if n.partition is not None]
    parts.append(("score", g.score_partition))
    parts.append(("suspicion", g.suspicion_sets.partition))
    return parts


def shipped_rule_bases():
    from glmp.model import default_model

    return [(n.id, n.rules) for n in default_model().nodes.values() if n.rules is not None]


class TestRuspini:
    @pytest.mark.parametrize("nid,partition", shipped_partitions())
    def test_memberships_sum_to_one_everywhere(self, nid, partition):
        lo, hi = partition.universe
        rng = random.Random(hash(nid) & 0xFFFF)
        xs = [lo + (hi - lo) * i / 500 for i in range(501)]
        xs += [rng.uniform(lo, hi) for _ in range(200)]
        for x in xs:
            total = sum(fn(x) for fn in partition.functions)
            assert total == pytest.approx(1.0, abs=1e-9), (nid, x)


class TestChoquetProperties:
    @settings(max_examples=2000, deadline=None)
    @given(criteria)
    def test_bounded_by_min_and_max(self, x):
        value = choquet_integral(x, CAPACITY)
        assert min(x.values()) - 1e-12 <= value <= max(x.values()) + 1e-12

    @settings(max_examples=2000, deadline=None)
    @given(criteria, st.sampled_from(BEHAVIOURS),
           st.floats(min_value=0.0, max_value=1.0, allow_nan=False))
    def test_monotone_in_each_criterion(self, x, name, bump):
        base = choquet_integral(x, CAPACITY)
        raised = dict(x)
        raised[name] = min(1.0, x[name] + bump)
        assert choquet_integral(raised, CAPACITY) >= base - 1e-12

    @settings(max_examples=500, deadline=None)
    @given(unit)
    def test_idempotent_on_constant_input(self, c):
        x = {b: c for b in BEHAVIOURS}
        assert choquet_integral(x, CAPACITY) == pytest.approx(c, abs=1e-12)

    @settings(max_examples=1000, deadline=None)
    @given(criteria,
           st.fixed_dictionaries({b: st.floats(min_value=0.01, max_value=1.0) for b in BEHAVIOURS}))
    def test_additive_capacity_is_weighted_mean(self, x, weights):
        cap = Capacity.additive(weights)
        total = sum(weights.values())
        expected = sum(weights[b] * x[b] for b in BEHAVIOURS) / total
        assert choquet_integral(x, cap) == pytest.approx(expected, abs=1e-12)

    def test_tied_inputs_are_deterministic(self):
        x = {b: 0.5 for b in BEHAVIOURS}
        values = {choquet_integral(dict(x), CAPACITY) for _ in range(50)}
        assert len(values) == 1


class TestRuleBaseProperties:
    @pytest.mark.parametrize("nid,rules", shipped_rule_bases())
    def test_one_hot_inputs_reproduce_the_table(self, nid, rules):
        for combo, out in rules.rules.items():
            inputs = [LabelWeights.one_hot(labels, lab)
                      for labels, lab in zip(rules.input_labels, combo)]
            result = rules.infer(inputs)
            assert result.argmax_label == out, (nid, combo)
            assert result.weight(out) == 1.0

    @pytest.mark.parametrize("nid,rules", shipped_rule_bases())
    def test_outputs_always_normalized(self, nid, rules):
        rng = random.Random(42)
        for _ in range(30):
            inputs = []
            for labels in rules.input_labels:
                raw = [rng.random() for _ in labels]
                total = sum(raw)
                inputs.append(LabelWeights(labels, tuple(w / total for w in raw)))
            out = rules.infer(inputs)
            assert sum(out.weights) == pytest.approx(1.0, abs=1e-9)


LMH = ("low", "medium", "high")
simplex3 = st.tuples(unit, unit, unit).filter(lambda t: sum(t) > 1e-6).map(
    lambda t: tuple(v / sum(t) for v in t))


class TestWeightedAverageProperties:
    @settings(max_examples=500, deadline=None)
    @given(simplex3, st.integers(min_value=2, max_value=5))
    def test_idempotent_on_identical_inputs(self, weights, n):
        lw = LabelWeights(LMH, weights)
        out = weighted_average([lw] * n, WeightVector(tuple(1.0 / n for _ in range(n))))
        assert out.weights == pytest.approx(lw.weights, abs=1e-12)

    @settings(max_examples=300, deadline=None)
    @given(st.lists(simplex3, min_size=2, max_size=4),
           st.randoms(use_true_random=False))
    def test_permutation_covariant(self, rows, rng):
        inputs = [LabelWeights(LMH, r) for r in rows]
        weights = [rng.random() + 0.01 for _ in rows]
        base = weighted_average(inputs, WeightVector(tuple(weights)))
        order = list(range(len(rows)))
        rng.shuffle(order)
        permuted = weighted_average([inputs[i] for i in order],
                                    WeightVector(tuple(weights[i] for i in order)))
        assert permuted.weights == pytest.approx(base.weights, abs=1e-12)


class TestDefuzzifyProperties:
    @settings(max_examples=500, deadline=None)
    @given(simplex3, st.floats(min_value=0.0, max_value=1.0))
    def test_moving_mass_upward_never_lowers_the_score(self, weights, frac):
        partition = SCORE_PARTITION
        lo, mid, hi = weights
        shifted = (lo * (1 - frac), mid, hi + lo * frac)
        base = defuzzify_centroid(partition, LabelWeights(LMH, weights))
        moved = defuzzify_centroid(partition, LabelWeights(LMH, shifted))
        assert moved >= base - 1e-12

    @settings(max_examples=500, deadline=None)
    @given(simplex3)
    def test_score_stays_inside_the_universe(self, weights):
        partition = SCORE_PARTITION
        score = defuzzify_centroid(partition, LabelWeights(LMH, weights))
        lo, hi = partition.universe
        assert lo <= score <= hi

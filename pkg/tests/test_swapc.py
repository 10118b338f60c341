import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qutil.swapc import (
    DeviceSpec,
    RunOutcome,
    Verdict,
    devicespec_from_json,
    devicespec_to_json,
    score1,
    score2,
    similarity_gate,
    utility_verdict,
)

positive = st.floats(min_value=1e-3, max_value=1e6)


def device(name="dev", power=50.0, volume=2.0, weight=10.0, cost=1000.0) -> DeviceSpec:
    return DeviceSpec(
        name=name,
        power_watts=power,
        volume_liters=volume,
        weight_kg=weight,
        cost_currency_units=cost,
    )


class TestScores:
    def test_score1_worked_example(self):
        assert score1(1000, 10, 50) == 2.0

    def test_score1_identity_denominators(self):
        assert score1(123.0, 1, 1) == 123.0

    def test_score2_worked_example(self):
        assert score2(1000, 2, 10, 50) == 1.0

    def test_score2_reduces_to_score1_at_unit_volume(self):
        assert score2(77.0, 1, 3, 4) == score1(77.0, 3, 4)

    def test_rejects_non_positive_inputs(self):
        with pytest.raises(ValueError):
            score1(0, 1, 1)
        with pytest.raises(ValueError):
            score2(1, 1, -2, 1)

    @settings(max_examples=200, deadline=None)
    @given(positive, positive, positive)
    def test_score1_homogeneity(self, p, r, w):
        assert score1(2 * p, r, w) == pytest.approx(2 * score1(p, r, w))
        assert score1(p, r, 2 * w) == pytest.approx(score1(p, r, w) / 2)
        assert score1(p, 2 * r, w) == pytest.approx(score1(p, r, w) / 2)

    @settings(max_examples=200, deadline=None)
    @given(positive, positive, positive, positive, st.floats(min_value=0.5, max_value=4.0))
    def test_score2_denominator_scaling(self, p, v, r, w, k):
        assert score2(p, k * v, k * r, k * w) == pytest.approx(
            score2(p, v, r, w) / k**3
        )


class TestSimilarityGate:
    def test_within_factor_passes(self):
        assert similarity_gate(device(volume=1.0), device(volume=1.9))

    def test_beyond_factor_fails(self):
        assert not similarity_gate(device(volume=1.0), device(volume=2.5))

    def test_symmetric(self):
        a, b = device(weight=3.0), device(weight=5.5)
        assert similarity_gate(a, b) == similarity_gate(b, a)

    def test_zero_cost_only_similar_to_zero_cost(self):
        free = device(cost=0.0)
        assert similarity_gate(free, device(cost=0.0))
        assert not similarity_gate(free, device(cost=0.001))

    def test_rejects_factor_below_one(self):
        with pytest.raises(ValueError):
            similarity_gate(device(), device(), factor=0.5)


class TestVerdicts:
    def test_energy_win(self):
        # 5 s at 50 W (250 J) beats 4 s at 100 W (400 J) on energy alone
        q = RunOutcome(100.0, 5.0, 1e-3, device("q", power=50.0))
        c = RunOutcome(100.0, 4.0, 1e-3, device("c", power=100.0))
        out = utility_verdict(q, c)
        assert out.verdict == Verdict.quantum_utility
        assert out.criteria == {
            "faster": False,
            "less_energy": True,
            "more_accurate": False,
        }

    def test_identical_outcomes_give_no_utility(self):
        q = RunOutcome(100.0, 5.0, 1e-3, device("q"))
        c = RunOutcome(100.0, 5.0, 1e-3, device("c"))
        assert utility_verdict(q, c).verdict == Verdict.no_utility

    def test_dissimilar_devices_not_comparable(self):
        q = RunOutcome(100.0, 1.0, 0.0, device("q", volume=1.0))
        c = RunOutcome(100.0, 50.0, 1.0, device("c", volume=10.0))
        out = utility_verdict(q, c)
        assert out.verdict == Verdict.not_comparable
        assert not out.comparable

    def test_metric_mismatch_rejected(self):
        q = RunOutcome(1.0, 1.0, 0.0, device("q"), metric="a")
        c = RunOutcome(1.0, 1.0, 0.0, device("c"), metric="b")
        with pytest.raises(ValueError):
            utility_verdict(q, c)

    def test_markdown_contains_verdict(self):
        q = RunOutcome(1.0, 1.0, 0.0, device("q"))
        c = RunOutcome(1.0, 2.0, 0.0, device("c"))
        md = utility_verdict(q, c).to_markdown()
        assert "quantum_utility" in md

    @settings(max_examples=200, deadline=None)
    @given(
        st.floats(min_value=0.1, max_value=100.0),
        st.floats(min_value=0.1, max_value=100.0),
        st.floats(min_value=0.0, max_value=1.0),
        st.floats(min_value=0.1, max_value=100.0),
        st.floats(min_value=0.1, max_value=100.0),
        st.floats(min_value=0.0, max_value=1.0),
    )
    def test_antisymmetric_criteria(self, rt_q, pw_q, err_q, rt_c, pw_c, err_c):
        q = RunOutcome(1.0, rt_q, err_q, device("q", power=pw_q))
        c = RunOutcome(1.0, rt_c, err_c, device("c", power=pw_c))
        fwd = utility_verdict(q, c).criteria
        rev = utility_verdict(c, q).criteria
        # strict wins flip; ties stay False on both sides
        for key, (lhs, rhs) in {
            "faster": (q.runtime_seconds, c.runtime_seconds),
            "less_energy": (q.energy_joules, c.energy_joules),
            "more_accurate": (q.accuracy_error, c.accuracy_error),
        }.items():
            if lhs == rhs:
                assert not fwd[key] and not rev[key]
            else:
                assert fwd[key] != rev[key]

    def test_verdict_invariant_under_common_spec_rescaling(self):
        q = RunOutcome(1.0, 2.0, 0.1, device("q", volume=1.0, weight=2.0, cost=10.0))
        c = RunOutcome(1.0, 3.0, 0.2, device("c", volume=1.5, weight=3.0, cost=15.0))
        scaled_q = RunOutcome(
            1.0, 2.0, 0.1, device("q", volume=5.0, weight=10.0, cost=50.0)
        )
        scaled_c = RunOutcome(
            1.0, 3.0, 0.2, device("c", volume=7.5, weight=15.0, cost=75.0)
        )
        assert (
            utility_verdict(q, c).verdict == utility_verdict(scaled_q, scaled_c).verdict
        )


class TestDeviceSpecJson:
    def test_roundtrip(self):
        spec = DeviceSpec(
            name="desk-unit",
            power_watts=120.0,
            volume_liters=40.0,
            weight_kg=18.0,
            cost_currency_units=50_000.0,
            qubit_count=6,
            native_gates=(("RX", "RZ"), ("CZ",)),
            topology="linear",
        )
        assert devicespec_from_json(devicespec_to_json(spec)) == spec

    def test_json_is_plain_object(self):
        d = json.loads(devicespec_to_json(device()))
        assert d["power_watts"] == 50.0

    def test_validation(self):
        with pytest.raises(ValueError):
            device(volume=-1.0)
        with pytest.raises(ValueError):
            device(cost=-5.0)
        with pytest.raises(ValueError):
            RunOutcome(0.0, 1.0, 0.0, device())

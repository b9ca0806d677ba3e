"""Unit tests for the angle schedule construction."""

import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fpsearch.complexpoly import QuasiChebParams, phi_angle
from fpsearch.schedule import (
    SearchParams,
    arccot,
    make_schedule,
    min_iterations,
    schedule_for,
)


class TestSearchParams:
    def test_valid(self):
        SearchParams(w=0.08, delta=0.3)

    @pytest.mark.parametrize("w,delta", [(0.0, 0.3), (1.0, 0.3), (0.5, 0.0), (0.5, 1.0), (1.5, 0.3)])
    def test_invalid(self, w, delta):
        with pytest.raises(ValueError):
            SearchParams(w=w, delta=delta)


class TestMinIterations:
    def test_reference_case(self):
        assert min_iterations(SearchParams(w=0.08, delta=0.3)) == 12

    def test_exact_integer(self):
        # ln(2 / (2/e)) = 1, so ceil(1 / (2 * 0.5)) = 1
        assert min_iterations(SearchParams(w=0.5, delta=2.0 / math.e)) == 1

    def test_small_w(self):
        assert min_iterations(SearchParams(w=0.01, delta=0.1)) == 150

    def test_floors_at_one(self):
        assert min_iterations(SearchParams(w=0.99, delta=0.99)) == 1


class TestArccot:
    def test_anchor_values(self):
        assert arccot(0.0) == pytest.approx(math.pi / 2.0, abs=1e-15)
        assert arccot(1.0) == pytest.approx(math.pi / 4.0, abs=1e-15)
        assert arccot(-1.0) == pytest.approx(3.0 * math.pi / 4.0, abs=1e-15)

    def test_strictly_decreasing(self):
        ys = np.linspace(-30.0, 30.0, 301)
        values = [arccot(float(y)) for y in ys]
        assert all(a > b for a, b in zip(values, values[1:]))
        assert all(0.0 < v < math.pi for v in values)

    @settings(max_examples=100, deadline=None)
    @given(st.floats(min_value=-1e6, max_value=1e6))
    def test_branch_identity(self, z):
        assert abs(math.pi - 2.0 * arccot(z) - 2.0 * math.atan(z)) <= 1e-14


class TestMakeSchedule:
    def test_analytic_single_iteration(self):
        # w tan(pi/3) = 1 and w tan(2 pi/3) = -1 at w = 1/sqrt(3)
        sched = make_schedule(1.0 / math.sqrt(3.0), 1)
        assert sched.alpha[0] == pytest.approx(math.pi / 2.0, abs=1e-12)
        assert sched.beta[0] == pytest.approx(-1.5 * math.pi, abs=1e-12)
        assert sched.L == 3
        assert len(sched.phi) == 2

    def test_reference_shapes_and_spot_value(self):
        sched = make_schedule(0.08, 12, delta=0.3)
        assert len(sched.alpha) == 12 and len(sched.beta) == 12 and len(sched.phi) == 24
        expected = 2.0 * arccot(0.08 * math.tan(math.pi / 25.0))
        assert sched.alpha[0] == pytest.approx(expected, abs=1e-14)

    def test_phi_alpha_beta_relation(self):
        for w, l in ((0.08, 12), (0.5, 3), (0.9, 1)):
            sched = make_schedule(w, l)
            for k in range(1, l + 1):
                assert sched.phi[2 * k - 2] == pytest.approx(math.pi - sched.alpha[k - 1], abs=1e-12)
                assert sched.phi[2 * k - 1] == pytest.approx(sched.beta[k - 1] + math.pi, abs=1e-12)

    def test_phi_matches_twisted_recursion_angles(self):
        for w, l in ((0.08, 12), (0.4, 5)):
            sched = make_schedule(w, l)
            params = QuasiChebParams(gamma=math.sqrt(1.0 - w * w), L=sched.L)
            for n in range(1, 2 * l + 1):
                assert sched.phi[n - 1] == pytest.approx(phi_angle(params, n), abs=1e-12)

    def test_phi_reflection_symmetry(self):
        sched = make_schedule(0.3, 7)
        L = sched.L
        for n in range(1, 2 * sched.l + 1):
            assert sched.phi[L - n - 1] == pytest.approx(-sched.phi[n - 1], abs=1e-12)

    @pytest.mark.parametrize("w,l", [(0.0, 3), (1.0, 3), (-0.1, 3), (0.5, 0), (0.5, -2)])
    def test_invalid_inputs(self, w, l):
        with pytest.raises(ValueError):
            make_schedule(w, l)

    def test_schedule_for_uses_minimum(self):
        sched = schedule_for(SearchParams(w=0.08, delta=0.3))
        assert sched.l == 12
        assert sched.delta == 0.3


class TestBounds:
    def test_query_count_bound(self):
        # L from the minimal schedule always covers arccosh(1/delta)/arccosh(1/gamma)
        for w in np.linspace(0.02, 0.98, 25):
            for delta in np.linspace(0.02, 0.98, 25):
                l = min_iterations(SearchParams(w=float(w), delta=float(delta)))
                gamma = math.sqrt(1.0 - w * w)
                needed = math.acosh(1.0 / delta) / math.acosh(1.0 / gamma)
                assert 2 * l + 1 >= needed - 1e-9

    def test_log_inequality(self):
        ws = np.linspace(0.0, 0.999, 1000)
        assert np.all(np.log((1.0 + ws) / (1.0 - ws)) >= 2.0 * ws)


class TestSerialization:
    def test_json_keys_with_delta(self):
        payload = make_schedule(0.08, 12, delta=0.3).to_dict()
        assert list(payload) == ["w", "delta", "l", "L", "alpha_radians", "beta_radians", "phi_radians"]
        text = json.dumps(payload)
        assert json.loads(text)["l"] == 12

    def test_json_without_delta(self):
        payload = make_schedule(0.5, 1).to_dict()
        assert "delta" not in payload
        assert payload["L"] == 3
        assert len(payload["phi_radians"]) == 2

    def test_round_trip_is_plain_floats(self):
        payload = make_schedule(0.2, 4, delta=0.1).to_dict()
        assert all(isinstance(v, float) for v in payload["alpha_radians"])

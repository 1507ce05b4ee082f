from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orlicz_kit.exceptions import (
    InvalidDescriptorError,
    InvalidValueError,
    YoungClassError,
)
from orlicz_kit.fuzz import gen_young
from orlicz_kit.types import YoungClass
from orlicz_kit.xreal import ExtReal
from orlicz_kit.young import (
    ArgScale,
    ExpPower,
    FiniteB,
    LinfIndicator,
    PiecewiseLinear,
    Power,
    PowerLog,
    Slope,
    Sum,
    barrier,
    check_p1_p2_p3,
    classify,
    convexity_audit,
    endpoints,
    envelope_y2,
    evaluate,
    inverse,
    inverse_alt,
    piecewise,
)


class TestPower:

    def test_evaluate(self, quadratic):
        assert quadratic.evaluate(3.0) == 9.0
        assert quadratic.evaluate(math.inf) == math.inf

    def test_inverse(self, quadratic):
        assert quadratic.inverse(4.0) == 2.0
        assert quadratic.inverse(0.0) == 0.0
        assert quadratic.inverse(math.inf) == math.inf

    def test_class_and_endpoints(self, quadratic):
        assert quadratic.classify() is YoungClass.Y1
        assert quadratic.endpoints() == (0.0, math.inf)

    def test_exponent_below_one_rejected(self):
        with pytest.raises(InvalidDescriptorError) as info:
            Power(0.5)
        assert info.value.field == "p"


class TestParametricFamilies:

    def test_power_log_is_power_below_e(self):
        phi = PowerLog(2, 1)
        assert phi.evaluate(2.0) == 4.0
        assert phi.inverse(4.0) == 2.0

    def test_power_log_picks_up_log_factor(self):
        phi = PowerLog(1, 1)
        t = math.e**2
        assert phi.evaluate(t) == pytest.approx(2.0 * t)

    def test_power_log_inverse_round_trip(self):
        phi = PowerLog(2, 3)
        assert phi.inverse(phi.evaluate(10.0)) == pytest.approx(
            10.0, rel=1e-9
        )

    def test_exp_power(self):
        phi = ExpPower(1)
        assert phi.evaluate(math.log(2.0)) == pytest.approx(1.0)
        assert phi.inverse(1.0) == pytest.approx(math.log(2.0))

    def test_exp_power_overflow_is_infinite(self):
        assert ExpPower(2).evaluate(1e3) == math.inf

    def test_linf_indicator(self, linf):
        assert linf.evaluate(1.0) == 0.0
        assert linf.evaluate(1.5) == math.inf
        assert linf.endpoints() == (1.0, 1.0)
        assert linf.classify() is YoungClass.Y3
        assert linf.inverse(5.0) == 1.0
        assert linf.inverse_alt(math.inf) == 1.0
        assert linf.inverse(math.inf) == math.inf


class TestCombinators:

    def test_sum(self):
        phi = Sum(Power(1), Power(2))
        assert phi.evaluate(2.0) == 6.0
        assert phi.endpoints() == (0.0, math.inf)
        assert phi.inverse(6.0) == pytest.approx(2.0, rel=1e-9)

    def test_arg_scale(self):
        phi = ArgScale(Power(2), 2.0)
        assert phi.evaluate(1.0) == 4.0
        assert phi.inverse(4.0) == 1.0

    def test_arg_scale_keeps_endpoints_exact(self, linf):
        phi = ArgScale(linf, 2.0)
        assert phi.endpoints() == (0.5, 0.5)
        assert phi.evaluate(0.5) == 0.0
        assert phi.evaluate(0.6) == math.inf

    def test_arg_scale_rejects_nonpositive_factor(self):
        with pytest.raises(InvalidDescriptorError) as info:
            ArgScale(Power(1), 0.0)
        assert info.value.field == "c"


class TestPiecewiseLinear:

    def test_slope_tail(self, pl_y1):
        assert pl_y1.evaluate(0.5) == 0.5
        assert pl_y1.evaluate(2.0) == 3.0
        assert pl_y1.inverse(3.0) == 2.0
        assert pl_y1.classify() is YoungClass.Y1

    def test_flat_start(self):
        phi = piecewise([(0, 0), (1, 0)], Slope(1))
        assert phi.a == 1.0
        assert phi.inverse(0.0) == 1.0
        assert phi.inverse(2.0) == 3.0

    def test_flat_start_inverse_never_overshoots(self):
        phi = piecewise(
            [(0, 0), (0.4381234567, 0), (1.1, 0.7), (2.3, 3.1)],
            Slope(7.3),
        )
        for u in np.geomspace(1e-12, 50.0, 2000).tolist():
            assert phi.evaluate(phi.inverse(u)) <= u

    def test_pole_tail(self, pl_y2):
        assert pl_y2.pole_strength == 1.0
        assert pl_y2.evaluate(1.5) == 2.0
        assert pl_y2.evaluate(2.0) == math.inf
        assert pl_y2.inverse(2.0) == 1.5
        assert pl_y2.classify() is YoungClass.Y2
        assert pl_y2.left_limit(2.0) == math.inf

    def test_pole_inverse_stays_below_b(self, pl_y2):
        assert pl_y2.inverse(1e300) < 2.0
        assert pl_y2.inverse_alt(math.inf) == 2.0

    def test_finite_tail(self, pl_y3):
        assert pl_y3.evaluate(1.5) == 2.0
        assert pl_y3.evaluate(2.0) == 3.0
        assert pl_y3.evaluate(2.5) == math.inf
        assert pl_y3.classify() is YoungClass.Y3
        assert pl_y3.left_limit(2.0) == 3.0

    def test_finite_tail_inverse_saturates_at_b(self, pl_y3):
        assert pl_y3.inverse(2.0) == 1.5
        assert pl_y3.inverse(3.0) == 2.0
        assert pl_y3.inverse(100.0) == 2.0
        assert pl_y3.inverse(math.inf) == math.inf
        assert pl_y3.inverse_alt(math.inf) == 2.0

    def test_jump_tail(self):
        phi = PiecewiseLinear(((0, 0), (1, 1)), FiniteB(1, 1))
        assert phi.endpoints() == (0.0, 1.0)
        assert phi.evaluate(1.0) == 1.0
        assert phi.evaluate(1.0 + 1e-9) == math.inf
        assert phi.inverse(5.0) == 1.0

    def test_first_breakpoint_must_be_origin(self):
        with pytest.raises(InvalidDescriptorError) as info:
            piecewise([(1, 0), (2, 1)], Slope(1))
        assert info.value.field == "breakpoints[0]"

    def test_decreasing_slope_rejected(self):
        with pytest.raises(InvalidDescriptorError) as info:
            piecewise([(0, 0), (1, 2), (2, 3)], Slope(5))
        assert info.value.field == "breakpoints[2]"

    def test_tail_slope_below_last_rejected(self):
        with pytest.raises(InvalidDescriptorError) as info:
            piecewise([(0, 0), (1, 2)], Slope(1))
        assert info.value.field == "tail.s"

    def test_b_before_last_breakpoint_rejected(self):
        with pytest.raises(InvalidDescriptorError) as info:
            piecewise([(0, 0), (2, 2)], FiniteB(1))
        assert info.value.field == "tail.b"

    def test_phi_b_below_last_value_rejected(self):
        with pytest.raises(InvalidDescriptorError) as info:
            piecewise([(0, 0), (1, 1)], FiniteB(2, 0.5))
        assert info.value.field == "tail.phi_b"


class TestModuleHelpers:

    def test_helpers_return_extended_reals(self, pl_y3):
        assert isinstance(evaluate(pl_y3, 1.0), ExtReal)
        assert evaluate(pl_y3, "inf") == math.inf
        assert inverse(pl_y3, 2.0) == 1.5
        assert inverse_alt(pl_y3, math.inf) == 2.0
        assert endpoints(pl_y3) == (0.0, 2.0)
        assert classify(pl_y3) is YoungClass.Y3


class TestEnvelope:

    def test_barrier(self):
        theta = barrier(2.0, 0.5)
        assert theta.evaluate(1.0) == 0.0
        assert theta.evaluate(1.5) == 1.0
        assert theta.classify() is YoungClass.Y2

    def test_envelope_is_y2_with_same_b(self, pl_y3):
        psi = envelope_y2(pl_y3, 0.9)
        assert psi.classify() is YoungClass.Y2
        assert psi.b == pl_y3.b

    @pytest.mark.parametrize("t", [0.5, 1.0, 1.5, 1.9, 2.0, 2.5])
    def test_envelope_sandwich(self, pl_y3, t):
        delta = 0.9
        psi = envelope_y2(pl_y3, delta)
        assert psi.evaluate(delta * t) <= pl_y3.evaluate(t)
        assert pl_y3.evaluate(t) <= psi.evaluate(t)

    def test_envelope_requires_y3(self, pl_y2):
        with pytest.raises(YoungClassError):
            envelope_y2(pl_y2, 0.9)

    @pytest.mark.parametrize("delta", [0.0, 1.0, 1.5])
    def test_envelope_rejects_bad_delta(self, pl_y3, delta):
        with pytest.raises(InvalidValueError):
            envelope_y2(pl_y3, delta)


class TestAudits:

    def test_inverse_laws_power(self, quadratic):
        report = check_p1_p2_p3(quadratic, [0.25, 1.0, 2.0, 9.0])
        assert report.passed
        assert report.check == "inverse-laws"

    @pytest.mark.parametrize(
        "fixture", ["pl_y1", "pl_y2", "pl_y3", "linf"]
    )
    def test_inverse_laws_fixtures(self, request, fixture):
        phi = request.getfixturevalue(fixture)
        report = check_p1_p2_p3(phi, [0.5, 1.5, 1.9, 2.0, 3.0])
        assert report.passed, report.details

    def test_inverse_laws_require_samples(self, quadratic):
        with pytest.raises(ValueError):
            check_p1_p2_p3(quadratic, [])

    def test_convexity_detects_concave_pieces(self):
        phi = piecewise(
            [(0, 0), (1, 2), (2, 3)], Slope(5), strict=False
        )
        report = convexity_audit(phi, [0.0, 1.0, 2.0])
        assert not report.passed
        assert report.reasoning


def _grid_for(phi: PiecewiseLinear) -> list[float]:
    t_k = phi.breakpoints[-1][0]
    top = phi.b if math.isfinite(phi.b) else 2.0 * t_k
    return np.linspace(0.0, top, 33).tolist() + [
        t for t, _ in phi.breakpoints
    ]


class TestGeneratedYoungProperties:

    @settings(max_examples=60, deadline=None)
    @given(st.integers(min_value=0, max_value=2**32))
    def test_generated_functions_are_convex(self, seed):
        phi = gen_young(np.random.default_rng(seed))
        assert convexity_audit(phi, _grid_for(phi)).passed

    @settings(max_examples=60, deadline=None)
    @given(st.integers(min_value=0, max_value=2**32))
    def test_generated_functions_obey_inverse_laws(self, seed):
        phi = gen_young(np.random.default_rng(seed))
        samples = [
            x for point in phi.breakpoints for x in point if x > 0.0
        ] or [1.0]
        report = check_p1_p2_p3(phi, samples)
        assert report.passed, report.details
        for x in samples:
            assert phi.evaluate(phi.inverse(x)) <= x

    @settings(max_examples=60, deadline=None)
    @given(st.integers(min_value=0, max_value=2**32))
    def test_class_matches_tail(self, seed):
        phi = gen_young(np.random.default_rng(seed))
        expected = (
            YoungClass.Y1
            if isinstance(phi.tail, Slope)
            else YoungClass.Y2
            if phi.tail.is_pole
            else YoungClass.Y3
        )
        assert phi.classify() is expected

    @settings(max_examples=60, deadline=None)
    @given(
        st.integers(min_value=0, max_value=2**32),
        st.lists(
            st.floats(min_value=1e-12, max_value=1e6),
            min_size=1,
            max_size=20,
        ),
    )
    def test_inverse_never_overshoots(self, seed, us):
        phi = gen_young(np.random.default_rng(seed))
        us = us + [y for _, y in phi.breakpoints if y > 0.0]
        for u in us:
            assert phi.evaluate(phi.inverse(u)) <= u

    @settings(max_examples=60, deadline=None)
    @given(
        st.integers(min_value=0, max_value=2**32),
        st.floats(min_value=0.0, max_value=1e6),
        st.floats(min_value=0.0, max_value=1e6),
    )
    def test_inverse_is_monotone(self, seed, u, v):
        phi = gen_young(np.random.default_rng(seed))
        lo, hi = sorted((u, v))
        assert phi.inverse(lo) <= phi.inverse(hi)


class TestInverseProperties:

    @settings(max_examples=60, deadline=None)
    @given(
        st.sampled_from(
            [Power(1), Power(2.5), PowerLog(2, 3), ExpPower(1.5)]
        ),
        st.floats(min_value=1e-12, max_value=1e12),
    )
    def test_closed_forms_never_overshoot(self, phi, u):
        assert phi.evaluate(phi.inverse(u)) <= u

    @settings(max_examples=60, deadline=None)
    @given(
        st.sampled_from([Power(1), Power(2), ExpPower(2), PowerLog(2, 1)]),
        st.floats(min_value=0.0, max_value=1e6),
        st.floats(min_value=0.0, max_value=1e6),
    )
    def test_families_are_monotone(self, phi, u, v):
        lo, hi = sorted((u, v))
        assert phi.inverse(lo) <= phi.inverse(hi)

    @settings(max_examples=60, deadline=None)
    @given(
        st.sampled_from([Power(2), ExpPower(1), LinfIndicator()]),
        st.floats(min_value=0.125, max_value=8.0),
        st.floats(min_value=1e-9, max_value=1e6),
    )
    def test_arg_scale_inverse_divides_by_factor(self, inner, c, u):
        phi = ArgScale(inner, c)
        assert phi.inverse(u) == pytest.approx(
            inner.inverse(u) / c, rel=1e-12
        )
        assert phi.evaluate(phi.inverse(u)) <= u

    @settings(max_examples=60, deadline=None)
    @given(
        st.integers(min_value=0, max_value=2**32),
        st.floats(min_value=0.05, max_value=0.95),
        st.floats(min_value=1e-9, max_value=1e6),
    )
    def test_envelope_inverse_is_bracketed(self, seed, delta, u):
        phi = gen_young(
            np.random.default_rng(seed), young_class=YoungClass.Y3
        )
        psi = envelope_y2(phi, delta)
        phi_inv = phi.inverse(u)
        psi_inv = psi.inverse(u)
        slack = 1e-9 * phi.b
        assert delta * phi_inv <= psi_inv + slack
        assert psi_inv <= phi_inv + slack

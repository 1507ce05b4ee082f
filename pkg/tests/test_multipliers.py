from __future__ import annotations

import math

import pytest

from orlicz_kit.exceptions import (
    InvalidValueError,
    UnboundedOnGridError,
    YoungClassError,
    ZeroFunctionError,
)
from orlicz_kit.measure import SimpleFunction
from orlicz_kit.multipliers import (
    Direction,
    Triple,
    asymptotics_table,
    classical_identity_audit,
    converse_witness,
    estimate_constants,
    example_asymptotics_audit,
    holder_levels,
    holder_verify,
    lux_holder_verify,
    pwm_bruteforce,
    pwm_search,
    ratio_table,
    sandwich_audit,
    surrogate_for,
    validate_constant,
    witness,
    witness_function,
    witness_y3,
)
from orlicz_kit.types import NormKind, UGrid
from orlicz_kit.young import Power, PowerLog


@pytest.fixture
def classical():
    """Exponents with 1/p2 = 1/p1 + 1/p3."""
    return Power(2), Power(1), Power(2)


class TestTripleConstants:

    def test_classical_triple_has_unit_constants(
        self, classical, small_grid
    ):
        constants = estimate_constants(*classical, grid=small_grid)
        assert constants.c_upper == pytest.approx(1.0, rel=1e-12)
        assert constants.c_lower == pytest.approx(1.0, rel=1e-12)
        assert constants.upper_bounded
        assert constants.lower_bounded

    def test_sup_norm_factor_is_exact(self, linear, linf, small_grid):
        constants = estimate_constants(
            linear, linear, linf, grid=small_grid
        )
        assert constants.c_upper == 1.0
        assert constants.c_lower == 1.0

    def test_growing_ratio_is_unbounded(self, quadratic, small_grid):
        constants = estimate_constants(
            quadratic, quadratic, quadratic, grid=small_grid
        )
        assert constants.c_upper == math.inf
        assert constants.c_lower == math.inf
        with pytest.raises(UnboundedOnGridError):
            constants.require_bounded(Direction.UPPER)

    def test_require_bounded_returns_value(
        self, classical, small_grid
    ):
        constants = estimate_constants(*classical, grid=small_grid)
        assert constants.require_bounded("lower") == pytest.approx(1.0)

    def test_ratio(self, quadratic):
        triple = Triple(quadratic, quadratic, quadratic)
        assert triple.ratio(Direction.UPPER, 4.0) == 2.0
        assert triple.ratio(Direction.LOWER, 4.0) == 0.5

    def test_validate_constant_raises_to_cover_levels(
        self, quadratic
    ):
        raised = validate_constant(
            quadratic,
            quadratic,
            quadratic,
            Direction.UPPER,
            1.0,
            [0.0, 0.25, 4.0, math.inf],
        )
        assert raised == 2.0

    def test_validate_constant_keeps_larger_constant(
        self, classical
    ):
        assert (
            validate_constant(
                *classical, Direction.LOWER, 3.0, [0.5, 2.0]
            )
            == 3.0
        )

    def test_ratio_table(self, classical, small_grid):
        rows = ratio_table(*classical, grid=small_grid)
        assert len(rows) == small_grid.count
        u, upper, lower = rows[0]
        assert u == pytest.approx(1e-3)
        assert upper == pytest.approx(1.0)
        assert lower == pytest.approx(1.0)


class TestHolder:

    def test_holder_holds(self, classical, two_atom):
        report = holder_verify(
            *classical, two_atom, two_atom, 1.0
        )
        assert report.passed
        assert report.details["lhs"] == pytest.approx(4.0)
        assert report.details["rhs"] == pytest.approx(16.0)
        assert report.details["atom_failures"] == []

    def test_zero_factor(self, classical, two_atom):
        zero = two_atom.with_values([0.0, 0.0])
        assert holder_verify(
            *classical, zero, two_atom, 1.0
        ).passed

    def test_too_small_constant_fails_atomwise(
        self, classical, two_atom
    ):
        report = holder_verify(
            *classical, two_atom, two_atom, 0.01
        )
        assert not report.passed
        assert report.details["atom_failures"] == [0, 1]
        assert "atomwise" in report.reasoning

    def test_holder_levels(self, quadratic, two_atom):
        levels = holder_levels(
            quadratic, quadratic, two_atom, two_atom
        )
        assert levels == pytest.approx([1.0, 0.25])

    def test_holder_levels_lux(self, quadratic, two_atom):
        levels = holder_levels(
            quadratic,
            quadratic,
            two_atom,
            two_atom,
            kind=NormKind.LUX,
        )
        assert levels == pytest.approx([0.8, 0.2])

    def test_holder_levels_zero(self, quadratic, two_atom):
        zero = two_atom.with_values([0.0, 0.0])
        assert holder_levels(quadratic, quadratic, zero, two_atom) == []

    def test_lux_holder(self, classical, two_atom):
        report = lux_holder_verify(
            *classical, two_atom, two_atom, 1.0
        )
        assert report.passed
        assert report.details["lhs"] == pytest.approx(5.0)
        assert report.details["rhs"] == pytest.approx(10.0)


class TestWitness:

    def test_witness_function(self, quadratic, two_atom):
        built = witness_function(quadratic, quadratic, two_atom)
        assert built.norm_g == pytest.approx(2.0)
        assert built.levels == pytest.approx((1.0, 0.25))
        assert built.h.values == pytest.approx((1.0, 0.5))

    def test_witness_zero_g(self, quadratic, two_atom):
        with pytest.raises(ZeroFunctionError):
            witness_function(
                quadratic, quadratic, two_atom.with_values([0, 0])
            )

    def test_converse_witness(self, classical, two_atom):
        report = converse_witness(*classical, two_atom, 1.0)
        assert report.passed
        assert report.pointwise_ok
        assert report.norm_h == pytest.approx(1.0)
        assert report.norm_hg == pytest.approx(2.0)
        assert report.target == pytest.approx(2.0)
        assert report.delta is None

    def test_to_audit(self, classical, two_atom):
        audit = converse_witness(*classical, two_atom, 1.0).to_audit()
        assert audit.check == "witness"
        assert audit.passed

    def test_witness_rejects_y3(self, linear, linf, two_atom):
        with pytest.raises(YoungClassError):
            witness(linear, linear, linf, two_atom, 1.0)

    def test_witness_y3_requires_a_y3_function(
        self, classical, two_atom
    ):
        with pytest.raises(YoungClassError):
            witness_y3(*classical, two_atom, 1.0, 0.9)

    def test_converse_witness_through_envelope(
        self, linear, linf, two_atom
    ):
        report = converse_witness(
            linear, linear, linf, two_atom, 1.0, delta=0.9
        )
        assert report.passed
        assert report.delta == 0.9
        assert report.norm_g == 2.0
        assert report.target == pytest.approx(0.81 * 2.0)
        assert report.norm_hg >= report.target


class TestPwm:

    def test_constant_multiplier(self, quadratic):
        g = SimpleFunction.from_pairs([(1, 1), (2, 1)])
        value = pwm_bruteforce(
            quadratic, quadratic, g, budget=30, kind=NormKind.LUX
        )
        assert value == 1.0

    def test_multiplier_norm_is_sup_of_g(self, quadratic, two_atom):
        estimate = pwm_search(
            quadratic,
            quadratic,
            two_atom,
            budget=40,
            kind=NormKind.LUX,
        )
        assert estimate.value == pytest.approx(2.0, rel=1e-9)
        assert estimate.evaluations <= 40
        assert estimate.argmax is not None

    def test_seeded_search_is_deterministic(
        self, classical, two_atom
    ):
        phi1, phi2, _ = classical
        first = pwm_search(phi1, phi2, two_atom, budget=50, seed=3)
        second = pwm_search(phi1, phi2, two_atom, budget=50, seed=3)
        assert first == second

    def test_zero_multiplier(self, quadratic, two_atom):
        zero = two_atom.with_values([0.0, 0.0])
        estimate = pwm_search(quadratic, quadratic, zero)
        assert estimate.value == 0.0
        assert estimate.argmax is None

    def test_atom_limit(self, quadratic):
        g = SimpleFunction.from_pairs([(1, 1)] * 5)
        with pytest.raises(InvalidValueError):
            pwm_search(quadratic, quadratic, g)


class TestSandwich:

    def test_classical_triple(self, classical, two_atom, small_grid):
        report = sandwich_audit(
            *classical, two_atom, grid=small_grid, budget=60
        )
        assert report.passed, report.reasoning
        assert report.details["lower"] <= report.details["estimate"]
        assert report.details["estimate"] <= report.details["upper"]

    def test_zero_multiplier(self, classical, two_atom, small_grid):
        zero = two_atom.with_values([0.0, 0.0])
        report = sandwich_audit(*classical, zero, grid=small_grid)
        assert report.passed
        assert report.details["estimate"] == 0.0

    def test_unbounded_constants(
        self, quadratic, two_atom, small_grid
    ):
        with pytest.raises(UnboundedOnGridError):
            sandwich_audit(
                quadratic,
                quadratic,
                quadratic,
                two_atom,
                grid=small_grid,
            )


class TestClassicalIdentities:

    def test_lp_multipliers_are_lp3(self, two_atom):
        report = classical_identity_audit(2, 1, two_atom, budget=40)
        assert report.passed
        assert report.details["p3"] == 2.0
        assert report.details["target"] == pytest.approx(
            math.sqrt(5.0)
        )

    def test_equal_exponents_give_sup_norm(self, two_atom):
        report = classical_identity_audit(2, 2, two_atom, budget=40)
        assert report.passed
        assert report.details["target"] == 2.0

    def test_p1_below_p2_rejected(self, two_atom):
        with pytest.raises(InvalidValueError):
            classical_identity_audit(1, 2, two_atom)


class TestAsymptotics:

    def test_power_matches_surrogate(self, quadratic, small_grid):
        report = example_asymptotics_audit(quadratic, small_grid)
        assert report.passed
        assert report.details["k"] == pytest.approx(1.0)
        assert report.details["family"] == "power"

    def test_power_log_ratio_is_finite(self, small_grid):
        report = example_asymptotics_audit(PowerLog(2, 1), small_grid)
        assert math.isfinite(report.details["k"])

    def test_range_is_limited(self, quadratic):
        with pytest.raises(InvalidValueError):
            example_asymptotics_audit(
                quadratic, UGrid(1e-9, 1e3, 13)
            )

    def test_no_surrogate_for_linf(self, linf):
        with pytest.raises(InvalidValueError):
            surrogate_for(linf)

    def test_table(self, quadratic, small_grid):
        rows = asymptotics_table(quadratic, small_grid)
        assert len(rows) == small_grid.count
        assert all(r == pytest.approx(1.0) for _, r in rows)

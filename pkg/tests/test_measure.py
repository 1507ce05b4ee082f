from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orlicz_kit.exceptions import (
    InvalidDescriptorError,
    InvalidValueError,
    ZeroFunctionError,
)
from orlicz_kit.measure import (
    MeasureSpace,
    SimpleFunction,
    canonicalize,
    distribution,
    lattice_pairs,
    monotone_limit_audit,
    truncation_stages,
)
from orlicz_kit.measure import audits

_atoms = st.lists(
    st.tuples(
        st.floats(min_value=1e-6, max_value=1e3),
        st.floats(min_value=0.0, max_value=10.0),
    ),
    min_size=1,
    max_size=30,
)


class TestMeasureSpace:

    def test_total(self):
        assert MeasureSpace((1.0, 2.5)).total == 3.5

    def test_empty_space_rejected(self):
        with pytest.raises(InvalidDescriptorError) as info:
            MeasureSpace(())
        assert info.value.field == "atoms"

    @pytest.mark.parametrize("weight", [0.0, -1.0, float("inf")])
    def test_bad_weight_names_the_atom(self, weight):
        with pytest.raises(InvalidDescriptorError) as info:
            MeasureSpace((1.0, weight))
        assert info.value.field == "atoms[1].weight"


class TestSimpleFunction:

    def test_stores_absolute_values(self):
        f = SimpleFunction.from_pairs([(1, -2), (1, 1)])
        assert f.values == (2.0, 1.0)
        assert len(f) == 2

    def test_value_count_must_match(self):
        with pytest.raises(InvalidDescriptorError):
            SimpleFunction(MeasureSpace((1.0,)), (1.0, 2.0))

    def test_infinite_value_rejected(self):
        with pytest.raises(InvalidDescriptorError) as info:
            SimpleFunction.from_pairs([(1, float("inf"))])
        assert info.value.field == "atoms[0].value"

    def test_zeros(self):
        f = SimpleFunction.zeros(MeasureSpace((1.0, 1.0)))
        assert f.is_zero()

    def test_arithmetic(self, two_atom):
        assert two_atom.scale(2.0).values == (4.0, 2.0)
        assert two_atom.divide(2.0).values == (1.0, 0.5)
        assert two_atom.multiply(two_atom).values == (4.0, 1.0)
        assert two_atom.add(two_atom).values == (4.0, 2.0)
        assert two_atom.truncate(1.5).values == (1.5, 1.0)

    def test_divide_requires_positive_finite(self, two_atom):
        with pytest.raises(InvalidValueError):
            two_atom.divide(0.0)

    def test_different_spaces_do_not_mix(self, two_atom):
        other = SimpleFunction.from_pairs([(2, 1), (1, 1)])
        with pytest.raises(InvalidValueError):
            two_atom.multiply(other)


class TestLayers:

    def test_canonicalize_merges_equal_values(self):
        f = SimpleFunction.from_pairs([(1, 1), (2, 1), (3, 2)])
        layers = canonicalize(f)
        assert layers.levels == (1.0, 2.0)
        assert layers.masses == (3.0, 3.0)
        assert layers.tails == (6.0, 3.0)

    def test_canonicalize_drops_zero_atoms(self):
        f = SimpleFunction.from_pairs([(5, 0), (1, 3)])
        assert canonicalize(f).levels == (3.0,)

    def test_canonicalize_zero_function(self):
        f = SimpleFunction.from_pairs([(1, 0)])
        with pytest.raises(ZeroFunctionError):
            canonicalize(f)

    @pytest.mark.parametrize(
        "t, expected",
        [(0.0, 2.0), (0.5, 2.0), (1.0, 1.0), (1.5, 1.0), (2.0, 0.0)],
    )
    def test_distribution_is_strict(self, two_atom, t, expected):
        assert distribution(two_atom, t) == expected

    def test_distribution_at_infinity(self, two_atom):
        assert distribution(two_atom, float("inf")) == 0.0

    def test_tails_are_exactly_rounded(self):
        f = SimpleFunction.from_pairs([(0.1, 3), (0.2, 2), (0.3, 1)])
        assert distribution(f, 0.0) == 0.6
        assert canonicalize(f).tails[0] == 0.6

    @settings(max_examples=80, deadline=None)
    @given(_atoms, st.floats(min_value=0.0, max_value=10.0))
    def test_distribution_ignores_merging(self, atoms, cap):
        f = SimpleFunction.from_pairs(atoms)
        truncated = f.truncate(cap)
        for t in (0.0, 0.5 * cap):
            expected = math.fsum(
                w for w, v in zip(truncated.weights, truncated.values)
                if v > t
            )
            assert distribution(truncated, t) == expected

    def test_to_simple(self, two_atom):
        f = canonicalize(two_atom).to_simple()
        assert f.weights == (1.0, 1.0)
        assert f.values == (1.0, 2.0)


class TestMeasureAudits:

    def test_truncation_stages(self, two_atom):
        stages = truncation_stages(two_atom, 4)
        assert len(stages) == 4
        assert stages[0].values == (0.5, 0.5)
        assert stages[-1] == two_atom

    def test_truncation_needs_a_stage(self, two_atom):
        with pytest.raises(InvalidValueError):
            truncation_stages(two_atom, 0)

    def test_monotone_limit(self, two_atom):
        report = monotone_limit_audit(two_atom, 5)
        assert report.passed
        assert report.check == "monotone-limit"

    @settings(max_examples=80, deadline=None)
    @given(_atoms, st.integers(min_value=2, max_value=12))
    def test_monotone_limit_holds_exactly(self, atoms, stages):
        f = SimpleFunction.from_pairs(atoms)
        report = monotone_limit_audit(f, stages)
        assert report.passed, report.reasoning
        assert report.reasoning is None

    def test_monotone_limit_failure_names_the_level(self, monkeypatch):
        f = SimpleFunction.from_pairs([(1, 2), (1, 1)])
        original = audits.distribution
        calls = iter(range(10**6))

        def shaky(g, t):
            value = float(original(g, t))
            return value - 0.5 if next(calls) == 1 else value

        monkeypatch.setattr(audits, "distribution", shaky)
        report = monotone_limit_audit(f, 3)
        assert not report.passed
        assert "drops below" in report.reasoning
        assert "0.0" in report.reasoning

    def test_lattice_pairs_with_factors(self, two_atom):
        h, f = lattice_pairs(two_atom, 0, factors=[0.5, 1.0])
        assert h.values == (1.0, 1.0)
        assert f is two_atom

    def test_lattice_pairs_random_stay_below(self, two_atom):
        h, f = lattice_pairs(two_atom, 7)
        assert all(x <= y for x, y in zip(h.values, f.values))

    def test_lattice_pairs_reject_bad_factors(self, two_atom):
        with pytest.raises(InvalidValueError):
            lattice_pairs(two_atom, 0, factors=[1.5, 0.0])
        with pytest.raises(InvalidValueError):
            lattice_pairs(two_atom, 0, factors=[1.0])

from __future__ import annotations

import json
import math

import pytest

from orlicz_kit.exceptions import InvalidDescriptorError
from orlicz_kit.multipliers import converse_witness, estimate_constants
from orlicz_kit.norms import weak_norm
from orlicz_kit.serialization import (
    MeasureSerializer,
    ReportSerializer,
    YoungSerializer,
    decode_extreal,
    dumps_json,
)
from orlicz_kit.types import AuditReport, NormMethod, UGrid
from orlicz_kit.young import (
    ArgScale,
    FiniteB,
    LinfIndicator,
    PiecewiseLinear,
    Power,
    PowerLog,
    Sum,
)


class TestDumpsJson:

    def test_schema_first(self):
        text = dumps_json({"value": 1.5})
        assert text.startswith('{\n  "schema": 1,')
        assert text.endswith("}\n")

    def test_integral_floats_keep_a_decimal(self):
        assert '"value": 2.0' in dumps_json({"value": 2.0})

    def test_seventeen_digits(self):
        data = json.loads(dumps_json({"value": 0.1}))
        assert data["value"] == 0.1
        assert "0.10000000000000001" in dumps_json({"value": 0.1})

    def test_infinity_as_string(self):
        data = json.loads(dumps_json({"value": math.inf}))
        assert data["value"] == "inf"

    def test_nan_refused(self):
        with pytest.raises(ValueError):
            dumps_json({"value": math.nan})


class TestDecodeExtReal:

    @pytest.mark.parametrize("value", ["inf", "Infinity", "∞"])
    def test_infinity(self, value):
        assert decode_extreal(value, "x") == math.inf

    def test_number(self):
        assert decode_extreal(3, "x") == 3.0

    @pytest.mark.parametrize("value", [True, -1.0, "abc", None])
    def test_rejects(self, value):
        with pytest.raises(InvalidDescriptorError) as info:
            decode_extreal(value, "tail.b")
        assert info.value.field == "tail.b"


class TestYoungSerializer:

    def setup_method(self):
        self.serializer = YoungSerializer()

    @pytest.mark.parametrize(
        "phi",
        [
            Power(2),
            PowerLog(1, 2),
            LinfIndicator(),
            PiecewiseLinear(((0, 0), (1, 1)), FiniteB(2)),
            PiecewiseLinear(((0, 0), (1, 1)), FiniteB(2, 3)),
            Sum(Power(1), LinfIndicator()),
            ArgScale(Power(2), 0.5),
        ],
    )
    def test_roundtrip(self, phi):
        data = self.serializer.serialize(phi)
        assert self.serializer.deserialize(data) == phi

    def test_pole_tail_written_with_inf(self):
        data = self.serializer.serialize(
            PiecewiseLinear(((0, 0), (1, 1)), FiniteB(2))
        )
        assert data["tail"] == {"b": 2.0, "phi_b": "inf"}

    def test_slope_tail(self):
        phi = self.serializer.deserialize(
            {
                "family": "pl",
                "breakpoints": [[0, 0], [1, 0]],
                "tail": {"slope": 1},
            }
        )
        assert phi.a == 1.0
        assert phi.evaluate(3.0) == 2.0

    def test_unknown_family(self):
        with pytest.raises(InvalidDescriptorError) as info:
            self.serializer.deserialize({"family": "cubic"})
        assert info.value.field == "family"

    def test_missing_exponent(self):
        with pytest.raises(InvalidDescriptorError) as info:
            self.serializer.deserialize({"family": "power"})
        assert info.value.field == "p"

    def test_bad_breakpoint_names_index(self):
        with pytest.raises(InvalidDescriptorError) as info:
            self.serializer.deserialize(
                {
                    "family": "pl",
                    "breakpoints": [[0, 0], [1, 2], [2, 3]],
                    "tail": {"slope": 5},
                }
            )
        assert info.value.field == "breakpoints[2]"

    def test_nested_field_path(self):
        with pytest.raises(InvalidDescriptorError) as info:
            self.serializer.deserialize(
                {
                    "family": "sum",
                    "lhs": {
                        "family": "pl",
                        "breakpoints": [[0, 0], [1, 1]],
                        "tail": {"b": 0.5},
                    },
                    "rhs": {"family": "power", "p": 1},
                }
            )
        assert info.value.field == "lhs.tail.b"

    def test_not_an_object(self):
        with pytest.raises(InvalidDescriptorError) as info:
            self.serializer.deserialize([1, 2])
        assert info.value.field == "young"


class TestMeasureSerializer:

    def setup_method(self):
        self.serializer = MeasureSerializer()

    def test_atoms(self, two_atom):
        data = self.serializer.serialize(two_atom)
        assert data == {
            "atoms": [
                {"weight": 1.0, "value": 2.0},
                {"weight": 1.0, "value": 1.0},
            ]
        }
        assert self.serializer.deserialize(data) == two_atom

    def test_pairs_shorthand(self, two_atom):
        assert self.serializer.deserialize([[1, 2], [1, 1]]) == two_atom

    def test_negative_values_taken_absolute(self):
        f = self.serializer.deserialize([[1, -3]])
        assert f.values == (3.0,)

    def test_missing_weight(self):
        with pytest.raises(InvalidDescriptorError) as info:
            self.serializer.deserialize({"atoms": [{"value": 1}]})
        assert info.value.field == "atoms[0].weight"

    def test_nonpositive_weight(self):
        with pytest.raises(InvalidDescriptorError) as info:
            self.serializer.deserialize([[1, 1], [0, 1]])
        assert info.value.field == "atoms[1].weight"

    def test_csv_with_header(self, two_atom):
        text = self.serializer.to_csv(two_atom)
        assert text.splitlines()[0] == "weight,value"
        assert self.serializer.from_csv(text) == two_atom

    def test_csv_without_header(self, two_atom):
        assert self.serializer.from_csv("1,2\n1,1\n") == two_atom

    def test_csv_bad_cell(self):
        with pytest.raises(InvalidDescriptorError) as info:
            self.serializer.from_csv("weight,value\n1,abc\n")
        assert info.value.field == "atoms[0].value"

    def test_csv_wrong_column_count(self):
        with pytest.raises(InvalidDescriptorError) as info:
            self.serializer.from_csv("1,2,3\n")
        assert info.value.field == "atoms[0]"


class TestReportSerializer:

    def setup_method(self):
        self.serializer = ReportSerializer()

    def test_norm_roundtrip(self, linear, two_atom):
        result = weak_norm(linear, two_atom)
        data = self.serializer.serialize_norm(result)
        assert data["kind"] == "weak"
        assert data["method"] == NormMethod.CLOSED_FORM.value
        restored = self.serializer.deserialize_norm(data)
        assert restored.value == result.value
        assert restored.residual == result.residual

    def test_constants(self, linear, linf):
        grid = UGrid(1e-3, 1e3, 13)
        data = self.serializer.serialize_constants(
            estimate_constants(linear, linear, linf, grid=grid)
        )
        assert data["c_upper"] == 1.0
        assert data["upper_bounded"] is True
        assert data["u_grid"] == {
            "u_min": 1e-3,
            "u_max": 1e3,
            "count": 13,
        }

    def test_unbounded_constant_is_inf(self, quadratic):
        grid = UGrid(1e-3, 1e3, 61)
        data = self.serializer.serialize_constants(
            estimate_constants(quadratic, quadratic, quadratic, grid)
        )
        assert data["c_upper"] == "inf"
        assert data["upper_bounded"] is False

    def test_witness(self, quadratic, linear, two_atom):
        report = converse_witness(
            quadratic, linear, quadratic, two_atom, 1.0
        )
        data = self.serializer.serialize_witness(report)
        assert data["passed"] is True
        assert "delta" not in data
        assert len(data["h"]["atoms"]) == 2

    def test_audit_roundtrip(self):
        report = AuditReport.violated(
            "holder", "too large", worst_slack=-0.5, lhs=2.0
        )
        data = self.serializer.serialize_audit(report)
        restored = self.serializer.deserialize_audit(data)
        assert restored.check == "holder"
        assert not restored.passed
        assert restored.worst_slack == -0.5
        assert restored.reasoning == "too large"

    def test_audit_with_infinite_slack(self):
        data = self.serializer.serialize_audit(AuditReport.ok("fatou"))
        assert data["worst_slack"] == "inf"
        assert self.serializer.deserialize_audit(data).worst_slack == (
            math.inf
        )

    def test_encode_nested_values(self, two_atom):
        encoded = self.serializer.encode(
            {"phi": Power(2), "f": two_atom, "x": [math.inf, 1.0]}
        )
        assert encoded["phi"] == {"family": "power", "p": 2}
        assert encoded["x"] == ["inf", 1.0]
        assert encoded["f"]["atoms"][0]["value"] == 2.0

    def test_encode_rejects_unknown(self):
        with pytest.raises(TypeError):
            self.serializer.encode(object())

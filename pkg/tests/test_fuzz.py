from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np
import pytest

from orlicz_kit.exceptions import (
    InvalidDescriptorError,
    NoChecksSelectedError,
)
from orlicz_kit.fuzz import (
    ALGORITHM_ID,
    THREADS_ENV,
    CampaignConfigLoader,
    CampaignConfigValidator,
    CampaignReport,
    CheckOutcome,
    CheckRegistry,
    CheckTally,
    CounterexampleRecord,
    case_rng,
    gen_simple,
    gen_space,
    parse_checks,
    power_triple,
    render_report,
    resolve_threads,
    run_campaign,
    write_corpus,
    write_report,
)
from orlicz_kit.fuzz.rng import validate_seed
from orlicz_kit.types import (
    ALL_CHECKS,
    AuditReport,
    CampaignConfig,
    YoungClass,
)
from orlicz_kit.young import FiniteB, PiecewiseLinear

GOLDEN_DIR = Path(__file__).parent / "golden"


class TestCaseStreams:

    def test_same_triple_same_numbers(self):
        first = case_rng(7, 2, 11).random(4)
        second = case_rng(7, 2, 11).random(4)
        assert np.array_equal(first, second)

    def test_streams_are_independent(self):
        base = case_rng(7, 2, 11).random()
        assert case_rng(7, 2, 12).random() != base
        assert case_rng(7, 3, 11).random() != base
        assert case_rng(8, 2, 11).random() != base

    def test_largest_seed(self):
        assert validate_seed((1 << 64) - 1) == (1 << 64) - 1

    @pytest.mark.parametrize("seed", [-1, 1 << 64, True, 1.0])
    def test_bad_seed(self, seed):
        with pytest.raises(InvalidDescriptorError) as info:
            validate_seed(seed)
        assert info.value.field == "seed"

    def test_negative_index(self):
        with pytest.raises(ValueError):
            case_rng(1, -1, 0)


class TestGenerators:

    def test_space_size(self):
        space = gen_space(np.random.default_rng(0), max_atoms=3)
        assert 1 <= len(space) <= 3
        assert all(w > 0.0 for w in space.weights)

    def test_boundary_values_touch_b(self):
        phi = PiecewiseLinear(((0, 0), (1, 1)), FiniteB(2, 3))
        space = gen_space(np.random.default_rng(0), max_atoms=4)
        tops = {
            gen_simple(np.random.default_rng(seed), space, phi).max_value
            for seed in range(200)
        }
        assert 2.0 in tops

    def test_power_triple_is_classical(self):
        phi1, phi2, phi3 = power_triple(np.random.default_rng(3))
        assert 1.0 / phi2.p == pytest.approx(
            1.0 / phi1.p + 1.0 / phi3.p
        )
        assert min(phi1.p, phi2.p, phi3.p) >= 1.0


class TestCheckRegistry:

    def setup_method(self):
        self.registry = CheckRegistry()

    def test_every_check_registered(self):
        assert self.registry.names() == sorted(ALL_CHECKS)

    def test_unknown_check(self):
        with pytest.raises(InvalidDescriptorError) as info:
            self.registry.get("bogus")
        assert info.value.field == "checks"

    def test_stream_index_ignores_selection(self):
        assert self.registry.index_of("holder") == 0
        assert self.registry.index_of("inverse-laws") == (
            len(ALL_CHECKS) - 1
        )


class TestCheckTally:

    def test_worst_case_tracked(self):
        tally = CheckTally()
        tally.record(0, True, 0.5)
        tally.record(1, False, -0.1, rechecked=True)
        tally.record(2, True, 0.2, boundary=True)
        assert tally.cases == 3
        assert tally.failed == 1
        assert tally.rechecked == 1
        assert tally.boundary_cases == 1
        assert tally.worst_slack == -0.1
        assert tally.worst_case == 1

    def test_first_case_sets_worst_even_at_infinity(self):
        tally = CheckTally()
        tally.record(0, True, math.inf)
        assert tally.worst_case == 0


class TestParseChecks:

    def test_comma_separated(self):
        assert parse_checks("holder, witness,holder") == (
            "holder",
            "witness",
        )

    def test_list(self):
        assert parse_checks(["fatou", " lattice "]) == (
            "fatou",
            "lattice",
        )

    def test_empty(self):
        assert parse_checks(",") == ()


class TestCampaignConfigLoader:

    def setup_method(self):
        self.loader = CampaignConfigLoader()

    def test_defaults(self):
        config = self.loader.load_from_text("")
        assert config == CampaignConfig()

    def test_yaml(self):
        config = self.loader.load_from_text(
            "seed: 42\n"
            "cases: 10\n"
            "checks: [holder, fatou]\n"
            "class_mix: {Y1: 0.5, Y3: 0.5}\n"
            "u_grid: {u_min: 1e-4, u_max: 1.0e4, count: 33}\n"
        )
        assert config.seed == 42
        assert config.cases == 10
        assert config.checks == ("holder", "fatou")
        assert config.class_mix[YoungClass.Y2] == 0.0
        assert config.u_grid.u_min == 1e-4
        assert config.u_grid.count == 33

    def test_checks_as_string(self):
        config = self.loader.load_from_data(
            {"checks": "holder, witness"}
        )
        assert config.checks == ("holder", "witness")

    def test_file(self, tmp_path):
        path = tmp_path / "campaign.yaml"
        path.write_text("seed: 3\ncases: 2\n")
        config = self.loader.load_from_file(path)
        assert (config.seed, config.cases) == (3, 2)

    @pytest.mark.parametrize(
        "data, field",
        [
            ({"bogus": 1}, "bogus"),
            ({"seed": -1}, "seed"),
            ({"cases": 0}, "cases"),
            ({"delta": 1.0}, "delta"),
            ({"class_mix": {"Y1": 0.5}}, "class_mix"),
            ({"class_mix": {"Y4": 1.0}}, "class_mix.Y4"),
            ({"u_grid": {"u_min": 10, "u_max": 1}}, "u_grid.u_max"),
            ({"checks": ["holder", "bogus"]}, "checks[1]"),
            ([1, 2], "config"),
        ],
    )
    def test_first_problem_raised(self, data, field):
        with pytest.raises(InvalidDescriptorError) as info:
            self.loader.load_from_data(data)
        assert info.value.field == field

    def test_unparseable_yaml(self):
        with pytest.raises(InvalidDescriptorError) as info:
            self.loader.load_from_text("seed: [1, 2\n")
        assert info.value.field == "config"


class TestCampaignConfigValidator:

    def test_messages(self):
        messages = CampaignConfigValidator().validate_data(
            {"cases": 0, "pwm_budget": "many"}
        )
        assert messages == [
            "cases: must be an integer >= 1",
            "pwm_budget: must be an integer >= 1",
        ]

    def test_missing_file(self, tmp_path):
        messages = CampaignConfigValidator().validate_file(
            tmp_path / "missing.yaml"
        )
        assert len(messages) == 1
        assert messages[0].startswith("config:")


class TestResolveThreads:

    def test_default_is_one(self, monkeypatch):
        monkeypatch.delenv(THREADS_ENV, raising=False)
        assert resolve_threads(CampaignConfig()) == 1

    def test_env_caps_request(self, monkeypatch):
        monkeypatch.setenv(THREADS_ENV, "2")
        assert resolve_threads(CampaignConfig(threads=8)) == 2
        assert resolve_threads(CampaignConfig()) == 2

    def test_bad_env(self, monkeypatch):
        monkeypatch.setenv(THREADS_ENV, "zero")
        with pytest.raises(InvalidDescriptorError) as info:
            resolve_threads(CampaignConfig())
        assert info.value.field == THREADS_ENV


class TestRunCampaign:

    def test_empty_selection(self):
        with pytest.raises(NoChecksSelectedError):
            run_campaign(CampaignConfig(checks=()))

    def test_unknown_check(self):
        with pytest.raises(InvalidDescriptorError) as info:
            run_campaign(CampaignConfig(checks=("bogus",)))
        assert info.value.field == "checks"

    def test_bad_delta(self):
        with pytest.raises(InvalidDescriptorError) as info:
            run_campaign(CampaignConfig(checks=("fatou",), delta=1.0))
        assert info.value.field == "delta"

    def test_counts(self, small_campaign):
        report = run_campaign(small_campaign)
        assert report.algorithm == ALGORITHM_ID
        assert [o.check for o in report.outcomes] == sorted(
            small_campaign.checks
        )
        for outcome in report.outcomes:
            assert outcome.cases == small_campaign.cases
        assert report.failures == len(report.counterexamples)
        assert report.passed == (report.failures == 0)

    def test_same_seed_same_report(self, small_campaign):
        first = render_report(run_campaign(small_campaign))
        second = render_report(run_campaign(small_campaign))
        assert first == second

    def test_thread_count_does_not_change_report(
        self, small_campaign, monkeypatch
    ):
        monkeypatch.delenv(THREADS_ENV, raising=False)
        small_campaign.threads = 1
        single = render_report(run_campaign(small_campaign))
        small_campaign.threads = 3
        pooled = render_report(run_campaign(small_campaign))
        assert single == pooled

    def test_report_file(self, small_campaign, tmp_path):
        path = tmp_path / "out" / "report.json"
        report = run_campaign(small_campaign, report_path=path)
        data = json.loads(path.read_text())
        assert data["schema"] == 1
        assert data["algorithm"] == ALGORITHM_ID
        assert data["config"]["seed"] == 1
        assert data["failures"] == report.failures
        assert "wall_time_s" not in data

    def test_golden_report(self):
        config = CampaignConfig(
            seed=1,
            cases=2,
            checks=("fatou", "lattice", "quasi-triangle"),
            threads=1,
        )
        rendered = render_report(run_campaign(config))
        golden = GOLDEN_DIR / "campaign-seed1.json"
        if not golden.exists():
            GOLDEN_DIR.mkdir(parents=True, exist_ok=True)
            golden.write_text(rendered, encoding="utf-8")
        assert rendered == golden.read_text(encoding="utf-8")


class TestCorpus:

    def _report(self) -> CampaignReport:
        record = CounterexampleRecord(
            check="holder",
            seed=9,
            case_index=12,
            inputs={"constant": 1.0},
            report=AuditReport.violated(
                "holder", "lhs above rhs", worst_slack=-0.25
            ),
            first_slack=-0.5,
        )
        outcome = CheckOutcome(
            check="holder",
            passed=0,
            failed=1,
            rechecked=1,
            worst_slack=-0.25,
            worst_case=12,
        )
        return CampaignReport(
            config=CampaignConfig(seed=9, cases=1, checks=("holder",)),
            outcomes=[outcome],
            counterexamples=[record],
        )

    def test_file_name(self):
        record = self._report().counterexamples[0]
        assert record.file_name == "holder-9-000012.json"

    def test_write_corpus(self, tmp_path):
        written = write_corpus(self._report(), tmp_path / "corpus")
        assert [p.name for p in written] == ["holder-9-000012.json"]
        data = json.loads(written[0].read_text())
        assert data["check"] == "holder"
        assert data["case"] == 12
        assert data["first_slack"] == -0.5
        assert data["report"]["passed"] is False

    def test_write_report(self, tmp_path):
        path = write_report(self._report(), tmp_path / "report.json")
        data = json.loads(path.read_text())
        assert data["passed"] is False
        assert data["failures"] == 1
        assert data["checks"][0]["worst_case"] == 12
        assert data["config"]["checks"] == ["holder"]


@pytest.mark.slow
class TestAcceptanceCampaigns:

    @pytest.mark.parametrize(
        "check, cases",
        [
            ("normalization", 1000),
            ("norms-equivalence", 1000),
            ("monotone-limit", 1000),
            ("lattice", 1000),
            ("holder", 10_000),
            ("witness", 600),
            ("sandwich", 100),
        ],
    )
    def test_seeded_campaign_has_no_failures(self, check, cases):
        report = run_campaign(
            CampaignConfig(seed=1, cases=cases, checks=(check,), threads=4)
        )
        [outcome] = report.outcomes
        assert outcome.cases == cases
        assert report.failures == 0, [
            (r.case_index, r.report.reasoning)
            for r in report.counterexamples[:5]
        ]

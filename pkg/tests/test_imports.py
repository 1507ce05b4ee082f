from __future__ import annotations


class TestCoreImports:

    def test_top_level_package(self):
        import orlicz_kit

        assert hasattr(orlicz_kit, "__version__")

    def test_public_api_exports(self):
        from orlicz_kit import (
            ArgScale,
            AuditReport,
            CampaignConfig,
            CampaignReport,
            ExpPower,
            ExtReal,
            FiniteB,
            InvalidDescriptorError,
            LinfIndicator,
            MeasureSpace,
            NoChecksSelectedError,
            NormResult,
            PiecewiseLinear,
            Power,
            PowerLog,
            SimpleFunction,
            Slope,
            Sum,
            TripleConstant,
            UGrid,
            UnboundedOnGridError,
            WitnessReport,
            YoungClassError,
            YoungFunction,
            ZeroFunctionError,
            distribution,
            estimate_constants,
            get_logger,
            holder_verify,
            lux_norm,
            pwm_bruteforce,
            run_campaign,
            setup_logging,
            weak_norm,
            witness,
            witness_y3,
        )

    def test_all_is_importable(self):
        import orlicz_kit

        for name in orlicz_kit.__all__:
            assert hasattr(orlicz_kit, name), name


class TestSubpackageImports:

    def test_norms(self):
        from orlicz_kit.norms import (
            NORM_ENGINES,
            closed_form_weak_norm,
            lux_modular,
            norm_of,
            weak_sup_form2,
        )

    def test_multipliers(self):
        from orlicz_kit.multipliers import (
            classical_identity_audit,
            converse_witness,
            pwm_search,
            sandwich_audit,
        )

    def test_fuzz(self):
        from orlicz_kit.fuzz import (
            ALGORITHM_ID,
            CheckRegistry,
            case_rng,
            render_report,
        )

    def test_serialization(self):
        from orlicz_kit.serialization import (
            MeasureSerializer,
            ReportSerializer,
            YoungSerializer,
            dumps_json,
        )


class TestCliImports:

    def test_cli_entry_point(self):
        from orlicz_kit.cli import cli, main

        assert callable(main)
        assert {
            "norm",
            "inverse",
            "constants",
            "holder-check",
            "witness-check",
            "pwm-bound",
            "equiv-check",
            "examples",
            "fuzz",
        } <= set(cli.commands)

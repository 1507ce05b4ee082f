from __future__ import annotations

import logging

import pytest

from orlicz_kit.logging import (
    OrliczLogger,
    OrliczRichHandler,
    get_logger,
    setup_logging,
)


@pytest.fixture(autouse=True)
def _restore_root():
    root = logging.getLogger("orlicz_kit")
    handlers, level = list(root.handlers), root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)


class TestSetupLogging:

    def test_returns_kit_logger(self):
        assert isinstance(setup_logging(level="DEBUG"), OrliczLogger)

    def test_rich_handler(self):
        setup_logging(level="WARNING")
        root = logging.getLogger("orlicz_kit")
        assert root.level == logging.WARNING
        assert [type(h) for h in root.handlers] == [OrliczRichHandler]

    def test_plain_handler(self):
        setup_logging(level="INFO", rich_output=False)
        [handler] = logging.getLogger("orlicz_kit").handlers
        assert type(handler) is logging.StreamHandler

    def test_repeated_setup_does_not_stack(self):
        setup_logging()
        setup_logging()
        assert len(logging.getLogger("orlicz_kit").handlers) == 1

    def test_log_file(self, tmp_path):
        path = tmp_path / "kit.log"
        setup_logging(level="INFO", rich_output=False, log_file=str(path))
        get_logger("fuzz.campaign").campaign_finished(0, 0.5)
        for handler in logging.getLogger("orlicz_kit").handlers:
            handler.flush()
        text = path.read_text()
        assert "orlicz_kit.fuzz.campaign" in text
        assert "Campaign finished" in text


class TestOrliczLogger:

    def setup_method(self):
        setup_logging(level="DEBUG", rich_output=False)
        self.logger = get_logger("norms")

    def test_name(self):
        assert self.logger._logger.name == "orlicz_kit.norms"
        assert self.logger.is_debug()

    def test_norm_computed(self, caplog):
        with caplog.at_level(logging.DEBUG, logger="orlicz_kit"):
            self.logger.norm_computed(
                "weak", float("inf"), "closed-form", 1e-12
            )
        [record] = caplog.records
        assert record.levelno == logging.DEBUG
        assert "∞" in record.getMessage()
        assert "residual=1e-12" in record.getMessage()

    def test_failed_check_is_a_warning(self, caplog):
        with caplog.at_level(logging.DEBUG, logger="orlicz_kit"):
            self.logger.check_finished("holder", False, -0.5)
            self.logger.check_finished("fatou", True, 0.1)
        assert [r.levelno for r in caplog.records] == [
            logging.WARNING,
            logging.DEBUG,
        ]

    def test_level_override(self):
        quiet = OrliczLogger("quiet", level="ERROR")
        assert not quiet.is_debug()

"""
Unit tests for logging configuration
"""

import json
from pathlib import Path
from unittest.mock import MagicMock

from loguru import logger

from argdial.logging import ContextualLogger, LoggingConfig, get_logger


class TestLoggingConfig:
    """Test LoggingConfig class"""

    def test_configure_default_settings(self):
        """Test logging configuration with default settings"""
        LoggingConfig.configure()

        logger.warning("configured")

    def test_configure_with_log_dir(self, tmp_path):
        """Test that a log directory gets a component log file"""
        log_dir = tmp_path / "logs"

        LoggingConfig.configure(
            component="argdial-test",
            log_level="DEBUG",
            log_dir=str(log_dir),
            enable_console=False,
        )
        logger.info("written to file")
        logger.remove()

        log_file = Path(log_dir) / "argdial-test.log"
        assert log_file.exists()
        assert "written to file" in log_file.read_text()

    def test_structured_records_are_json(self, tmp_path):
        """Test that structured logging serializes each record"""
        LoggingConfig.configure(
            component="argdial-json",
            log_level="INFO",
            log_dir=str(tmp_path),
            structured=True,
            enable_console=False,
        )
        get_logger("argdial.test").info("structured record", scheme_id="argument_from_sign")
        logger.remove()

        line = (tmp_path / "argdial-json.log").read_text().strip().splitlines()[-1]
        record = json.loads(line)
        assert record["record"]["message"] == "structured record"
        assert record["record"]["extra"]["scheme_id"] == "argument_from_sign"

    def test_console_logs_go_to_stderr(self, capsys):
        """Test that console logging never writes to stdout"""
        LoggingConfig.configure(log_level="INFO")

        get_logger("argdial.test").info("stderr only")
        logger.remove()

        captured = capsys.readouterr()
        assert captured.out == ""
        assert "stderr only" in captured.err


class TestContextualLogger:
    """Test ContextualLogger class"""

    def test_logger_initialization(self):
        """Test logger initialization"""
        log = ContextualLogger("argdial.schemes")

        assert log.component == "argdial.schemes"
        assert log.context == {}

    def test_logger_with_initial_context(self):
        """Test logger with initial context"""
        log = ContextualLogger("argdial.dialogue", {"dialogue_type": "inquiry"})

        assert log.context == {"dialogue_type": "inquiry"}

    def test_with_context(self):
        """Test adding context to logger"""
        log = ContextualLogger("argdial.evaluation")

        contextual = log.with_context(argument_id="arg1", cq_index=2)

        assert log.context == {}
        assert contextual.context == {"argument_id": "arg1", "cq_index": 2}

    def test_chained_context(self):
        """Test chaining context additions"""
        log = ContextualLogger("argdial.dialogue", {"dialogue_type": "persuasion"})

        chained = log.with_context(speaker="P1").with_context(turn_index=3)

        assert chained.context == {"dialogue_type": "persuasion", "speaker": "P1", "turn_index": 3}

    def test_logging_methods(self):
        """Test that logging methods bind keyword context"""
        log = ContextualLogger("argdial.test")
        mock_logger = MagicMock()
        mock_bound_logger = MagicMock()
        mock_logger.bind.return_value = mock_bound_logger
        log._logger = mock_logger

        log.debug("Debug message", extra_field="value")
        log.info("Info message", extra_field="value")
        log.warning("Warning message", extra_field="value")
        log.error("Error message", extra_field="value")
        log.exception("Exception message", extra_field="value")

        assert mock_logger.bind.call_count == 5
        mock_logger.bind.assert_called_with(extra_field="value")
        mock_bound_logger.debug.assert_called_once_with("Debug message")
        mock_bound_logger.info.assert_called_once_with("Info message")
        mock_bound_logger.warning.assert_called_once_with("Warning message")
        mock_bound_logger.error.assert_called_once_with("Error message")
        mock_bound_logger.exception.assert_called_once_with("Exception message")


class TestGetLogger:
    """Test get_logger factory function"""

    def test_get_logger(self):
        """Test get_logger function"""
        log = get_logger("argdial.registry")

        assert isinstance(log, ContextualLogger)
        assert log.component == "argdial.registry"
        assert log.context == {}

    def test_get_logger_with_context(self):
        """Test get_logger with context"""
        log = get_logger("argdial.formats", source="user.scheme")

        assert log.context == {"source": "user.scheme"}

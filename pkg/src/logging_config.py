"""
Logging configuration for tverberg-lab.
Structured JSON records on stderr; stdout is left to the command summaries.
"""
import logging
import sys
import uuid
from contextvars import ContextVar
from typing import Optional

from pythonjsonlogger import jsonlogger

# One id per CLI invocation or theorem run
run_id_var: ContextVar[Optional[str]] = ContextVar('run_id', default=None)


class CustomJsonFormatter(jsonlogger.JsonFormatter):
    """
    JSON formatter that adds timestamp, upper-case level and the run id.
    """
    def add_fields(self, log_record, record, message_dict):
        super().add_fields(log_record, record, message_dict)

        if not log_record.get('timestamp'):
            log_record['timestamp'] = self.formatTime(record, self.datefmt)

        if log_record.get('level'):
            log_record['level'] = log_record['level'].upper()
        else:
            log_record['level'] = record.levelname

        run_id = run_id_var.get()
        if run_id:
            log_record['run_id'] = run_id


def setup_logging(log_level: str = "INFO", log_format: str = "json") -> logging.Logger:
    """
    Configure the ``tverberg`` logger tree.

    Args:
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_format: Format type ('json' or 'text')

    Returns:
        Configured logger instance
    """
    logger = logging.getLogger("tverberg")
    logger.setLevel(getattr(logging, log_level.upper()))
    logger.handlers = []
    logger.propagate = False

    handler = logging.StreamHandler(sys.stderr)

    if log_format.lower() == "json":
        formatter = CustomJsonFormatter(
            '%(timestamp)s %(level)s %(name)s %(message)s',
            datefmt='%Y-%m-%dT%H:%M:%S'
        )
    else:
        formatter = logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
            datefmt='%Y-%m-%d %H:%M:%S'
        )

    handler.setFormatter(formatter)
    logger.addHandler(handler)

    return logger


def set_run_id(run_id: Optional[str] = None) -> str:
    """
    Set the run id for the current context, generating a UUID when omitted.
    """
    if run_id is None:
        run_id = str(uuid.uuid4())

    run_id_var.set(run_id)
    return run_id


def get_run_id() -> Optional[str]:
    return run_id_var.get()

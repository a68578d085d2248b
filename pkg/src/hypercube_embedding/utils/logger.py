"""
Logging utilities for the hypercube embedding toolkit.
Provides centralized logging configuration with file and console handlers.

Console output goes to stderr: stdout carries reports and generated files.
"""
import logging
import sys
from pathlib import Path
from typing import Optional

ROOT_LOGGER_NAME = "hypercube_embedding"

_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
_DATE_FORMAT = '%Y-%m-%d %H:%M:%S'


class EmbeddingLogger:
    """Centralized logging manager for the toolkit."""

    _loggers = {}

    @classmethod
    def get_logger(cls, name: str, log_level: str = "WARNING",
                   log_file: Optional[str] = None,
                   console_output: bool = True) -> logging.Logger:
        """
        Get or create a logger instance.

        Args:
            name: Logger name (typically class or module name)
            log_level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
            log_file: Path to log file (optional)
            console_output: Whether to output to stderr

        Returns:
            Configured logger instance
        """
        if name in cls._loggers:
            return cls._loggers[name]

        qualified = name if name.startswith(ROOT_LOGGER_NAME) else f"{ROOT_LOGGER_NAME}.{name}"
        logger = logging.getLogger(qualified)

        # Children defer to the root package logger, which owns the handlers
        if qualified != ROOT_LOGGER_NAME:
            logger.setLevel(logging.NOTSET)
            cls._loggers[name] = logger
            return logger

        logger.setLevel(getattr(logging, log_level.upper()))
        logger.handlers.clear()
        logger.propagate = False

        formatter = logging.Formatter(fmt=_FORMAT, datefmt=_DATE_FORMAT)

        if console_output:
            console_handler = logging.StreamHandler(sys.stderr)
            console_handler.setFormatter(formatter)
            logger.addHandler(console_handler)

        if log_file:
            log_path = Path(log_file)
            log_path.parent.mkdir(parents=True, exist_ok=True)

            file_handler = logging.FileHandler(log_file, mode='a')
            file_handler.setLevel(logging.DEBUG)
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)

        cls._loggers[name] = logger
        return logger

    @classmethod
    def configure(cls, log_level: str = "WARNING",
                  log_file: Optional[str] = None) -> logging.Logger:
        """
        (Re)configure the package root logger.

        Args:
            log_level: Logging level
            log_file: Optional log file path

        Returns:
            The root package logger
        """
        cls._loggers.pop(ROOT_LOGGER_NAME, None)
        return cls.get_logger(ROOT_LOGGER_NAME, log_level=log_level,
                              log_file=log_file, console_output=True)


def configure_logging(settings) -> logging.Logger:
    """Apply a SettingsConfig to the package root logger."""
    return EmbeddingLogger.configure(settings.log_level, settings.log_file)


def get_logger(name: str = ROOT_LOGGER_NAME) -> logging.Logger:
    """
    Convenience function to get a logger.

    Args:
        name: Logger name

    Returns:
        Logger instance
    """
    if ROOT_LOGGER_NAME not in EmbeddingLogger._loggers:
        EmbeddingLogger.get_logger(ROOT_LOGGER_NAME)
    return EmbeddingLogger.get_logger(name)

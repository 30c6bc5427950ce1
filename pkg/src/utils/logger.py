"""
Logging utilities
"""

import logging
import sys
from datetime import datetime
from typing import Optional, TextIO

ROOT_LOGGER = 'ilsi'


class Logger:
    """
    Configurable logger for the speckle monitoring toolkit.

    Library modules log through `logging.getLogger(__name__)`; everything under
    the `src` package is routed to the configured root as well.
    """

    @staticmethod
    def setup_logger(name: str = ROOT_LOGGER,
                     level: str = 'INFO',
                     log_file: Optional[str] = None,
                     stream: TextIO = sys.stdout) -> logging.Logger:
        """
        Setup and configure logger.

        Args:
            name: Logger name
            level: Logging level ('DEBUG', 'INFO', 'WARNING', 'ERROR')
            log_file: Optional file to write logs to
            stream: Console stream (the CLI passes stderr)

        Returns:
            Configured logger
        """
        numeric = getattr(logging, level.upper(), None)
        if not isinstance(numeric, int):
            raise ValueError(f"Unknown logging level: {level}")

        formatter = logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
            datefmt='%Y-%m-%d %H:%M:%S'
        )
        handlers = [logging.StreamHandler(stream)]
        if log_file:
            handlers.append(logging.FileHandler(log_file))
        for handler in handlers:
            handler.setFormatter(formatter)

        logger = logging.getLogger(name)
        package = logging.getLogger('src')
        for target in (logger, package):
            target.setLevel(numeric)
            target.handlers.clear()
            for handler in handlers:
                target.addHandler(handler)
            target.propagate = False

        return logger

    @staticmethod
    def log_run_start(logger: logging.Logger, config: dict):
        """Log run configuration"""
        logger.info("=" * 60)
        logger.info("RUN START")
        logger.info("=" * 60)
        logger.info(f"Timestamp: {datetime.now().isoformat()}")
        for key, value in config.items():
            logger.info(f"{key}: {value}")
        logger.info("=" * 60)

    @staticmethod
    def log_run_end(logger: logging.Logger, results: dict):
        """Log run results"""
        logger.info("=" * 60)
        logger.info("RUN END")
        logger.info("=" * 60)
        for key, value in results.items():
            logger.info(f"{key}: {value}")
        logger.info("=" * 60)

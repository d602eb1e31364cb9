"""
BOHRKIT Logger Module

Console and dated-file logging for the library and CLI. Every record that
reaches a bohrkit handler carries the label of the run that produced it
(`verify-bohr#7`, `rstar#0`, or `-` outside a run).
"""

import logging
from contextlib import contextmanager
from datetime import datetime
from pathlib import Path
from typing import Iterator, Optional


ROOT_LOGGER = 'bohrkit'

CONSOLE_FORMAT = "%(levelname)s: %(message)s"
FILE_FORMAT = "%(asctime)s [%(run)s] %(name)s %(levelname)s: %(message)s"


class ColoredFormatter(logging.Formatter):
    """Console formatter; colours the level name when use_color is set."""

    LEVEL_COLORS = {
        'DEBUG': '\033[36m',
        'INFO': '\033[32m',
        'WARNING': '\033[33m',
        'ERROR': '\033[31m',
        'CRITICAL': '\033[35m',
    }
    RESET = '\033[0m'

    def __init__(self, fmt: str = CONSOLE_FORMAT, use_color: bool = True):
        super().__init__(fmt)
        self.use_color = use_color

    def format(self, record: logging.LogRecord) -> str:
        if not self.use_color:
            return super().format(record)
        # File handlers see the same record; colour a copy.
        tinted = logging.makeLogRecord(record.__dict__)
        tinted.levelname = f"{self.LEVEL_COLORS.get(record.levelname, '')}{record.levelname}{self.RESET}"
        return super().format(tinted)


class RunContextFilter(logging.Filter):
    """Stamps records with the active run label as `record.run`."""

    def __init__(self):
        super().__init__()
        self.label = '-'

    def filter(self, record: logging.LogRecord) -> bool:
        record.run = self.label
        return True


_run_filter = RunContextFilter()


@contextmanager
def run_context(label: str) -> Iterator[None]:
    """Label every bohrkit record emitted inside the block."""
    previous = _run_filter.label
    _run_filter.label = label
    try:
        yield
    finally:
        _run_filter.label = previous


def log_file_path(log_dir: Path, day: Optional[datetime] = None) -> Path:
    """`bohrkit_YYYYMMDD.log` under log_dir."""
    return Path(log_dir) / f"bohrkit_{(day or datetime.now()).strftime('%Y%m%d')}.log"


def setup_logging(
    level: str = "WARNING",
    log_dir: Optional[Path] = None,
    use_color: bool = True
) -> logging.Logger:
    """
    Configure the bohrkit logger.

    Args:
        level: DEBUG, INFO, WARNING, ERROR or CRITICAL
        log_dir: When given, records are also appended to the dated log file there
        use_color: Colour level names on the console

    Returns:
        The configured `bohrkit` logger
    """
    logger = logging.getLogger(ROOT_LOGGER)
    logger.setLevel(getattr(logging, level.upper(), logging.WARNING))
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    console = logging.StreamHandler()
    console.setFormatter(ColoredFormatter(CONSOLE_FORMAT, use_color=use_color))
    console.addFilter(_run_filter)
    logger.addHandler(console)

    if log_dir:
        path = log_file_path(log_dir)
        path.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(path, encoding='utf-8')
        file_handler.setFormatter(logging.Formatter(FILE_FORMAT))
        file_handler.addFilter(_run_filter)
        logger.addHandler(file_handler)

    return logger


def get_logger(name: str = ROOT_LOGGER) -> logging.Logger:
    return logging.getLogger(name)

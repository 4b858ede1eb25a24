"""Модуль для централизованной настройки логирования с использованием structlog.

Предоставляет структурированное логирование для всего приложения.
Отчёты разбора пишутся в stdout, поэтому журнал идёт только в файл
и (под тестами) в stderr.
"""

import logging
import os
import platform
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path

import structlog

APP_DIR_NAME = "lri-parser"
LOG_FILE_NAME = "parser.log"
LOG_FILE_MAX_BYTES = 10 * 1024 * 1024
LOG_FILE_BACKUPS = 5


def _resolve_log_dir() -> Path:
    """Каталог журнала: APP_LOG_DIR, иначе каталог состояния текущей ОС."""
    env_dir = os.getenv("APP_LOG_DIR")
    if env_dir:
        return Path(env_dir)
    if platform.system() == "Windows":
        base = Path(os.getenv("LOCALAPPDATA", Path.home() / "AppData" / "Local"))
        return base / APP_DIR_NAME / "logs"
    system_dir = Path("/var/log") / APP_DIR_NAME
    if os.access(system_dir, os.W_OK):
        return system_dir
    state_home = Path(os.getenv("XDG_STATE_HOME", Path.home() / ".local" / "state"))
    return state_home / APP_DIR_NAME / "logs"


def _running_under_tests() -> bool:
    return any("tests" in arg or "pytest" in arg for arg in sys.argv)


def _configure_logging() -> structlog.stdlib.BoundLogger:
    """Настройка системы логирования: файл с ротацией, JSON или цветная консоль."""
    root_logger = logging.getLogger()
    root_logger.setLevel(logging.INFO)
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    log_dir = _resolve_log_dir()
    try:
        log_dir.mkdir(parents=True, exist_ok=True)
        root_logger.addHandler(
            RotatingFileHandler(
                filename=str(log_dir / LOG_FILE_NAME),
                maxBytes=LOG_FILE_MAX_BYTES,
                backupCount=LOG_FILE_BACKUPS,
                encoding="utf-8",
            ),
        )
    except OSError:
        root_logger.addHandler(logging.NullHandler())

    shared_processors = [
        structlog.contextvars.merge_contextvars,
        structlog.stdlib.add_log_level,
        structlog.stdlib.add_logger_name,
        structlog.processors.TimeStamper(fmt="iso"),
    ]

    if _running_under_tests():
        root_logger.addHandler(logging.StreamHandler(sys.stderr))
        renderers = [structlog.dev.ConsoleRenderer(colors=True)]
    else:
        renderers = [
            structlog.processors.format_exc_info,
            structlog.processors.JSONRenderer(ensure_ascii=False),
        ]

    structlog.configure(
        processors=[*shared_processors, *renderers],
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )
    return structlog.get_logger(APP_DIR_NAME)


logger = _configure_logging()


def configure_log_level(level: str) -> None:
    """Настройка уровня логирования.

    :param level: уровень логирования ("DEBUG", "INFO" и т.д.)
    """
    logging.getLogger().setLevel(level.upper())

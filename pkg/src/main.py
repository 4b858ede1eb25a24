import sys

from src.config import SettingsManager
from src.domain.exceptions import UsageError
from src.infrastructure.logging.logger import configure_log_level, logger
from src.presentation.cli import main


def run() -> None:
    """Точка входа командной строки.

    Инициализирует настройки, применяет уровень логирования и
    завершает процесс с кодом команды.
    """
    try:
        settings = SettingsManager.init()
    except UsageError as e:
        sys.stderr.write(f"{e}\n")
        sys.exit(e.exit_code)
    configure_log_level(settings.LOG_LEVEL)

    logger.info("Запуск парсера словарных решёток")

    sys.exit(main())


if __name__ == "__main__":
    run()

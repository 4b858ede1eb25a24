"""Модуль с базовым миксином читателей строковых форматов.

Содержит разбиение файла на записи, разбор чисел с номером строки в
сообщении об ошибке и безопасное чтение файла с логированием.
"""

import math
from collections.abc import Callable, Iterator
from pathlib import Path
from typing import ClassVar, NoReturn

from src.domain.exceptions import LatticeParserError, LineSyntaxError, ProbabilityError
from src.infrastructure.logging.logger import logger

type Record = tuple[int, list[str]]

COMMENT_MARK = "#"


class LineReaderMixin:
    """Базовый миксин для файлов вида ``КЛЮЧЕВОЕ_СЛОВО поле поле ...``.

    Предоставляет методы для разбора записей с указанием строки
    при любой ошибке.
    """

    _module: ClassVar[str]
    _syntax_error: ClassVar[Callable[[int, str], LineSyntaxError]]

    @staticmethod
    def _strip_comment(line: str) -> str:
        position = line.find(COMMENT_MARK)
        return line if position < 0 else line[:position]

    @classmethod
    def _records(cls, text: str) -> Iterator[Record]:
        """Непустые строки без комментариев, разбитые по пробелам.

        :param text: Содержимое файла
        :returns: Пары (номер строки, поля)
        """
        for line_number, line in enumerate(text.splitlines(), start=1):
            fields = cls._strip_comment(line).split()
            if fields:
                yield line_number, fields

    def _fail(self, line_number: int, message: str) -> NoReturn:
        raise self._syntax_error(line_number, message)

    def _expect_fields(self, fields: list[str], count: int, line_number: int, usage: str) -> None:
        if len(fields) != count:
            self._fail(line_number, f"ожидалось {usage}, получено: {' '.join(fields)}")

    def _int(self, token: str, line_number: int, what: str) -> int:
        try:
            return int(token)
        except ValueError:
            self._fail(line_number, f"{what}: ожидалось целое число, получено {token!r}")

    def _float(self, token: str, line_number: int, what: str) -> float:
        try:
            value = float(token)
        except ValueError:
            self._fail(line_number, f"{what}: ожидалось число, получено {token!r}")
        if math.isnan(value):
            self._fail(line_number, f"{what}: значение NaN")
        return value

    def _log_prob(self, token: str, line_number: int, what: str) -> float:
        """Логарифм вероятности: конечное число не больше 0."""
        value = self._float(token, line_number, what)
        if not math.isfinite(value) or value > 0:
            msg = f"строка {line_number}: {what}: логарифм вероятности {token} должен быть конечным и не больше 0"
            raise ProbabilityError(self._module, msg)
        return value

    def _read_file(self, path: Path) -> str:
        """Безопасное чтение файла с логированием ошибок.

        :param path: Путь к файлу
        :returns: Содержимое файла
        :raises OSError: Если файл недоступен
        """
        try:
            text = path.read_text(encoding="utf-8")
        except FileNotFoundError:
            logger.error(f"{self._module}: файл не найден: {path}")
            raise
        except OSError as e:
            logger.error(f"{self._module}: ошибка чтения {path}: {e}")
            raise
        logger.info(f"{self._module}: чтение {path}")
        return text

    def read_text(self, text: str, source: str = "<text>") -> object:
        raise NotImplementedError

    def read_path(self, path: Path) -> object:
        """Чтение и разбор файла; ошибки проверки логируются и пробрасываются.

        :param path: Путь к файлу
        :returns: Доменный объект
        """
        text = self._read_file(path)
        try:
            return self.read_text(text, source=str(path))
        except LatticeParserError as e:
            logger.error(f"Ошибка проверки {path}: {e}")
            raise

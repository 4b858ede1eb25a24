"""Модуль с базовым интерфейсом читателей файловых форматов.

Определяет общий контракт для всех читателей: текст файла → доменный объект.
"""

from abc import ABC, abstractmethod
from pathlib import Path
from typing import ClassVar


class FormatReader[T](ABC):
    """Базовый интерфейс читателя строкового файлового формата."""

    _format_name: ClassVar[str]

    @abstractmethod
    def read_text(self, text: str, source: str = "<text>") -> T:
        """Разбор содержимого файла.

        :param text: Содержимое файла в UTF-8
        :param source: Имя источника для сообщений
        :return: Доменный объект
        """

    @abstractmethod
    def read_path(self, path: Path) -> T:
        """Чтение и разбор файла.

        :param path: Путь к файлу
        :return: Доменный объект
        """

    def supports_format(self, format_name: str) -> bool:
        """Проверяет, читает ли читатель указанный формат.

        :param format_name: Имя формата (grammar, lattice, bigram, trigram)
        :return: True, если формат поддерживается
        """
        return format_name == self._format_name

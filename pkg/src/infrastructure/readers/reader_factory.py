"""Модуль с фабрикой читателей файловых форматов.
Предоставляет единую точку доступа к экземплярам читателей.
"""

from pathlib import Path

from src.domain.exceptions import UsageError
from src.domain.interfaces.base_reader import FormatReader


class ReaderFactory:
    """Фабрика для получения читателей файлов.
    Выступает в роли реестра читателей и обеспечивает их поиск по
    имени формата.
    """

    def __init__(self, readers: list[FormatReader]):
        """Инициализация фабрики читателей.

        :param readers: Список уже созданных экземпляров читателей для регистрации
        """
        self._readers = readers

    def get_reader(self, format_name: str) -> FormatReader:
        """Получение читателя по имени формата.

        :param format_name: Имя формата (grammar, lattice, bigram, trigram, reference)
        :return: Соответствующий читатель
        :raises UsageError: Если указан неизвестный формат
        """
        format_name = format_name.lower()
        for reader in self._readers:
            if reader.supports_format(format_name):
                return reader
        msg = f"Неизвестный формат файла: {format_name}"
        raise UsageError(msg)

    def read(self, format_name: str, path: Path) -> object:
        """Чтение файла читателем нужного формата."""
        return self.get_reader(format_name).read_path(path)

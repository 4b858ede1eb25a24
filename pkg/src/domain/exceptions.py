"""Модуль с иерархией исключений парсера.

Каждое исключение знает модуль, в котором возникло, и код завершения CLI:
1 - ошибка использования, 2 - ошибка входных данных, 3 - ошибка выполнения.
"""

from typing import ClassVar

EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_RUNTIME = 3


class LatticeParserError(Exception):
    """Базовое исключение парсера словарных решёток."""

    exit_code: ClassVar[int] = EXIT_RUNTIME

    def __init__(self, module: str, message: str):
        """Инициализация исключения.

        :param module: Имя модуля-источника (grammar, lattice, engine и т.д.)
        :param message: Текст ошибки
        """
        self.module = module
        self.message = message
        super().__init__(f"{module}: {message}")


class UsageError(LatticeParserError):
    """Некорректное использование командной строки или конфигурации."""

    exit_code: ClassVar[int] = EXIT_USAGE

    def __init__(self, message: str, module: str = "cli"):
        super().__init__(module, message)


class ValidationError(LatticeParserError):
    """Базовый класс ошибок проверки входных данных."""

    exit_code: ClassVar[int] = EXIT_VALIDATION


class LineSyntaxError(ValidationError):
    """Синтаксическая ошибка в строковом файле с указанием номера строки."""

    def __init__(self, module: str, line_number: int, message: str):
        self.line_number = line_number
        super().__init__(module, f"строка {line_number}: {message}")


class GrammarSyntaxError(LineSyntaxError):
    """Синтаксическая ошибка в файле грамматики."""

    def __init__(self, line_number: int, message: str):
        super().__init__("grammar", line_number, message)


class LatticeSyntaxError(LineSyntaxError):
    """Синтаксическая ошибка в файле решётки."""

    def __init__(self, line_number: int, message: str):
        super().__init__("lattice", line_number, message)


class ModelSyntaxError(LineSyntaxError):
    """Синтаксическая ошибка в файле биграммной или триграммной модели."""

    def __init__(self, line_number: int, message: str):
        super().__init__("models", line_number, message)


class UndefinedCategoryError(ValidationError):
    """Категория правой части не определена ни правилом, ни лексиконом."""

    def __init__(self, category: str):
        self.category = category
        super().__init__("grammar", f"неопределённая категория: {category}")


class UnknownCategoryError(ValidationError):
    """Запрошена категория, отсутствующая в грамматике."""

    def __init__(self, category: str):
        self.category = category
        super().__init__("grammar", f"неизвестная категория: {category}")


class ProbabilityError(ValidationError):
    """Логарифм вероятности положителен или не конечен."""

    def __init__(self, module: str, message: str):
        super().__init__(module, message)


class FrameRangeError(ValidationError):
    """Кадр гипотезы вне допустимого диапазона."""

    def __init__(self, message: str, module: str = "lattice"):
        super().__init__(module, message)


class OverlappingProsodyError(ValidationError):
    """Просодические интервалы перекрываются."""

    def __init__(self, message: str, module: str = "models"):
        super().__init__(module, message)


class ReferenceCountError(ValidationError):
    """Число эталонных транскрипций не совпадает с числом решёток."""

    def __init__(self, lattices: int, references: int):
        super().__init__(
            "eval",
            f"решёток: {lattices}, эталонов: {references}",
        )


class MissingFrameError(LatticeParserError):
    """Кадр отсутствует в наборе оценок (недопустимая пара для Combine)."""

    def __init__(self, frame: int):
        self.frame = frame
        super().__init__("engine", f"кадр {frame} отсутствует в наборе оценок")


class UnknownWordError(LatticeParserError):
    """Лексический ключ гипотезы отсутствует в лексиконе."""

    def __init__(self, key: str):
        self.key = key
        super().__init__("engine", f"слово отсутствует в лексиконе: {key}")


class EmptyLatticeError(LatticeParserError):
    """Решётка не содержит ни одного кадра."""

    def __init__(self) -> None:
        super().__init__("engine", "пустая решётка")


class EmptyResultError(LatticeParserError):
    """Разбор не дал ни одного результата."""

    def __init__(self) -> None:
        super().__init__("eval", "нет результата разбора")


class OutOfOrderEmissionError(LatticeParserError):
    """Кадры запрошены у потока не по порядку."""

    def __init__(self, expected: int, requested: int):
        super().__init__(
            "decoder",
            f"ожидался кадр {expected}, запрошен {requested}",
        )


class SizeLimitError(LatticeParserError):
    """Входные данные превышают ограничения оракула."""

    def __init__(self, message: str):
        super().__init__("oracle", message)

"""Модуль конфигурации приложения.

Предоставляет настройки приложения через переменные окружения,
конфигурацию запуска из командной строки и её часть для движка разбора.
"""

import math
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import ClassVar, Literal

from src.domain.entities.scores import ModelWeights
from src.domain.exceptions import UsageError

type OutputFormat = Literal["text", "structured"]


@dataclass(frozen=True, slots=True)
class Settings:
    """Настройки приложения.

    :param LOG_LEVEL: Уровень логирования (DEBUG, INFO, WARNING, ERROR, CRITICAL).
    :param LRI_BEAM_OFFSET: Смещение луча по умолчанию (``inf`` отключает луч).
    :param LRI_WEIGHTS: Веса моделей по умолчанию в виде ``a,b,p,g``.
    :param LRI_WORKERS: Число рабочих потоков по умолчанию.
    """

    LOG_LEVEL: str = "INFO"
    LRI_BEAM_OFFSET: float = 8.0
    LRI_WEIGHTS: str = "1,1,1,1"
    LRI_WORKERS: int = 1


class SettingsManager:
    """Менеджер настроек приложения.
    Реализует паттерн Singleton для управления настройками.
    """

    _instance: ClassVar[Settings | None] = None

    @classmethod
    def init(cls) -> Settings:
        """Инициализация настроек приложения.

        :return: Экземпляр настроек.
        :raises UsageError: Если значение переменной окружения некорректно.
        """
        if cls._instance is None:
            try:
                beam_offset = float(os.getenv("LRI_BEAM_OFFSET", "8.0"))
                workers = int(os.getenv("LRI_WORKERS", "1"))
            except ValueError as e:
                msg = f"Некорректная переменная окружения: {e}"
                raise UsageError(msg, module="config") from e

            cls._instance = Settings(
                LOG_LEVEL=os.getenv("LOG_LEVEL", "INFO"),
                LRI_BEAM_OFFSET=beam_offset,
                LRI_WEIGHTS=os.getenv("LRI_WEIGHTS", "1,1,1,1"),
                LRI_WORKERS=workers,
            )
        return cls._instance

    @classmethod
    def get(cls) -> Settings:
        """Получение текущих настроек приложения.

        :return: Экземпляр настроек.
        """
        if cls._instance is None:
            return cls.init()
        return cls._instance

    @classmethod
    def reset(cls) -> None:
        cls._instance = None


def _check_beam_offset(beam_offset: float) -> None:
    if math.isnan(beam_offset) or beam_offset <= 0:
        msg = f"смещение луча должно быть положительным или inf: {beam_offset}"
        raise UsageError(msg)


@dataclass(frozen=True, slots=True)
class ParserConfig:
    """Параметры движка разбора.

    :param weights: Веса акустики, биграммы, просодии и грамматики
    :param beam_offset: Смещение луча от опорной оценки цикла
    :param prosody: Учитывать просодические переходы
    :param prediction: Фильтровать слова словесным предсказанием
    :param skeleton: Разбор без признаков (только категории)
    :param emission_seed: Зерно порядка выдачи гипотез внутри кадра (None - порядок решётки)
    """

    weights: ModelWeights = field(default_factory=ModelWeights)
    beam_offset: float = 8.0
    prosody: bool = True
    prediction: bool = False
    skeleton: bool = False
    emission_seed: int | None = None

    def __post_init__(self) -> None:
        _check_beam_offset(self.beam_offset)


@dataclass(frozen=True, slots=True)
class RunConfig:
    """Конфигурация запуска, собранная из флагов командной строки.

    Значения по умолчанию для весов, луча и числа рабочих берутся из
    :class:`Settings`.
    """

    grammar_path: Path
    lattice_paths: tuple[Path, ...]
    bigram_path: Path | None = None
    trigram_path: Path | None = None
    reference_path: Path | None = None
    weights: ModelWeights = field(default_factory=ModelWeights)
    beam_offset: float = 8.0
    prosody: bool = True
    prediction: bool = False
    skeleton: bool = False
    worker_count: int = 1
    output_format: OutputFormat = "text"
    strict: bool = False
    seed: int | None = None
    metrics_enabled: bool = True

    def __post_init__(self) -> None:
        _check_beam_offset(self.beam_offset)
        if any(weight < 0 for weight in self.weights.as_tuple()):
            msg = f"веса должны быть неотрицательными: {self.weights.as_tuple()}"
            raise UsageError(msg)
        if self.worker_count < 1:
            msg = f"число рабочих должно быть не меньше 1: {self.worker_count}"
            raise UsageError(msg)
        if not self.lattice_paths:
            msg = "не указана ни одна решётка"
            raise UsageError(msg)

    def parser_config(self) -> ParserConfig:
        """Часть конфигурации, относящаяся к движку."""
        return ParserConfig(
            weights=self.weights,
            beam_offset=self.beam_offset,
            prosody=self.prosody,
            prediction=self.prediction,
            skeleton=self.skeleton,
            emission_seed=self.seed,
        )

"""Модуль с записями оценок рёбер.

Содержит множество акустических оценок, индексированное конечным кадром,
запись внутренних и внешних оценок четырёх моделей и операции над ними.
"""

from collections.abc import Iterator
from dataclasses import dataclass, field
from typing import Self

from src.domain.exceptions import MissingFrameError
from src.domain.lattice_types import Frame, LogScore


@dataclass(slots=True)
class ScoreSet:
    """Отображение конечного кадра в логарифмическую оценку.

    Одно ребро с несколькими конечными вершинами ("семейство")
    хранит по одной акустической оценке на каждую вершину.
    """

    entries: dict[Frame, LogScore] = field(default_factory=dict)

    @classmethod
    def single(cls, frame: Frame, score: LogScore) -> Self:
        return cls({frame: score})

    def lookup(self, frame: Frame) -> LogScore:
        """Оценка для конечного кадра.

        :param frame: Конечный кадр
        :return: Сохранённая оценка
        :raises MissingFrameError: Если кадр отсутствует
        """
        try:
            return self.entries[frame]
        except KeyError:
            raise MissingFrameError(frame) from None

    def oplus(self, value: LogScore) -> "ScoreSet":
        return ScoreSet({frame: score + value for frame, score in self.entries.items()})

    def add(self, frame: Frame, score: LogScore) -> None:
        self.entries[frame] = score

    def best(self) -> LogScore:
        return max(self.entries.values())

    def copy(self) -> "ScoreSet":
        return ScoreSet(dict(self.entries))

    def __contains__(self, frame: object) -> bool:
        return frame in self.entries

    def __iter__(self) -> Iterator[Frame]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def oplus(scores: ScoreSet, value: LogScore) -> ScoreSet:
    """Прибавление числа к каждому элементу множества оценок.

    :param scores: Множество оценок
    :param value: Конечная логарифмическая оценка
    :return: Новое множество с тем же набором кадров
    """
    return scores.oplus(value)


def lookup(scores: ScoreSet, frame: Frame) -> LogScore:
    """Оценка множества для конечного кадра.

    :param scores: Множество оценок
    :param frame: Конечный кадр
    :return: Сохранённая оценка
    :raises MissingFrameError: Если кадр отсутствует
    """
    return scores.lookup(frame)


@dataclass(frozen=True, slots=True)
class ModelWeights:
    """Веса линейной комбинации оценок (акустика, биграмма, просодия, грамматика)."""

    acoustic: float = 1.0
    bigram: float = 1.0
    prosody: float = 1.0
    grammar: float = 1.0

    @classmethod
    def parse(cls, text: str) -> Self:
        """Разбор весов из строки вида ``a,b,p,g``.

        :param text: Строка из четырёх чисел через запятую
        :return: Веса
        :raises ValueError: Если чисел не четыре или среди них есть отрицательные
        """
        parts = [part.strip() for part in text.split(",")]
        if len(parts) != 4:  # noqa: PLR2004
            msg = f"ожидалось четыре веса, получено {len(parts)}: {text!r}"
            raise ValueError(msg)
        values = [float(part) for part in parts]
        if any(value < 0 for value in values):
            msg = f"веса должны быть неотрицательными: {text!r}"
            raise ValueError(msg)
        return cls(*values)

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.acoustic, self.bigram, self.prosody, self.grammar)


@dataclass(slots=True)
class ScoreRecord:
    """Внутренние и внешние оценки ребра для четырёх моделей.

    Внутренняя оценка относится к покрытому участку, внешняя -
    к лучшему префиксу от вершины 0 до конца ребра.
    """

    inside_acoustic: ScoreSet
    outside_acoustic: ScoreSet
    inside_bigram: LogScore = 0.0
    outside_bigram: LogScore = 0.0
    inside_prosody: LogScore = 0.0
    outside_prosody: LogScore = 0.0
    inside_grammar: LogScore = 0.0
    outside_grammar: LogScore = 0.0

    @classmethod
    def lexical(cls, frame: Frame, acoustic: LogScore, grammar: LogScore) -> Self:
        """Запись для лексического ребра: внутренние оценки равны внешним.

        :param frame: Конечный кадр гипотезы
        :param acoustic: Акустическая оценка гипотезы
        :param grammar: Грамматическая оценка лексической статьи
        :return: Запись оценок
        """
        return cls(
            inside_acoustic=ScoreSet.single(frame, acoustic),
            outside_acoustic=ScoreSet.single(frame, acoustic),
            inside_grammar=grammar,
            outside_grammar=grammar,
        )

    def inside_at(self, frame: Frame, weights: ModelWeights) -> LogScore:
        """Взвешенная внутренняя оценка для конечного кадра."""
        return (
            weights.acoustic * self.inside_acoustic.lookup(frame)
            + weights.bigram * self.inside_bigram
            + weights.prosody * self.inside_prosody
            + weights.grammar * self.inside_grammar
        )

    def outside_at(self, frame: Frame, weights: ModelWeights) -> LogScore:
        """Взвешенная внешняя оценка для конечного кадра."""
        return (
            weights.acoustic * self.outside_acoustic.lookup(frame)
            + weights.bigram * self.outside_bigram
            + weights.prosody * self.outside_prosody
            + weights.grammar * self.outside_grammar
        )

    def context_at(self, frame: Frame, weights: ModelWeights) -> LogScore:
        """Взвешенный контекст: разность внешней и внутренней оценок."""
        return self.outside_at(frame, weights) - self.inside_at(frame, weights)

    def adopt_inside(self, other: "ScoreRecord") -> None:
        """Замена внутренних оценок с сохранением текущего контекста.

        :param other: Запись с лучшими внутренними оценками
        """
        frame = next(iter(self.inside_acoustic))
        acoustic_context = self.outside_acoustic.lookup(frame) - self.inside_acoustic.lookup(frame)
        bigram_context = self.outside_bigram - self.inside_bigram
        prosody_context = self.outside_prosody - self.inside_prosody
        grammar_context = self.outside_grammar - self.inside_grammar
        self.inside_acoustic = other.inside_acoustic.copy()
        self.outside_acoustic = other.inside_acoustic.oplus(acoustic_context)
        self.inside_bigram = other.inside_bigram
        self.outside_bigram = other.inside_bigram + bigram_context
        self.inside_prosody = other.inside_prosody
        self.outside_prosody = other.inside_prosody + prosody_context
        self.inside_grammar = other.inside_grammar
        self.outside_grammar = other.inside_grammar + grammar_context

    def adopt_context(self, other: "ScoreRecord") -> None:
        """Замена контекста (внешней части) с сохранением внутренних оценок.

        :param other: Запись с лучшим контекстом
        """
        frame = next(iter(other.inside_acoustic))
        acoustic_context = other.outside_acoustic.lookup(frame) - other.inside_acoustic.lookup(frame)
        self.outside_acoustic = self.inside_acoustic.oplus(acoustic_context)
        self.outside_bigram = self.inside_bigram + (other.outside_bigram - other.inside_bigram)
        self.outside_prosody = self.inside_prosody + (other.outside_prosody - other.inside_prosody)
        self.outside_grammar = self.inside_grammar + (other.outside_grammar - other.inside_grammar)

    def copy(self) -> "ScoreRecord":
        return ScoreRecord(
            inside_acoustic=self.inside_acoustic.copy(),
            outside_acoustic=self.outside_acoustic.copy(),
            inside_bigram=self.inside_bigram,
            outside_bigram=self.outside_bigram,
            inside_prosody=self.inside_prosody,
            outside_prosody=self.outside_prosody,
            inside_grammar=self.inside_grammar,
            outside_grammar=self.outside_grammar,
        )

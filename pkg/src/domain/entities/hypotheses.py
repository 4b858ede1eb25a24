"""Модуль с гипотезами распознавателя.

Содержит словесные и просодические гипотезы и словарную решётку,
которую выдаёт декодер.
"""

import math
from dataclasses import dataclass, field

from src.domain.exceptions import FrameRangeError, OverlappingProsodyError, ProbabilityError
from src.domain.lattice_types import (
    BOUNDARY_CLASSES,
    BoundaryClass,
    Frame,
    LexicalKey,
    LogScore,
)

PROBABILITY_TOLERANCE = 1e-9


@dataclass(frozen=True, slots=True)
class WordHypothesis:
    """Словесная гипотеза (from, to, key, score).

    :param start: Начальный кадр
    :param end: Конечный кадр
    :param key: Лексический ключ
    :param score: Акустическая оценка (натуральный логарифм, не больше 0)
    """

    start: Frame
    end: Frame
    key: LexicalKey
    score: LogScore

    def __post_init__(self) -> None:
        if self.start < 0 or self.end <= self.start:
            msg = f"гипотеза {self.key}: требуется 0 <= from < to, получено {self.start}..{self.end}"
            raise FrameRangeError(msg)
        if not math.isfinite(self.score):
            msg = f"гипотеза {self.key}: оценка должна быть конечной"
            raise FrameRangeError(msg)

    def __str__(self) -> str:
        return f"{self.key}({self.start},{self.end},{self.score})"


@dataclass(frozen=True, slots=True)
class ProsodyHypothesis:
    """Просодическая гипотеза: интервал [from, to) и вероятности классов границ."""

    start: Frame
    end: Frame
    p_b0: float
    p_b2: float
    p_b3: float
    p_b9: float

    def __post_init__(self) -> None:
        if self.start < 0 or self.end <= self.start:
            msg = f"просодический интервал {self.start}..{self.end}: требуется from < to"
            raise FrameRangeError(msg, module="models")
        probabilities = self.probabilities()
        if any(p < 0 for p in probabilities.values()):
            msg = f"просодический интервал {self.start}..{self.end}: отрицательная вероятность"
            raise ProbabilityError("models", msg)
        if abs(sum(probabilities.values()) - 1.0) > PROBABILITY_TOLERANCE:
            msg = (
                f"просодический интервал {self.start}..{self.end}: "
                "вероятности классов должны суммироваться в 1"
            )
            raise ProbabilityError("models", msg)

    def probabilities(self) -> dict[BoundaryClass, float]:
        return dict(zip(BOUNDARY_CLASSES, (self.p_b0, self.p_b2, self.p_b3, self.p_b9), strict=True))

    def covers(self, frame: Frame) -> bool:
        return self.start <= frame < self.end


@dataclass(slots=True)
class Lattice:
    """Словарная решётка: выход распознавателя слов.

    Гипотезы упорядочены по конечному кадру; члены одного семейства
    (одинаковые from и key, последовательные to) идут подряд.
    """

    frame_count: Frame
    hypotheses: list[WordHypothesis] = field(default_factory=list)
    prosody_hypotheses: list[ProsodyHypothesis] = field(default_factory=list)
    name: str = ""

    def __post_init__(self) -> None:
        for hypothesis in self.hypotheses:
            if hypothesis.end > self.frame_count:
                msg = f"гипотеза {hypothesis} выходит за пределы {self.frame_count} кадров"
                raise FrameRangeError(msg)
        for interval in self.prosody_hypotheses:
            if interval.end > self.frame_count:
                msg = f"просодический интервал {interval.start}..{interval.end} вне решётки"
                raise FrameRangeError(msg)
        self.hypotheses.sort(key=lambda h: (h.end, h.start, h.key))
        self.prosody_hypotheses.sort(key=lambda p: (p.start, p.end))
        for previous, current in zip(self.prosody_hypotheses, self.prosody_hypotheses[1:], strict=False):
            if current.start < previous.end:
                msg = (
                    f"интервалы {previous.start}..{previous.end} и "
                    f"{current.start}..{current.end} перекрываются"
                )
                raise OverlappingProsodyError(msg, module="lattice")

    def keys(self) -> list[LexicalKey]:
        return sorted({h.key for h in self.hypotheses})

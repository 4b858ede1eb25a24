"""Модуль со статистическими моделями переходов.

Содержит биграммную модель слов, триграмму категорий с классом
просодической границы и просодические атрибуты вершин. Все модели
неизменяемы после загрузки.
"""

import math
from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Self

from src.domain.entities.hypotheses import ProsodyHypothesis
from src.domain.exceptions import OverlappingProsodyError
from src.domain.lattice_types import (
    BOUNDARY_CLASSES,
    LOG_FLOOR,
    BoundaryClass,
    Category,
    Frame,
    LexicalKey,
    LogScore,
)

if TYPE_CHECKING:
    from src.domain.entities.chart import Vertex

CATCH_ALL_CATEGORY: Category = "OTHER"


def safe_log(probability: float) -> LogScore:
    """Натуральный логарифм с нижней границей вместо минус бесконечности."""
    if probability <= 0.0:
        return LOG_FLOOR
    return max(math.log(probability), LOG_FLOOR)


@dataclass(frozen=True, slots=True)
class BigramModel:
    """Биграммная модель: оценка перехода от левого слова к правому."""

    scores: dict[tuple[LexicalKey, LexicalKey], LogScore] = field(default_factory=dict)
    default_score: LogScore = 0.0

    def trans(self, left: LexicalKey, right: LexicalKey) -> LogScore:
        return self.scores.get((left, right), self.default_score)


def bigram_trans(model: BigramModel, left: LexicalKey, right: LexicalKey) -> LogScore:
    """Переход от последнего слова левого ребра к первому слову правого.

    :param model: Биграммная модель
    :param left: Левое слово или маркер начала предложения
    :param right: Правое слово
    :return: Сохранённая оценка или оценка по умолчанию
    """
    return model.trans(left, right)


@dataclass(frozen=True, slots=True)
class CategoryTrigram:
    """Триграмма (категория слова, класс границы, категория слова)."""

    category_of: dict[LexicalKey, Category] = field(default_factory=dict)
    scores: dict[tuple[Category, BoundaryClass, Category], LogScore] = field(default_factory=dict)
    default_score: LogScore = 0.0

    def category(self, key: LexicalKey) -> Category:
        return self.category_of.get(key, CATCH_ALL_CATEGORY)

    def score(self, left: Category, boundary: BoundaryClass, right: Category) -> LogScore:
        return self.scores.get((left, boundary, right), self.default_score)


@dataclass(frozen=True, slots=True)
class ProsodyAttribute:
    """Логарифмы вероятностей классов границ, прикреплённые к вершине."""

    log_probs: dict[BoundaryClass, LogScore]

    @classmethod
    def neutral(cls) -> Self:
        return cls({boundary: (0.0 if boundary is BoundaryClass.B0 else LOG_FLOOR) for boundary in BOUNDARY_CLASSES})

    @classmethod
    def from_hypothesis(cls, hypothesis: ProsodyHypothesis) -> Self:
        return cls({boundary: safe_log(p) for boundary, p in hypothesis.probabilities().items()})

    def log_p(self, boundary: BoundaryClass) -> LogScore:
        return self.log_probs[boundary]


def prosody_trans(
    attribute: ProsodyAttribute,
    left: LexicalKey,
    right: LexicalKey,
    trigram: CategoryTrigram,
) -> LogScore:
    """Лучшая комбинация гипотезы границы и триграммной оценки.

    :param attribute: Просодический атрибут вершины на стыке
    :param left: Последнее слово левого ребра
    :param right: Первое слово правого ребра
    :param trigram: Триграмма категорий
    :return: Максимум по классам границ
    """
    left_category = trigram.category(left)
    right_category = trigram.category(right)
    return max(
        attribute.log_p(boundary) + trigram.score(left_category, boundary, right_category)
        for boundary in BOUNDARY_CLASSES
    )


def enclosing_interval(frame: Frame, hypotheses: Iterable[ProsodyHypothesis]) -> ProsodyHypothesis | None:
    """Единственный просодический интервал, содержащий кадр.

    :raises OverlappingProsodyError: Если кадр покрыт несколькими интервалами
    """
    covering = [hypothesis for hypothesis in hypotheses if hypothesis.covers(frame)]
    if len(covering) > 1:
        msg = f"кадр {frame} покрыт {len(covering)} просодическими интервалами"
        raise OverlappingProsodyError(msg)
    return covering[0] if covering else None


def attach_prosody(vertex: "Vertex", hypotheses: Iterable[ProsodyHypothesis]) -> "Vertex":
    """Прикрепление просодического атрибута к вершине.

    Вершина получает атрибут единственного содержащего её интервала,
    вне интервалов - нейтральный атрибут (B0 с вероятностью 1).

    :param vertex: Вершина графа
    :param hypotheses: Непересекающиеся просодические гипотезы
    :return: Та же вершина с установленным атрибутом
    :raises OverlappingProsodyError: Если интервалы перекрывают кадр вершины
    """
    interval = enclosing_interval(vertex.frame, hypotheses)
    vertex.prosody = ProsodyAttribute.from_hypothesis(interval) if interval else ProsodyAttribute.neutral()
    return vertex


@dataclass(frozen=True, slots=True)
class ScoringModels:
    """Модели переходов, используемые движком: биграмма и (необязательно) триграмма."""

    bigram: BigramModel = field(default_factory=BigramModel)
    trigram: CategoryTrigram | None = None

"""Пакет с миксинами движка разбора.

Каждый миксин реализует одну из базовых операций чарта; парсер
собирается из них множественным наследованием.
"""

from src.application.engine.mixins.base import (
    EngineBaseMixin,
    combined_score,
    transition_scores,
)
from src.application.engine.mixins.combination import CombinationMixin
from src.application.engine.mixins.insertion import InsertionMixin
from src.application.engine.mixins.prediction import PredictionMixin
from src.application.engine.mixins.scheduling import SchedulingMixin, make_result

__all__ = [
    "CombinationMixin",
    "EngineBaseMixin",
    "InsertionMixin",
    "PredictionMixin",
    "SchedulingMixin",
    "combined_score",
    "make_result",
    "transition_scores",
]

"""Модуль с определением базовых типов словарной решётки.

Содержит псевдонимы типов, маркеры и классы просодических границ,
общие для всех слоёв парсера.
"""

from enum import StrEnum

type Frame = int
type LexicalKey = str
type Category = str
type LogScore = float

SENTENCE_BEGIN: LexicalKey = "<s>"
GOAL_CATEGORY: Category = "GOAL"

# Логарифм нулевой вероятности, чтобы арифметика оставалась конечной.
LOG_FLOOR: LogScore = -1e9


class BoundaryClass(StrEnum):
    """Классы просодических границ.

    B0 - границы нет, B2 - граница фразы, B3 - граница предложения,
    B9 - настоящая пауза.
    """

    B0 = "B0"
    B2 = "B2"
    B3 = "B3"
    B9 = "B9"


BOUNDARY_CLASSES: tuple[BoundaryClass, ...] = (
    BoundaryClass.B0,
    BoundaryClass.B2,
    BoundaryClass.B3,
    BoundaryClass.B9,
)

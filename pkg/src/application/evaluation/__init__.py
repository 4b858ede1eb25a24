"""Пакет оценки: строгая пословная точность и статистика чарта."""

from src.application.evaluation.accuracy import (
    align,
    best_lattice_path,
    covered_string,
    standard_word_accuracy,
    strict_word_accuracy,
)
from src.application.evaluation.statistics import edge_stats, prosody_pruned_delta

__all__ = [
    "align",
    "best_lattice_path",
    "covered_string",
    "edge_stats",
    "prosody_pruned_delta",
    "standard_word_accuracy",
    "strict_word_accuracy",
]

"""Пакет сервисов приложения."""

from .benchmark import BenchmarkService
from .evaluation import EvaluationService
from .parsing import ParseInputs, ParsingService

__all__ = ["BenchmarkService", "EvaluationService", "ParseInputs", "ParsingService"]

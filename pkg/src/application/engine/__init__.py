"""Пакет движка разбора: агенда, базовые операции чарта и управляющий цикл."""

from src.application.engine.agenda import Agenda, AgendaItem, agenda_pop
from src.application.engine.parallel import (
    ParallelLatticeParser,
    WorkerConfig,
    collect_metrics,
    parallel_parse,
)
from src.application.engine.parser import LatticeParser, parse_lattice

__all__ = [
    "Agenda",
    "AgendaItem",
    "LatticeParser",
    "ParallelLatticeParser",
    "WorkerConfig",
    "agenda_pop",
    "collect_metrics",
    "parallel_parse",
    "parse_lattice",
]

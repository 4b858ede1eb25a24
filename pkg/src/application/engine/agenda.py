"""Модуль с агендой цикла разбора.

Агенда - хранилище пар (активное, пассивное ребро), упорядоченное по
комбинированной оценке. Порог луча - фиксированное смещение от опорной
оценки цикла: без опоры это максимум, внесённый в агенду за цикл, с
опорой - не меньшая его оценка лучшего пути решётки в слова цикла.
Порог проверяется и при вставке, и при извлечении, поэтому обработка
идёт строго в лучшем порядке внутри итогового луча.
"""

import heapq
import itertools
import math
from dataclasses import dataclass

from src.domain.entities.chart import Edge
from src.domain.lattice_types import LogScore


@dataclass(frozen=True, slots=True)
class AgendaItem:
    """Задание агенды: пара рёбер и её оценка на момент вставки."""

    active: Edge
    passive: Edge
    combined_score: LogScore


class Agenda:
    """Агенда одного цикла с лучевым отсечением."""

    def __init__(self, beam_offset: float = 8.0, reference: LogScore | None = None):
        """Инициализация агенды.

        :param beam_offset: Положительное смещение луча (``math.inf`` отключает луч)
        :param reference: Опорная оценка цикла; None - текущий максимум агенды
        """
        self.beam_offset = beam_offset
        self.reference = reference
        self.running_max: LogScore = -math.inf
        self.pushed = 0
        self.processed = 0
        self.pruned = 0
        self._heap: list[tuple[LogScore, int, AgendaItem]] = []
        self._sequence = itertools.count()

    @property
    def threshold(self) -> LogScore:
        if math.isinf(self.beam_offset):
            return -math.inf
        anchor = self.running_max if self.reference is None else self.reference
        return anchor - self.beam_offset

    def push(self, item: AgendaItem) -> bool:
        """Вставка задания; максимум обновляется до проверки порога.

        :param item: Задание
        :return: True, если задание осталось в луче
        """
        self.pushed += 1
        self.running_max = max(self.running_max, item.combined_score)
        if item.combined_score > self.threshold:
            heapq.heappush(self._heap, (-item.combined_score, next(self._sequence), item))
            return True
        self.pruned += 1
        return False

    def pop(self) -> AgendaItem | None:
        """Извлечение лучшего задания; задания ниже текущего порога отбрасываются.

        :return: Задание или None, если агенда исчерпана
        """
        while self._heap:
            _, _, item = heapq.heappop(self._heap)
            if item.combined_score > self.threshold:
                self.processed += 1
                return item
            self.pruned += 1
        return None

    def __len__(self) -> int:
        return len(self._heap)

    def __bool__(self) -> bool:
        return bool(self._heap)


def agenda_pop(agenda: Agenda) -> AgendaItem | None:
    """Agenda-Pop: лучшее задание в луче или None."""
    return agenda.pop()

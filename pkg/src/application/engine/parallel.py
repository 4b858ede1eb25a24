"""Модуль с параллельным режимом разбора.

Рабочие потоки разделяют один чарт и одну агенду. Извлечение заданий
и все записи в чарт выполняются в критической секции; быстрая проверка
и унификация признаков идут вне её на частных копиях структур.
"""

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from threading import Condition

import numpy as np

from src.application.engine.agenda import AgendaItem, agenda_pop
from src.application.engine.mixins.base import ResultSink
from src.application.engine.parser import LatticeParser
from src.config import ParserConfig
from src.domain.entities.grammar import Grammar
from src.domain.entities.hypotheses import Lattice
from src.domain.entities.models import ScoringModels
from src.domain.entities.results import ParallelMetrics, ParseResultSet
from src.domain.exceptions import UsageError
from src.infrastructure.logging.logger import logger

HISTOGRAM_BINS = 10


@dataclass(frozen=True, slots=True)
class WorkerConfig:
    """Параметры пула рабочих.

    :param worker_count: Число рабочих потоков (1 - вырожденный последовательный режим)
    :param task_batch: Сколько заданий рабочий забирает из агенды за раз
    :param metrics_enabled: Собирать метрики прогона
    """

    worker_count: int = 2
    task_batch: int = 1
    metrics_enabled: bool = True

    def __post_init__(self) -> None:
        if self.worker_count < 1:
            msg = f"число рабочих должно быть не меньше 1: {self.worker_count}"
            raise UsageError(msg, module="parallel")
        if self.task_batch < 1:
            msg = f"размер пакета заданий должен быть не меньше 1: {self.task_batch}"
            raise UsageError(msg, module="parallel")


@dataclass(slots=True)
class WorkerLedger:
    """Учёт одного рабочего: задания, их длительности, унификация и простой."""

    tasks: int = 0
    idle: float = 0.0
    unification: float = 0.0
    durations: list[float] = field(default_factory=list)


class ParallelLatticeParser(LatticeParser):
    """Парсер, обрабатывающий агенду цикла пулом рабочих потоков.

    Цикл завершается, когда агенда пуста и ни один рабочий не занят.
    """

    def __init__(
        self,
        grammar: Grammar,
        models: ScoringModels | None = None,
        config: ParserConfig | None = None,
        sink: ResultSink | None = None,
        workers: WorkerConfig | None = None,
    ):
        self.workers = workers or WorkerConfig()
        self._condition = Condition()
        self._busy = 0
        self._pool: ThreadPoolExecutor | None = None
        super().__init__(grammar, models, config, sink)

    def reset(self) -> None:
        super().reset()
        self._busy = 0
        self.ledgers = [WorkerLedger() for _ in range(self.workers.worker_count)]

    def parse_lattice(self, lattice: Lattice) -> ParseResultSet:
        logger.info(f"Запуск {self.workers.worker_count} рабочих для решётки {lattice.name or '<без имени>'}")
        with ThreadPoolExecutor(
            max_workers=self.workers.worker_count,
            thread_name_prefix="lri-worker",
        ) as pool:
            self._pool = pool
            try:
                return super().parse_lattice(lattice)
            finally:
                self._pool = None
                logger.info("Рабочие остановлены")

    def drain(self) -> None:
        """Обработка агенды цикла пулом рабочих."""
        if self._pool is None:
            self._work(0)
            return
        futures = [self._pool.submit(self._work, index) for index in range(self.workers.worker_count)]
        for future in futures:
            future.result()

    def _take(self, ledger: WorkerLedger) -> list[AgendaItem] | None:
        """Извлечение пакета заданий; None означает конец цикла для рабочего."""
        with self._condition:
            while True:
                waiting_since = time.perf_counter()
                while not self.agenda and self._busy > 0:
                    self._condition.wait()
                ledger.idle += time.perf_counter() - waiting_since

                batch: list[AgendaItem] = []
                while len(batch) < self.workers.task_batch:
                    item = agenda_pop(self.agenda)
                    if item is None:
                        break
                    batch.append(item)
                if batch:
                    self._busy += 1
                    self.counters.combinations += len(batch)
                    return batch
                if self._busy == 0:
                    self._condition.notify_all()
                    return None

    def _work(self, index: int) -> None:
        ledger = self.ledgers[index]
        while (batch := self._take(ledger)) is not None:
            try:
                for item in batch:
                    began = time.perf_counter()
                    joinable = self.joinable(item.active, item.passive)
                    checked = joinable and self.passes_quick_check(item.active, item.passive)
                    unified, features = self.unify_pair(item.active, item.passive) if checked else (False, None)
                    unification_done = time.perf_counter()
                    with self._condition:
                        if unified:
                            self._add_edge(self.build_combined(item.active, item.passive, features))
                            self._condition.notify_all()
                        elif checked:
                            self.counters.unification_failures += 1
                        elif joinable:
                            self.counters.quick_check_rejections += 1
                    ledger.unification += unification_done - began
                    ledger.durations.append(time.perf_counter() - began)
                    ledger.tasks += 1
            finally:
                with self._condition:
                    self._busy -= 1
                    self._condition.notify_all()


def gain_percent(sequential_time: float, parallel_time: float) -> float:
    """Выигрыш параллельного прогона в процентах; отрицательный - проигрыш."""
    if sequential_time <= 0:
        return 0.0
    return (sequential_time - parallel_time) / sequential_time * 100.0


def collect_metrics(
    parser: ParallelLatticeParser,
    parallel_time: float,
    sequential_time: float = 0.0,
    name: str = "",
) -> ParallelMetrics:
    """Метрики прогона: нагрузка рабочих, гистограмма длительностей, выигрыш.

    :param parser: Парсер после завершения прогона
    :param parallel_time: Время параллельного прогона (секунды)
    :param sequential_time: Время последовательного прогона той же решётки
    :param name: Имя решётки
    :return: Метрики
    """
    durations = np.array([duration for ledger in parser.ledgers for duration in ledger.durations], dtype=float)
    if durations.size:
        histogram, bin_edges = np.histogram(durations, bins=HISTOGRAM_BINS)
        task_time = float(durations.sum())
    else:
        histogram, bin_edges = np.zeros(0, dtype=int), np.zeros(0)
        task_time = 0.0
    unification_time = sum(ledger.unification for ledger in parser.ledgers)
    return ParallelMetrics(
        worker_task_counts=[ledger.tasks for ledger in parser.ledgers],
        duration_histogram=[int(count) for count in histogram],
        histogram_edges=[float(edge) for edge in bin_edges],
        unification_share=unification_time / task_time if task_time > 0 else 0.0,
        idle_time=[ledger.idle for ledger in parser.ledgers],
        sequential_time=sequential_time,
        parallel_time=parallel_time,
        gain_percent=gain_percent(sequential_time, parallel_time),
        name=name,
    )


def parallel_parse(
    lattice: Lattice,
    grammar: Grammar,
    models: ScoringModels | None = None,
    config: ParserConfig | None = None,
    workers: WorkerConfig | None = None,
    sequential_time: float = 0.0,
) -> tuple[ParseResultSet, ParallelMetrics | None]:
    """Разбор решётки пулом рабочих.

    :return: Набор результатов и метрики (None, если метрики отключены)
    """
    parser = ParallelLatticeParser(grammar, models, config, workers=workers)
    started = time.perf_counter()
    result_set = parser.parse_lattice(lattice)
    elapsed = time.perf_counter() - started
    if not parser.workers.metrics_enabled:
        return result_set, None
    return result_set, collect_metrics(parser, elapsed, sequential_time, lattice.name)

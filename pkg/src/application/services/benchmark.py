"""Сервис сравнения последовательного и параллельного разбора."""

import time

from src.application.engine import WorkerConfig, parallel_parse, parse_lattice
from src.application.services.parsing import ParsingService
from src.config import RunConfig
from src.domain.entities.results import ParallelMetrics, ParseResultSet
from src.domain.exceptions import UsageError
from src.infrastructure.logging.logger import logger
from src.infrastructure.reports import Report

MIN_BENCH_WORKERS = 2


class BenchmarkService:
    """Сервис замеров: выигрыш или проигрыш пула рабочих по каждой решётке."""

    def __init__(self, parsing_service: ParsingService):
        self._parsing = parsing_service

    def measure(self, config: RunConfig) -> list[tuple[ParallelMetrics, bool]]:
        """Замер всех решёток.

        :param config: Конфигурация запуска (не меньше двух рабочих, метрики включены)
        :return: Метрики и признак совпадения лучшего результата с последовательным
        :raises UsageError: Меньше двух рабочих или метрики отключены
        """
        if config.worker_count < MIN_BENCH_WORKERS:
            msg = f"для замера нужно не меньше {MIN_BENCH_WORKERS} рабочих: {config.worker_count}"
            raise UsageError(msg)
        if not config.metrics_enabled:
            msg = "замер без метрик бессмыслен"
            raise UsageError(msg)

        inputs = self._parsing.load_inputs(config)
        parser_config = config.parser_config()
        workers = WorkerConfig(worker_count=config.worker_count)
        rows: list[tuple[ParallelMetrics, bool]] = []
        for lattice in inputs.lattices:
            started = time.perf_counter()
            sequential = parse_lattice(lattice, inputs.grammar, inputs.models, parser_config)
            sequential_time = time.perf_counter() - started
            parallel, metrics = parallel_parse(
                lattice,
                inputs.grammar,
                inputs.models,
                parser_config,
                workers,
                sequential_time,
            )
            if metrics is None:
                continue
            same_best = _best_score(sequential) == _best_score(parallel)
            logger.info(f"Замер {lattice.name}: выигрыш {metrics.gain_percent:.1f}%")
            rows.append((metrics, same_best))
        return rows

    def run(self, config: RunConfig) -> Report:
        """Команда ``bench``: таблица выигрыша/проигрыша в процентах."""
        report = Report(command="bench")
        for metrics, same_best in self.measure(config):
            report.utterances.append(
                {
                    "lattice": metrics.name,
                    "workers": config.worker_count,
                    "tasks": metrics.total_tasks,
                    "worker_tasks": metrics.worker_task_counts,
                    "duration_histogram": metrics.duration_histogram,
                    "unification_share": metrics.unification_share,
                    "same_best": same_best,
                },
            )
            report.timing[f"{metrics.name}.sequential_seconds"] = metrics.sequential_time
            report.timing[f"{metrics.name}.parallel_seconds"] = metrics.parallel_time
            report.timing[f"{metrics.name}.gain_percent"] = metrics.gain_percent
        report.aggregate = {"lattices": len(report.utterances), "workers": config.worker_count}
        return report


def _best_score(result_set: ParseResultSet) -> float | None:
    return None if result_set.best is None else result_set.best.score

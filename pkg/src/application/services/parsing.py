"""Сервис разбора решёток.

Загружает грамматику, модели и решётки, запускает последовательный
или параллельный разбор и собирает отчёт команды ``parse``.
"""

from dataclasses import dataclass
from typing import cast

from src.application.engine import WorkerConfig, parallel_parse, parse_lattice
from src.config import ParserConfig, RunConfig
from src.domain.entities.grammar import Grammar
from src.domain.entities.hypotheses import Lattice
from src.domain.entities.models import BigramModel, CategoryTrigram, ScoringModels
from src.domain.entities.results import ParseResultSet
from src.domain.exceptions import EmptyResultError
from src.infrastructure.logging.logger import logger
from src.infrastructure.readers import ReaderFactory
from src.infrastructure.reports import Report
from src.infrastructure.reports.writer import ReportBlock


@dataclass(slots=True)
class ParseInputs:
    """Загруженные входные данные прогона."""

    grammar: Grammar
    models: ScoringModels
    lattices: list[Lattice]


class ParsingService:
    """Сервис для разбора решёток по конфигурации запуска."""

    def __init__(self, reader_factory: ReaderFactory):
        """Инициализация сервиса разбора.

        :param reader_factory: Фабрика читателей файловых форматов
        """
        self._readers = reader_factory

    def load_inputs(self, config: RunConfig) -> ParseInputs:
        """Чтение грамматики, моделей и решёток.

        :param config: Конфигурация запуска
        :return: Загруженные входные данные
        """
        grammar = cast("Grammar", self._readers.read("grammar", config.grammar_path))
        bigram = BigramModel()
        if config.bigram_path is not None:
            bigram = cast("BigramModel", self._readers.read("bigram", config.bigram_path))
        trigram = None
        if config.trigram_path is not None:
            trigram = cast("CategoryTrigram", self._readers.read("trigram", config.trigram_path))
        lattices = [cast("Lattice", self._readers.read("lattice", path)) for path in config.lattice_paths]
        return ParseInputs(grammar=grammar, models=ScoringModels(bigram=bigram, trigram=trigram), lattices=lattices)

    def parse_one(
        self,
        lattice: Lattice,
        inputs: ParseInputs,
        parser_config: ParserConfig,
        worker_count: int = 1,
    ) -> ParseResultSet:
        """Разбор одной решётки; при нескольких рабочих - параллельно."""
        if worker_count > 1:
            result_set, _ = parallel_parse(
                lattice,
                inputs.grammar,
                inputs.models,
                parser_config,
                WorkerConfig(worker_count=worker_count, metrics_enabled=False),
            )
            return result_set
        return parse_lattice(lattice, inputs.grammar, inputs.models, parser_config)

    def parse_all(self, config: RunConfig, inputs: ParseInputs | None = None) -> list[ParseResultSet]:
        inputs = inputs or self.load_inputs(config)
        parser_config = config.parser_config()
        return [
            self.parse_one(lattice, inputs, parser_config, config.worker_count) for lattice in inputs.lattices
        ]

    def run(self, config: RunConfig) -> Report:
        """Команда ``parse``: разбор всех решёток и отчёт.

        :param config: Конфигурация запуска
        :return: Отчёт с блоком на каждую решётку
        :raises EmptyResultError: В строгом режиме, если у решётки нет результата
        """
        result_sets = self.parse_all(config)
        report = Report(command="parse")
        for result_set in result_sets:
            if config.strict and result_set.best is None:
                logger.error(f"Решётка {result_set.lattice_name}: нет ни одного результата")
                raise EmptyResultError
            report.utterances.append(utterance_block(result_set))
            report.timing[f"{result_set.lattice_name}.parse_seconds"] = result_set.timing.get("parse_seconds", 0.0)
        report.aggregate = {
            "lattices": len(result_sets),
            "spanning": sum(1 for result_set in result_sets if result_set.best and not result_set.partial),
            "partial": sum(1 for result_set in result_sets if result_set.partial),
            "empty": sum(1 for result_set in result_sets if result_set.best is None),
            "beam_offset": config.beam_offset,
            "prosody": config.prosody,
            "prediction": config.prediction,
            "skeleton": config.skeleton,
            "workers": config.worker_count,
            "seed": config.seed,
        }
        report.timing["total_seconds"] = sum(report.timing.values())
        return report


def utterance_block(result_set: ParseResultSet) -> ReportBlock:
    """Блок отчёта по одной решётке: лучший результат, оценки, статистика рёбер."""
    best = result_set.best
    block: ReportBlock = {
        "lattice": result_set.lattice_name,
        "frames": result_set.frame_count,
        "best": " ".join(best.words) if best else None,
        "partial": result_set.partial,
        "results": len(result_set.results),
        "spanning_results": len(result_set.spanning_results),
    }
    if best is not None:
        block |= {
            "category": best.category,
            "span": f"{best.start}-{best.end}",
            "score": best.score,
            "acoustic": best.acoustic,
            "bigram": best.bigram,
            "prosody": best.prosody,
            "grammar": best.grammar,
            "tree": best.tree,
        }
    block |= {
        "edges_total": result_set.stats.total,
        "edges_passive": result_set.stats.passive,
        "edges_per_category": result_set.stats.per_category,
    }
    block |= result_set.counters.as_dict()
    return block

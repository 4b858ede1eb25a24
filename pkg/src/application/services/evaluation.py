"""Сервис оценки точности по эталонным транскрипциям.

Для каждой решётки считает строгую точность (по словам, встроенным в
разбор), стандартную точность по лучшему пути решётки и, если есть
триграмма, сокращение числа рёбер за счёт просодии.
"""

import dataclasses
from statistics import fmean
from typing import cast

from src.application.evaluation import (
    covered_string,
    prosody_pruned_delta,
    standard_word_accuracy,
    strict_word_accuracy,
)
from src.application.services.parsing import ParseInputs, ParsingService
from src.config import RunConfig
from src.domain.entities.hypotheses import Lattice
from src.domain.entities.results import EvalReport, ParseResultSet
from src.domain.exceptions import EmptyResultError, ReferenceCountError, UsageError
from src.domain.lattice_types import LexicalKey
from src.infrastructure.logging.logger import logger
from src.infrastructure.readers import ReaderFactory
from src.infrastructure.reports import Report
from src.infrastructure.reports.writer import ReportBlock


class EvaluationService:
    """Сервис строгой и стандартной пословной точности."""

    def __init__(self, parsing_service: ParsingService, reader_factory: ReaderFactory):
        self._parsing = parsing_service
        self._readers = reader_factory

    def load_references(self, config: RunConfig, lattice_count: int) -> list[tuple[LexicalKey, ...]]:
        """Эталоны по одному на решётку.

        :raises UsageError: Не указан файл эталонов
        :raises ReferenceCountError: Число эталонов не совпадает с числом решёток
        """
        if config.reference_path is None:
            msg = "для оценки нужен файл эталонов --ref"
            raise UsageError(msg)
        references = cast("list[tuple[LexicalKey, ...]]", self._readers.read("reference", config.reference_path))
        if len(references) != lattice_count:
            raise ReferenceCountError(lattice_count, len(references))
        return references

    def evaluate_one(
        self,
        lattice: Lattice,
        reference: tuple[LexicalKey, ...],
        inputs: ParseInputs,
        config: RunConfig,
    ) -> EvalReport:
        """Оценка одной решётки.

        Решётка без единого результата оценивается как пустое покрытие:
        все слова эталона становятся удалениями.
        """
        parser_config = config.parser_config()
        result_set = self._parsing.parse_one(lattice, inputs, parser_config, config.worker_count)
        covered = self._covered(result_set)
        report = strict_word_accuracy(reference, covered)
        standard, standard_words = standard_word_accuracy(reference, lattice, inputs.models.bigram, config.weights)

        delta = None
        if config.prosody and inputs.models.trigram is not None:
            without = self._parsing.parse_one(
                lattice,
                inputs,
                dataclasses.replace(parser_config, prosody=False),
                config.worker_count,
            )
            delta = prosody_pruned_delta(result_set.stats, without.stats)

        return dataclasses.replace(
            report,
            edge_count_total=result_set.stats.total,
            edge_count_passive=result_set.stats.passive,
            prosody_pruned_delta=delta,
            standard_word_accuracy=standard,
            standard_words=standard_words,
            name=lattice.name,
        )

    @staticmethod
    def _covered(result_set: ParseResultSet) -> tuple[LexicalKey, ...]:
        try:
            return covered_string(result_set)
        except EmptyResultError:
            logger.warning(f"Решётка {result_set.lattice_name}: нет результата, покрытие пусто")
            return ()

    def evaluate(self, config: RunConfig) -> list[EvalReport]:
        inputs = self._parsing.load_inputs(config)
        references = self.load_references(config, len(inputs.lattices))
        return [
            self.evaluate_one(lattice, reference, inputs, config)
            for lattice, reference in zip(inputs.lattices, references, strict=True)
        ]

    def run(self, config: RunConfig) -> Report:
        """Команда ``eval``: построчный и общий отчёт точности."""
        reports = self.evaluate(config)
        report = Report(command="eval")
        report.utterances = [eval_block(item) for item in reports]
        report.aggregate = aggregate_block(reports)
        return report


def eval_block(report: EvalReport) -> ReportBlock:
    return {
        "lattice": report.name,
        "reference": " ".join(report.reference),
        "covered": " ".join(report.covered_words) or None,
        "n_ref": report.n_ref,
        "substitutions": report.substitutions,
        "deletions": report.deletions,
        "insertions": report.insertions,
        "word_accuracy": report.word_accuracy,
        "standard_words": " ".join(report.standard_words) or None,
        "standard_word_accuracy": report.standard_word_accuracy,
        "edges_total": report.edge_count_total,
        "edges_passive": report.edge_count_passive,
        "prosody_pruned_delta": report.prosody_pruned_delta,
    }


def aggregate_block(reports: list[EvalReport]) -> ReportBlock:
    """Общий блок: средние по высказываниям и точность по корпусу в целом."""
    if not reports:
        return {"utterances": 0}
    n_ref = sum(report.n_ref for report in reports)
    errors = sum(report.substitutions + report.deletions + report.insertions for report in reports)
    deltas = [report.prosody_pruned_delta for report in reports if report.prosody_pruned_delta is not None]
    standard = [report.standard_word_accuracy for report in reports if report.standard_word_accuracy is not None]
    return {
        "utterances": len(reports),
        "n_ref": n_ref,
        "mean_word_accuracy": fmean(report.word_accuracy for report in reports),
        "corpus_word_accuracy": 1.0 - errors / n_ref,
        "mean_standard_word_accuracy": fmean(standard) if standard else None,
        "mean_prosody_pruned_delta": fmean(deltas) if deltas else None,
    }

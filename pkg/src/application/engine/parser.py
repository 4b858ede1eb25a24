"""Модуль с лево-правым инкрементным парсером словарных решёток.

Парсер синхронен по времени: в цикле ``t`` создаётся вершина ``V_t``,
вставляются гипотезы, оканчивающиеся в ``t``, и агенда цикла
обрабатывается до исчерпания. Результаты выдаются получателю сразу,
как только они найдены.
"""

import time
from collections.abc import Iterable

from src.application.decoder.emission import EmissionStream
from src.application.engine.agenda import Agenda, AgendaItem, agenda_pop
from src.application.engine.mixins import (
    CombinationMixin,
    InsertionMixin,
    PredictionMixin,
    SchedulingMixin,
    make_result,
)
from src.application.engine.mixins.base import ResultSink
from src.application.evaluation.statistics import edge_stats
from src.config import ParserConfig
from src.domain.entities.chart import Edge
from src.domain.entities.grammar import Grammar, predict_words
from src.domain.entities.hypotheses import Lattice, ProsodyHypothesis, WordHypothesis
from src.domain.entities.models import ScoringModels, attach_prosody
from src.domain.entities.results import ParseResult, ParseResultSet
from src.domain.entities.scores import ScoreRecord, ScoreSet
from src.domain.exceptions import EmptyLatticeError, UnknownWordError
from src.domain.lattice_types import SENTENCE_BEGIN, Frame
from src.infrastructure.logging.logger import logger


class LatticeParser(
    SchedulingMixin,
    CombinationMixin,
    PredictionMixin,
    InsertionMixin,
):
    """Активный чарт-парсер с агендой и лучевым поиском.

    Последовательный режим: один изменяющий поток.
    """

    def start(self, prosody: Iterable[ProsodyHypothesis] = ()) -> Edge:
        """Цикл 0: вершина ``V_0``, начальное ребро GOAL -> . S и его предсказания.

        :param prosody: Просодические интервалы, начинающиеся в кадре 0
        :return: Начальное ребро
        """
        self.reset()
        self._prosody_intervals.extend(prosody)
        origin = attach_prosody(self.chart.create_vertex(0), self._prosody_intervals)
        goal_rule = self.grammar.goal_rule
        initial = Edge(
            id=self.chart.new_id(),
            rule=goal_rule,
            dot=0,
            start=origin,
            to=[origin],
            words=(),
            left_context=SENTENCE_BEGIN,
            scores=ScoreRecord(
                inside_acoustic=ScoreSet.single(0, 0.0),
                outside_acoustic=ScoreSet.single(0, 0.0),
            ),
            features=None if self.config.skeleton else goal_rule.template,
        )
        self.chart.initial_edge = initial
        self.chart.register(initial)
        self.frontier.add(self.grammar.start_category)
        self.seek_down(initial, origin)
        return initial

    def run_cycle(
        self,
        frame: Frame,
        words: Iterable[WordHypothesis],
        prosody: Iterable[ProsodyHypothesis] = (),
    ) -> list[ParseResult]:
        """Один цикл разбора.

        :param frame: Номер кадра (следующий по порядку)
        :param words: Гипотезы, оканчивающиеся в ``frame``
        :param prosody: Просодические интервалы, начинающиеся в ``frame``
        :return: Результаты, найденные в этом цикле
        :raises UnknownWordError: Если слова нет в лексиконе
        """
        self.counters.cycles += 1
        self._prosody_intervals.extend(prosody)
        attach_prosody(self.chart.create_vertex(frame), self._prosody_intervals)
        words = list(words)
        self.agenda = Agenda(self.config.beam_offset, self.beam_reference(words))
        reported_before = len(self._reported)

        for word in words:
            if self.chart.family_predecessor(word.start, word.key, frame - 1) is None:
                self.insert(word)
            else:
                self.inherit(word)
        self.drain()
        self._collect_agenda_counters()

        found = self._reported[reported_before:]
        logger.debug(
            f"Цикл {frame}: рёбер {len(self.chart.edges)}, "
            f"отсечено {self.agenda.pruned}, результатов {len(found)}",
        )
        return [make_result(edge, edge.actual.frame, self.weights) for edge in found]

    def drain(self) -> None:
        """Обработка агенды цикла до исчерпания."""
        while (item := agenda_pop(self.agenda)) is not None:
            self.process(item)

    def process(self, item: AgendaItem) -> Edge | None:
        """Комбинация пары агенды и вставка результата в чарт."""
        self.counters.combinations += 1
        edge = self.combine(item.active, item.passive)
        if edge is None:
            return None
        return self._add_edge(edge)

    def _collect_agenda_counters(self) -> None:
        self.counters.pushed += self.agenda.pushed
        self.counters.processed += self.agenda.processed
        self.counters.pruned += self.agenda.pruned

    def check_lexicon(self, lattice: Lattice) -> None:
        """Проверка, что все ключи решётки есть в лексиконе.

        :raises UnknownWordError: Для первого неизвестного ключа
        """
        for key in lattice.keys():
            if self.grammar.lex(key) is None:
                raise UnknownWordError(key)

    def parse_lattice(self, lattice: Lattice) -> ParseResultSet:
        """Полный разбор решётки кадр за кадром.

        :param lattice: Проверенная решётка
        :return: Все выданные результаты, лучший результат и статистика чарта
        :raises EmptyLatticeError: Если в решётке нет гипотез
        :raises UnknownWordError: Если слова нет в лексиконе
        """
        if not lattice.hypotheses:
            raise EmptyLatticeError
        self.check_lexicon(lattice)
        started = time.perf_counter()
        stream = EmissionStream(lattice, self.config.emission_seed)
        self.start(stream.prosody_at(0))
        self._update_prediction(stream)
        for frame in range(1, lattice.frame_count + 1):
            self.run_cycle(frame, stream.emit_frame(frame), stream.prosody_at(frame))
            self._update_prediction(stream)
        elapsed = time.perf_counter() - started
        result_set = self.collect(lattice)
        result_set.timing["parse_seconds"] = elapsed
        logger.info(
            f"Решётка {lattice.name or '<без имени>'} разобрана: "
            f"результатов {len(result_set.results)}, рёбер {result_set.stats.total}",
        )
        return result_set

    def _update_prediction(self, stream: EmissionStream) -> None:
        if self.config.prediction:
            stream.set_prediction(predict_words(self.grammar, self.frontier))

    def collect(self, lattice: Lattice) -> ParseResultSet:
        """Сборка итогового набора результатов по текущему состоянию чарта."""
        last = lattice.frame_count
        results: list[ParseResult] = []
        for edge in self._reported:
            spanning = last in edge.scores.inside_acoustic
            end = last if spanning else edge.actual.frame
            results.append(make_result(edge, end, self.weights, spanning=spanning))

        spanning_results = [result for result in results if result.spanning]
        best = max(spanning_results, key=lambda result: result.score) if spanning_results else None
        partial = False
        if best is None:
            best = self.best_prefix()
            partial = best is not None

        return ParseResultSet(
            lattice_name=lattice.name,
            frame_count=last,
            results=results,
            best=best,
            partial=partial,
            stats=edge_stats(self.chart),
            counters=self.counters,
            chart=self.chart,
        )

    def best_prefix(self) -> ParseResult | None:
        """Лучший префикс: самое длинное пассивное ребро от вершины 0.

        Предпочитается стартовая категория, затем любая; при равной
        длине - лучшая взвешенная внутренняя оценка.
        """
        if not self.chart.vertices:
            return None
        passives = self.chart.vertex(0).inactive_out
        start_category = [edge for edge in passives if edge.cat == self.grammar.start_category]
        candidates = start_category or passives
        if not candidates:
            return None
        best = max(
            candidates,
            key=lambda edge: (edge.actual.frame, edge.scores.inside_at(edge.actual.frame, self.weights)),
        )
        return make_result(best, best.actual.frame, self.weights, partial=True)


def parse_lattice(
    lattice: Lattice,
    grammar: Grammar,
    models: ScoringModels | None = None,
    config: ParserConfig | None = None,
    sink: ResultSink | None = None,
) -> ParseResultSet:
    """Последовательный разбор решётки новым парсером."""
    return LatticeParser(grammar, models, config, sink).parse_lattice(lattice)

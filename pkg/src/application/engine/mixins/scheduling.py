"""Модуль с миксином вставки рёбер в чарт и наполнения агенды.

Содержит Agenda-Push, политику дубликатов с распространением улучшений
и выдачу результатов получателю.
"""

from src.application.engine.agenda import AgendaItem
from src.application.engine.mixins.base import SCORE_EPSILON, EngineBaseMixin
from src.domain.entities.chart import Edge
from src.domain.entities.results import ParseResult
from src.domain.entities.scores import ModelWeights
from src.domain.lattice_types import Frame


def make_result(
    edge: Edge,
    end: Frame,
    weights: ModelWeights,
    *,
    spanning: bool = False,
    partial: bool = False,
) -> ParseResult:
    """Результат разбора по пассивному ребру и одному из его концов."""
    scores = edge.scores
    return ParseResult(
        category=edge.cat,
        start=edge.start.frame,
        end=end,
        words=edge.words,
        tree=edge.tree(),
        score=scores.inside_at(end, weights),
        acoustic=scores.inside_acoustic.lookup(end),
        bigram=scores.inside_bigram,
        prosody=scores.inside_prosody,
        grammar=scores.inside_grammar,
        spanning=spanning,
        partial=partial,
    )


class SchedulingMixin(EngineBaseMixin):
    """Миксин вставки рёбер и операции Agenda-Push."""

    def _add_edge(self, edge: Edge, *, predicted: bool = False) -> Edge | None:
        """Вставка ребра в чарт или слияние с дубликатом.

        Улучшение существующего ребра повторяет Agenda-Push (и Seek Down
        для активного), чтобы улучшение дошло до всех производных рёбер.

        :param edge: Новое ребро
        :param predicted: Ребро создано Seek Down
        :return: Вставленное ребро или None, если оно слито с дубликатом
        """
        incumbent = None if edge.is_lexical else self.chart.find_duplicate(edge)
        if incumbent is None:
            self.chart.register(edge)
            if edge.next is not None:
                self.frontier.add(edge.next)
            self._propagate(edge, predicted=predicted)
            return edge
        self.counters.merges += 1
        if self._merge(incumbent, edge):
            self._propagate(incumbent, predicted=predicted)
        return None

    def _merge(self, incumbent: Edge, candidate: Edge) -> bool:
        """Слияние дубликата: лучшие внутренние оценки и лучший контекст.

        При равенстве сохраняется существующее ребро.

        :return: Было ли улучшение
        """
        weights = self.weights
        incumbent_frame = incumbent.actual.frame
        candidate_frame = candidate.actual.frame
        improved = False
        same_ends = set(candidate.scores.inside_acoustic) == set(incumbent.scores.inside_acoustic)
        if same_ends and (
            candidate.scores.inside_at(incumbent_frame, weights)
            > incumbent.scores.inside_at(incumbent_frame, weights) + SCORE_EPSILON
        ):
            incumbent.scores.adopt_inside(candidate.scores)
            incumbent.words = candidate.words
            incumbent.children = candidate.children
            improved = True
        if (
            candidate.scores.context_at(candidate_frame, weights)
            > incumbent.scores.context_at(incumbent_frame, weights) + SCORE_EPSILON
        ):
            incumbent.scores.adopt_context(candidate.scores)
            improved = True
        return improved

    def _propagate(self, edge: Edge, *, predicted: bool) -> None:
        self.agenda_push(edge)
        if edge.is_active and not predicted:
            for vertex in list(edge.to):
                self.seek_down(edge, vertex)
        if edge.is_passive:
            self._report(edge)

    def agenda_push(self, edge: Edge) -> None:
        """Agenda-Push: все совместимые пары с только что вставленным ребром.

        Начальное ребро в пары не входит: оно служит только источником
        предсказаний.

        :param edge: Вставленное (или улучшенное) ребро
        """
        initial = self.chart.initial_edge
        if edge is initial:
            return
        if edge.is_active:
            for vertex in edge.to:
                for passive in vertex.inactive_out:
                    self._push_pair(edge, passive)
            return
        for active in edge.start.active_in:
            if active is not initial:
                self._push_pair(active, edge)

    def _push_pair(self, active: Edge, passive: Edge) -> None:
        if active.next != passive.cat:
            return
        self.agenda.push(AgendaItem(active, passive, self.combined_score(active, passive)))

    def _report(self, edge: Edge) -> None:
        """Выдача пассивного ребра стартовой категории от вершины 0."""
        if edge.cat != self.grammar.start_category or edge.start.frame != 0:
            return
        if edge.id in self._reported_ids:
            return
        self._reported_ids.add(edge.id)
        self._reported.append(edge)
        if self.sink is not None:
            self.sink(make_result(edge, edge.actual.frame, self.weights))

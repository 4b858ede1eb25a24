"""Модуль с миксином предсказания сверху вниз (Seek Down)."""

from src.application.engine.mixins.base import EngineBaseMixin
from src.domain.entities.chart import Edge, Vertex
from src.domain.entities.scores import ScoreRecord, ScoreSet


class PredictionMixin(EngineBaseMixin):
    """Миксин операции Seek Down по прекомпилированному замыканию левого угла."""

    def seek_down(self, active: Edge, at: Vertex) -> list[Edge]:
        """Вставка предсказанных рёбер нулевой длины в вершину ``at``.

        Замыкание вводит всё транзитивное множество левых углов за один
        шаг, поэтому предсказанные рёбра сами Seek Down не запускают.
        Внутренняя грамматическая оценка - собственная оценка правила,
        внешняя - внешняя оценка родителя плюс лучший путь левого угла.

        :param active: Активное ребро, ожидающее категорию ``active.next``
        :param at: Вершина предсказания (один из концов ``active``)
        :return: Новые рёбра (дубликаты сливаются с существующими)
        """
        if active.next is None:
            return []
        outer = active.scores
        prefix = outer.outside_acoustic.lookup(at.frame)
        created: list[Edge] = []
        for rule, path_score in self.grammar.closure(active.next):
            edge = Edge(
                id=self.chart.new_id(),
                rule=rule,
                dot=0,
                start=at,
                to=[at],
                words=(),
                left_context=active.effective_last_word,
                scores=ScoreRecord(
                    inside_acoustic=ScoreSet.single(at.frame, 0.0),
                    outside_acoustic=ScoreSet.single(at.frame, prefix),
                    outside_bigram=outer.outside_bigram,
                    outside_prosody=outer.outside_prosody,
                    inside_grammar=rule.log_prob,
                    outside_grammar=outer.outside_grammar + path_score,
                ),
                features=None if self.config.skeleton else rule.template,
            )
            kept = self._add_edge(edge, predicted=True)
            if kept is not None:
                created.append(kept)
        return created

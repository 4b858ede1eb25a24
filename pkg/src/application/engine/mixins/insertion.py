"""Модуль с миксином вставки словесных гипотез.

Insert создаёт лексическое ребро для новой гипотезы, Inherit продлевает
семейство уже существующей гипотезы и все рёбра, последнее слово
которых - это семейство, на следующую вершину.
"""

from src.application.engine.mixins.base import EngineBaseMixin
from src.domain.entities.chart import Edge
from src.domain.entities.hypotheses import WordHypothesis
from src.domain.entities.scores import ScoreRecord
from src.domain.exceptions import UnknownWordError
from src.domain.lattice_types import SENTENCE_BEGIN
from src.infrastructure.logging.logger import logger


class InsertionMixin(EngineBaseMixin):
    """Миксин операций Insert и Inherit."""

    def insert(self, word: WordHypothesis) -> Edge:
        """Вставка лексического ребра для гипотезы без предшественника в семействе.

        :param word: Словесная гипотеза
        :return: Пассивное лексическое ребро
        :raises UnknownWordError: Если слова нет в лексиконе
        """
        entry = self.grammar.lex(word.key)
        if entry is None:
            raise UnknownWordError(word.key)
        edge = Edge(
            id=self.chart.new_id(),
            rule=entry.rule,
            dot=0,
            start=self.chart.vertex(word.start),
            to=[self.chart.vertex(word.end)],
            words=(word.key,),
            left_context=SENTENCE_BEGIN,
            scores=ScoreRecord.lexical(word.end, word.score, entry.log_prob),
            features=None if self.config.skeleton else entry.features,
        )
        edge.last_lexical = edge
        self._add_edge(edge)
        return edge

    def inherit(self, word: WordHypothesis) -> list[Edge]:
        """Продление семейства на вершину ``word.end``.

        Каждое ребро, оканчивающееся в предыдущей вершине и имеющее
        последним словом лексическое ребро предшественника, получает
        новый конец с поправкой акустики на разность оценок гипотез.

        :param word: Гипотеза-член семейства
        :return: Продлённые рёбра (пустой список без предшественника)
        """
        previous = word.end - 1
        predecessor = self.chart.family_predecessor(word.start, word.key, previous)
        if predecessor is None:
            return []
        delta = word.score - predecessor.scores.inside_acoustic.lookup(previous)
        old_vertex = self.chart.vertex(previous)
        new_vertex = self.chart.vertex(word.end)

        extended: list[Edge] = []
        for edge in [*old_vertex.inactive_in, *old_vertex.active_in]:
            if edge.last_lexical is not predecessor or edge.actual is not old_vertex:
                continue
            self.chart.extend(edge, new_vertex)
            for scores in (edge.scores.inside_acoustic, edge.scores.outside_acoustic):
                scores.add(word.end, scores.lookup(previous) + delta)
            extended.append(edge)

        for edge in extended:
            if edge.is_active:
                self.seek_down(edge, new_vertex)
        logger.debug(f"Inherit {word}: продлено рёбер {len(extended)}")
        return extended

"""Модуль с миксином комбинации активного и пассивного рёбер.

Комбинация разбита на три фазы: дешёвая проверка (категория, стык,
быстрая проверка признаков), унификация и построение ребра. Параллельный
режим выполняет унификацию вне критической секции.
"""

from src.application.engine.mixins.base import EngineBaseMixin, transition_scores
from src.domain.entities.chart import Edge
from src.domain.entities.features import FeatureStructure, quick_check, signature, unify
from src.domain.entities.grammar import position_name
from src.domain.entities.scores import ScoreRecord, ScoreSet

type UnificationOutcome = tuple[bool, FeatureStructure | None]


class CombinationMixin(EngineBaseMixin):
    """Миксин операции Combine."""

    def can_combine(self, active: Edge, passive: Edge) -> bool:
        """Предусловия Combine и быстрая проверка признаков."""
        if not self.joinable(active, passive):
            return False
        if self.passes_quick_check(active, passive):
            return True
        self.counters.quick_check_rejections += 1
        return False

    @staticmethod
    def joinable(active: Edge, passive: Edge) -> bool:
        """Совпадение ожидаемой категории и стык рёбер."""
        return active.next == passive.cat and active.ends_at(passive.start)

    def passes_quick_check(self, active: Edge, passive: Edge) -> bool:
        """Быстрая проверка сигнатур; без признаков или путей проверка пропускается."""
        paths = self.grammar.quick_check_paths
        if active.features is None or passive.features is None or not paths:
            return True
        slot = active.features.get(position_name(active.dot))
        expected = signature(passive.cat, slot if isinstance(slot, dict) else None, paths)
        offered = signature(passive.cat, passive.exported_features, paths)
        return quick_check(expected, offered)

    @staticmethod
    def unify_pair(active: Edge, passive: Edge) -> UnificationOutcome:
        """Унификация признаков активного ребра с признаками потомка.

        Заполненная позиция удаляется из результата: всё, что она
        связывала с другими позициями, уже перенесено разделёнными
        переменными.

        :return: Пара (успех, признаки нового ребра)
        """
        if active.features is None:
            return True, None
        position = position_name(active.dot)
        instance = unify(active.features, {position: passive.exported_features or {}})
        if instance is None:
            return False, None
        instance.pop(position, None)
        return True, instance

    def build_combined(
        self,
        active: Edge,
        passive: Edge,
        features: FeatureStructure | None,
    ) -> Edge:
        """Построение ребра со сдвинутой точкой и его оценок."""
        outer = active.scores
        inner = passive.scores
        frame = passive.start.frame
        inside_prefix = outer.inside_acoustic.lookup(frame)
        outside_prefix = outer.outside_acoustic.lookup(frame)
        bigram, prosody = transition_scores(active, passive, self.models, self.config.prosody)
        scores = ScoreRecord(
            inside_acoustic=ScoreSet(
                {end.frame: inside_prefix + inner.inside_acoustic.lookup(end.frame) for end in passive.to},
            ),
            outside_acoustic=ScoreSet(
                {end.frame: outside_prefix + inner.inside_acoustic.lookup(end.frame) for end in passive.to},
            ),
            inside_bigram=outer.inside_bigram + inner.inside_bigram + bigram,
            outside_bigram=outer.outside_bigram + inner.inside_bigram + bigram,
            inside_prosody=outer.inside_prosody + inner.inside_prosody + prosody,
            outside_prosody=outer.outside_prosody + inner.inside_prosody + prosody,
            inside_grammar=outer.inside_grammar + inner.inside_grammar,
            outside_grammar=outer.outside_grammar + inner.inside_grammar,
        )
        return Edge(
            id=self.chart.new_id(),
            rule=active.rule,
            dot=active.dot + 1,
            start=active.start,
            to=list(passive.to),
            words=active.words + passive.words,
            left_context=active.left_context,
            scores=scores,
            features=features,
            last_lexical=passive.last_lexical,
            children=(*active.children, passive),
        )

    def combine(self, active: Edge, passive: Edge) -> Edge | None:
        """Combine: новое ребро или None при невыполненных условиях или неудаче унификации.

        :param active: Активное ребро
        :param passive: Пассивное ребро, начинающееся в одном из концов активного
        :return: Новое ребро (ещё не вставленное в чарт) или None
        """
        if not self.can_combine(active, passive):
            return None
        unified, features = self.unify_pair(active, passive)
        if not unified:
            self.counters.unification_failures += 1
            return None
        return self.build_combined(active, passive, features)

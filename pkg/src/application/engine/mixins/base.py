"""Модуль с базовым миксином движка разбора.

Содержит общее состояние движка (чарт, агенда, счётчики, фронт
предсказания) и функции оценивания пар рёбер.
"""

import math
from collections import defaultdict
from collections.abc import Callable, Iterable

from src.application.engine.agenda import Agenda
from src.config import ParserConfig
from src.domain.entities.chart import Chart, Edge, Vertex
from src.domain.entities.grammar import Grammar
from src.domain.entities.hypotheses import ProsodyHypothesis, WordHypothesis
from src.domain.entities.models import ProsodyAttribute, ScoringModels, bigram_trans, prosody_trans
from src.domain.entities.results import ParseResult, RunCounters
from src.domain.entities.scores import ModelWeights
from src.domain.lattice_types import SENTENCE_BEGIN, Category, Frame, LexicalKey, LogScore

type ResultSink = Callable[[ParseResult], None]

SCORE_EPSILON = 1e-12


def word_transitions(
    left: LexicalKey,
    right: LexicalKey,
    attribute: ProsodyAttribute | None,
    models: ScoringModels,
    prosody: bool = True,
) -> tuple[LogScore, LogScore]:
    """Переходы (биграмма, просодия) от слова ``left`` к слову ``right``.

    :param attribute: Просодический атрибут вершины на стыке слов
    :return: Пара (биграмма, просодия)
    """
    bigram = bigram_trans(models.bigram, left, right)
    if not prosody or models.trigram is None or attribute is None:
        return bigram, 0.0
    return bigram, prosody_trans(attribute, left, right, models.trigram)


def transition_scores(
    active: Edge,
    passive: Edge,
    models: ScoringModels,
    prosody: bool = True,
) -> tuple[LogScore, LogScore]:
    """Штрафы перехода (биграмма, просодия) при присоединении пассивного ребра.

    Переходы начисляются только при присоединении лексического ребра,
    левым словом служит последнее слово активного ребра или его
    унаследованный левый контекст.

    :return: Пара (биграмма, просодия)
    """
    if not passive.is_lexical:
        return 0.0, 0.0
    return word_transitions(active.effective_last_word, passive.words[0], passive.start.prosody, models, prosody)


def combined_score(
    active: Edge,
    passive: Edge,
    weights: ModelWeights,
    models: ScoringModels,
    prosody: bool = True,
) -> LogScore:
    """Оценка агенды: взвешенная внешняя оценка ребра, которое дала бы пара.

    Акустическая составляющая берётся по лучшему концу пассивного ребра.

    :raises MissingFrameError: Если начало пассивного ребра не является концом активного
    """
    outer = active.scores
    inner = passive.scores
    prefix = outer.outside_acoustic.lookup(passive.start.frame)
    bigram, prosody_score = transition_scores(active, passive, models, prosody)
    return (
        weights.acoustic * (prefix + inner.inside_acoustic.best())
        + weights.bigram * (outer.outside_bigram + inner.inside_bigram + bigram)
        + weights.prosody * (outer.outside_prosody + inner.inside_prosody + prosody_score)
        + weights.grammar * (outer.outside_grammar + inner.inside_grammar)
    )


class EngineBaseMixin:
    """Базовый миксин движка: состояние одного прогона и оценивание пар."""

    def __init__(
        self,
        grammar: Grammar,
        models: ScoringModels | None = None,
        config: ParserConfig | None = None,
        sink: ResultSink | None = None,
    ):
        """Инициализация движка.

        :param grammar: Грамматика с прекомпилированными таблицами
        :param models: Биграмма и триграмма категорий
        :param config: Параметры разбора
        :param sink: Получатель результатов по мере их нахождения
        """
        self.grammar = grammar
        self.models = models or ScoringModels()
        self.config = config or ParserConfig()
        self.sink = sink
        self.reset()

    @property
    def weights(self) -> ModelWeights:
        return self.config.weights

    def reset(self) -> None:
        """Сброс состояния перед разбором новой решётки."""
        self.chart = Chart()
        self.agenda = Agenda(self.config.beam_offset)
        self.counters = RunCounters()
        self.frontier: set[Category] = set()
        self._prosody_intervals: list[ProsodyHypothesis] = []
        self._reported: list[Edge] = []
        self._reported_ids: set[int] = set()
        self._paths: defaultdict[Frame, dict[LexicalKey, LogScore]] = defaultdict(dict)
        self._paths[0][SENTENCE_BEGIN] = 0.0

    def combined_score(self, active: Edge, passive: Edge) -> LogScore:
        return combined_score(active, passive, self.weights, self.models, self.config.prosody)

    def beam_reference(self, words: Iterable[WordHypothesis]) -> LogScore:
        """Опорная оценка луча цикла: лучший взвешенный путь решётки в слова цикла.

        Путь - последовательность гипотез от кадра 0 с акустикой, переходами
        биграммы и просодии и лексической оценкой слов; правила грамматики
        в него не входят. Оценка зависит только от гипотез решётки, а не
        от содержимого чарта; для пар, пассивное ребро которых оканчивается
        только в кадре цикла, она не меньше оценки пары.

        :param words: Гипотезы, оканчивающиеся в кадре цикла
        :return: Лучшая оценка пути (минус бесконечность, если пути нет)
        """
        weights = self.weights
        reference = -math.inf
        for word in words:
            entry = self.grammar.lex(word.key)
            lexical = entry.log_prob if entry is not None else 0.0
            attribute = self.chart.vertex(word.start).prosody
            reached = self._paths[word.end]
            for left, prefix in self._paths.get(word.start, {}).items():
                bigram, prosody = word_transitions(left, word.key, attribute, self.models, self.config.prosody)
                score = (
                    prefix
                    + weights.acoustic * word.score
                    + weights.bigram * bigram
                    + weights.prosody * prosody
                    + weights.grammar * lexical
                )
                reached[word.key] = max(reached.get(word.key, -math.inf), score)
            reference = max(reference, reached.get(word.key, -math.inf))
        return reference

    def _add_edge(self, edge: Edge, *, predicted: bool = False) -> Edge | None:
        raise NotImplementedError

    def seek_down(self, active: Edge, at: Vertex) -> list[Edge]:
        raise NotImplementedError

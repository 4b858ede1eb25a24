"""Модуль со строгой и стандартной пословной точностью.

Строгая точность засчитывает только слова, встроенные в корректный
разбор от начала высказывания; слова правее разобранного префикса
становятся удалениями. Стандартная точность считается по лучшему
пути решётки (акустика и биграмма) без участия грамматики.
"""

from collections.abc import Sequence

import numpy as np

from src.domain.entities.hypotheses import Lattice
from src.domain.entities.models import BigramModel
from src.domain.entities.results import EvalReport, ParseResultSet
from src.domain.entities.scores import ModelWeights
from src.domain.exceptions import EmptyResultError
from src.domain.lattice_types import SENTENCE_BEGIN, Frame, LexicalKey, LogScore

type Alignment = tuple[int, int, int]
type PathState = tuple[Frame, LexicalKey]


def covered_string(result_set: ParseResultSet) -> tuple[LexicalKey, ...]:
    """Слова лучшего результата (полного или префиксного) по порядку.

    :param result_set: Результат разбора
    :return: Покрытые слова
    :raises EmptyResultError: Если разбор не дал ни одного результата
    """
    if result_set.best is None:
        raise EmptyResultError
    return result_set.best.words


def align(reference: Sequence[LexicalKey], hypothesis: Sequence[LexicalKey]) -> Alignment:
    """Выравнивание по минимальному редакционному расстоянию с единичными ценами.

    При обратном проходе предпочитаются совпадение/замена, затем
    удаление, затем вставка.

    :return: Тройка (замены, удаления, вставки)
    """
    rows, columns = len(reference), len(hypothesis)
    cost = np.zeros((rows + 1, columns + 1), dtype=np.int64)
    cost[:, 0] = np.arange(rows + 1)
    cost[0, :] = np.arange(columns + 1)
    for i in range(1, rows + 1):
        for j in range(1, columns + 1):
            mismatch = int(reference[i - 1] != hypothesis[j - 1])
            cost[i, j] = min(cost[i - 1, j - 1] + mismatch, cost[i - 1, j] + 1, cost[i, j - 1] + 1)

    substitutions = deletions = insertions = 0
    i, j = rows, columns
    while i > 0 or j > 0:
        if i > 0 and j > 0:
            mismatch = int(reference[i - 1] != hypothesis[j - 1])
            if cost[i, j] == cost[i - 1, j - 1] + mismatch:
                substitutions += mismatch
                i, j = i - 1, j - 1
                continue
        if i > 0 and cost[i, j] == cost[i - 1, j] + 1:
            deletions += 1
            i -= 1
            continue
        insertions += 1
        j -= 1
    return substitutions, deletions, insertions


def word_accuracy(reference_length: int, alignment: Alignment) -> float:
    return 1.0 - sum(alignment) / reference_length


def strict_word_accuracy(
    reference: Sequence[LexicalKey],
    covered: Sequence[LexicalKey],
) -> EvalReport:
    """Строгая пословная точность ``1 - (S + D + I) / n_ref``.

    :param reference: Эталонная транскрипция (непустая)
    :param covered: Слова, встроенные в разбор
    :return: Отчёт с числами ошибок и точностью
    :raises ValueError: Если эталон пуст
    """
    if not reference:
        msg = "эталонная транскрипция пуста"
        raise ValueError(msg)
    substitutions, deletions, insertions = align(reference, covered)
    return EvalReport(
        n_ref=len(reference),
        substitutions=substitutions,
        deletions=deletions,
        insertions=insertions,
        word_accuracy=word_accuracy(len(reference), (substitutions, deletions, insertions)),
        covered_words=tuple(covered),
        reference=tuple(reference),
    )


def best_lattice_path(
    lattice: Lattice,
    bigram: BigramModel,
    weights: ModelWeights | None = None,
) -> tuple[tuple[LexicalKey, ...], LogScore]:
    """Лучший путь по решётке от кадра 0 до последнего кадра.

    Состояние пути - (кадр, последнее слово), поэтому биграмма
    учитывается точно.

    :param lattice: Решётка
    :param bigram: Биграммная модель
    :param weights: Веса (используются акустика и биграмма)
    :return: Слова пути и его оценка; пустой путь, если конца решётки не достичь
    """
    weights = weights or ModelWeights()
    best: dict[PathState, tuple[LogScore, tuple[LexicalKey, ...]]] = {(0, SENTENCE_BEGIN): (0.0, ())}
    for hypothesis in sorted(lattice.hypotheses, key=lambda h: (h.start, h.end, h.key)):
        sources = [(state, value) for state, value in best.items() if state[0] == hypothesis.start]
        for (_, last_word), (score, words) in sources:
            extended = (
                score
                + weights.acoustic * hypothesis.score
                + weights.bigram * bigram.trans(last_word, hypothesis.key)
            )
            target = (hypothesis.end, hypothesis.key)
            if target not in best or extended > best[target][0]:
                best[target] = (extended, (*words, hypothesis.key))

    finals = [value for state, value in best.items() if state[0] == lattice.frame_count]
    if not finals:
        return (), float("-inf")
    score, words = max(finals, key=lambda value: value[0])
    return words, score


def standard_word_accuracy(
    reference: Sequence[LexicalKey],
    lattice: Lattice,
    bigram: BigramModel,
    weights: ModelWeights | None = None,
) -> tuple[float, tuple[LexicalKey, ...]]:
    """Стандартная пословная точность по лучшему пути решётки.

    :return: Точность и слова лучшего пути
    """
    words, _ = best_lattice_path(lattice, bigram, weights)
    report = strict_word_accuracy(reference, words)
    return report.word_accuracy, words

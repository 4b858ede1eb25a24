"""Модуль с потоком выдачи гипотез, имитирующим декодер.

Поток выдаёт словесные гипотезы строго по порядку кадров, как это
делает декодер Витерби, достигая конечного состояния модели слова.
Словесное предсказание парсера сужает выдачу фильтром ключей.
"""

import random
from collections import defaultdict
from collections.abc import Iterable

from src.domain.entities.hypotheses import Lattice, ProsodyHypothesis, WordHypothesis
from src.domain.exceptions import OutOfOrderEmissionError
from src.domain.lattice_types import Frame, LexicalKey


class EmissionStream:
    """Покадровая выдача гипотез решётки.

    Гипотезы с концом ``t`` выдаются в цикле ``t``; просодический
    интервал - в цикле своего начального кадра.
    """

    def __init__(self, lattice: Lattice, seed: int | None = None):
        """Инициализация потока.

        :param lattice: Проверенная решётка
        :param seed: Зерно перестановки гипотез внутри кадра (None - порядок решётки)
        """
        self.lattice = lattice
        self.cursor: Frame = 1
        self.prediction_filter: frozenset[LexicalKey] | None = None
        self._words: dict[Frame, list[WordHypothesis]] = defaultdict(list)
        self._prosody: dict[Frame, list[ProsodyHypothesis]] = defaultdict(list)
        for hypothesis in lattice.hypotheses:
            self._words[hypothesis.end].append(hypothesis)
        for interval in lattice.prosody_hypotheses:
            self._prosody[interval.start].append(interval)
        if seed is not None:
            rng = random.Random(seed)
            for frame in sorted(self._words):
                rng.shuffle(self._words[frame])

    def emit_frame(self, frame: Frame) -> list[WordHypothesis]:
        """Гипотезы, оканчивающиеся в кадре ``frame``, с учётом фильтра.

        :param frame: Текущий кадр (должен совпадать с курсором)
        :return: Гипотезы в порядке выдачи
        :raises OutOfOrderEmissionError: Если кадр запрошен не по порядку
        """
        if frame != self.cursor:
            raise OutOfOrderEmissionError(self.cursor, frame)
        self.cursor += 1
        words = self._words.get(frame, [])
        if self.prediction_filter is None:
            return list(words)
        return [word for word in words if word.key in self.prediction_filter]

    def prosody_at(self, frame: Frame) -> list[ProsodyHypothesis]:
        return list(self._prosody.get(frame, []))

    def set_prediction(self, keys: Iterable[LexicalKey]) -> None:
        """Замена фильтра предсказания для последующих кадров."""
        self.prediction_filter = frozenset(keys)


def emit_frame(stream: EmissionStream, frame: Frame) -> list[WordHypothesis]:
    return stream.emit_frame(frame)


def set_prediction(stream: EmissionStream, keys: Iterable[LexicalKey]) -> None:
    stream.set_prediction(keys)

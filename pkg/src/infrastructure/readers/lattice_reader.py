"""Модуль с читателем файла словарной решётки.

Формат файла (UTF-8, ``#`` - комментарий, FRAMES - первая запись)::

    FRAMES 30
    WORD we 0 10 -5.0
    WORD meet 10 30 -12.0
    PROSODY 9 11 .1 .6 .2 .1
"""

from pathlib import Path
from typing import ClassVar

from src.domain.entities.hypotheses import Lattice, ProsodyHypothesis, WordHypothesis
from src.domain.exceptions import LatticeSyntaxError, ProbabilityError
from src.domain.interfaces.base_reader import FormatReader
from src.domain.lattice_types import Frame, LexicalKey
from src.infrastructure.logging.logger import logger
from src.infrastructure.readers.mixins import LineReaderMixin


class LatticeReader(LineReaderMixin, FormatReader[Lattice]):
    """Читатель решётки: число кадров, словесные и просодические гипотезы."""

    _format_name: ClassVar[str] = "lattice"
    _module: ClassVar[str] = "lattice"
    _syntax_error = LatticeSyntaxError

    def read_text(self, text: str, source: str = "<text>") -> Lattice:
        """Разбор решётки.

        Одинаковые гипотезы (from, to, key) сворачиваются в одну с
        лучшей оценкой.

        :param text: Содержимое файла решётки
        :param source: Имя источника; основа имени файла становится именем решётки
        :return: Проверенная решётка
        :raises LatticeSyntaxError: Синтаксическая ошибка
        :raises FrameRangeError: Кадры вне решётки или from >= to
        :raises OverlappingProsodyError: Перекрывающиеся просодические интервалы
        """
        frame_count: Frame | None = None
        words: dict[tuple[Frame, Frame, LexicalKey], WordHypothesis] = {}
        prosody: list[ProsodyHypothesis] = []

        for line_number, fields in self._records(text):
            keyword = fields[0].upper()
            if frame_count is None:
                if keyword != "FRAMES":
                    self._fail(line_number, "первой записью должна быть FRAMES <n>")
                self._expect_fields(fields, 2, line_number, "FRAMES <n>")
                frame_count = self._int(fields[1], line_number, "FRAMES")
                if frame_count < 0:
                    self._fail(line_number, f"число кадров не может быть отрицательным: {frame_count}")
            elif keyword == "WORD":
                hypothesis = self._parse_word(fields, line_number)
                identity = (hypothesis.start, hypothesis.end, hypothesis.key)
                known = words.get(identity)
                if known is not None:
                    logger.warning(f"{source}: строка {line_number}: повтор гипотезы {hypothesis}, оставлена лучшая")
                    if known.score >= hypothesis.score:
                        continue
                words[identity] = hypothesis
            elif keyword == "PROSODY":
                prosody.append(self._parse_prosody(fields, line_number))
            elif keyword == "FRAMES":
                self._fail(line_number, "повторная запись FRAMES")
            else:
                self._fail(line_number, f"неизвестная запись {fields[0]!r}")

        if frame_count is None:
            self._fail(0, "нет записи FRAMES")
        name = Path(source).stem if source != "<text>" else ""
        lattice = Lattice(
            frame_count=frame_count,
            hypotheses=list(words.values()),
            prosody_hypotheses=prosody,
            name=name,
        )
        logger.info(f"Решётка {source}: кадров {frame_count}, гипотез {len(lattice.hypotheses)}")
        return lattice

    def _parse_word(self, fields: list[str], line_number: int) -> WordHypothesis:
        self._expect_fields(fields, 5, line_number, "WORD <key> <from> <to> <logscore>")
        score = self._float(fields[4], line_number, "оценка")
        if score > 0:
            msg = f"строка {line_number}: акустическая оценка {score} должна быть не больше 0"
            raise ProbabilityError(self._module, msg)
        return WordHypothesis(
            start=self._int(fields[2], line_number, "from"),
            end=self._int(fields[3], line_number, "to"),
            key=fields[1],
            score=score,
        )

    def _parse_prosody(self, fields: list[str], line_number: int) -> ProsodyHypothesis:
        self._expect_fields(fields, 7, line_number, "PROSODY <from> <to> <pB0> <pB2> <pB3> <pB9>")
        p_b0, p_b2, p_b3, p_b9 = (self._float(token, line_number, "вероятность") for token in fields[3:])
        return ProsodyHypothesis(
            start=self._int(fields[1], line_number, "from"),
            end=self._int(fields[2], line_number, "to"),
            p_b0=p_b0,
            p_b2=p_b2,
            p_b3=p_b3,
            p_b9=p_b9,
        )


def load_lattice(text: str, name: str = "") -> Lattice:
    """Разбор текста решётки в проверенную решётку."""
    lattice = LatticeReader().read_text(text)
    lattice.name = name
    return lattice

"""Модуль с читателями файлов биграммной модели и триграммы категорий.

Биграмма::

    BIGRAM <s> we -0.7
    BIGRAM we meet -1.6
    DEFAULT -5.0

Триграмма::

    CAT we PRON
    TRI PRON B0 VERB -0.1
    DEFAULT -2.0
"""

from typing import ClassVar

from src.domain.entities.models import BigramModel, CategoryTrigram
from src.domain.exceptions import ModelSyntaxError
from src.domain.interfaces.base_reader import FormatReader
from src.domain.lattice_types import BoundaryClass, Category, LexicalKey, LogScore
from src.infrastructure.logging.logger import logger
from src.infrastructure.readers.mixins import LineReaderMixin


class BigramReader(LineReaderMixin, FormatReader[BigramModel]):
    """Читатель биграммной модели."""

    _format_name: ClassVar[str] = "bigram"
    _module: ClassVar[str] = "models"
    _syntax_error = ModelSyntaxError

    def read_text(self, text: str, source: str = "<text>") -> BigramModel:
        scores: dict[tuple[LexicalKey, LexicalKey], LogScore] = {}
        default_score = 0.0
        for line_number, fields in self._records(text):
            keyword = fields[0].upper()
            if keyword == "BIGRAM":
                self._expect_fields(fields, 4, line_number, "BIGRAM <lkey|<s>> <rkey> <logprob>")
                scores[fields[1], fields[2]] = self._log_prob(fields[3], line_number, "биграмма")
            elif keyword == "DEFAULT":
                self._expect_fields(fields, 2, line_number, "DEFAULT <logprob>")
                default_score = self._log_prob(fields[1], line_number, "DEFAULT")
            else:
                self._fail(line_number, f"неизвестная запись {fields[0]!r}")
        logger.info(f"Биграмма {source}: пар {len(scores)}, по умолчанию {default_score}")
        return BigramModel(scores=scores, default_score=default_score)


class TrigramReader(LineReaderMixin, FormatReader[CategoryTrigram]):
    """Читатель триграммы (категория, класс границы, категория)."""

    _format_name: ClassVar[str] = "trigram"
    _module: ClassVar[str] = "models"
    _syntax_error = ModelSyntaxError

    def read_text(self, text: str, source: str = "<text>") -> CategoryTrigram:
        category_of: dict[LexicalKey, Category] = {}
        scores: dict[tuple[Category, BoundaryClass, Category], LogScore] = {}
        default_score = 0.0
        for line_number, fields in self._records(text):
            keyword = fields[0].upper()
            if keyword == "CAT":
                self._expect_fields(fields, 3, line_number, "CAT <key> <category>")
                category_of[fields[1]] = fields[2]
            elif keyword == "TRI":
                self._expect_fields(fields, 5, line_number, "TRI <cat> <B0|B2|B3|B9> <cat> <logprob>")
                boundary = self._boundary(fields[2], line_number)
                scores[fields[1], boundary, fields[3]] = self._log_prob(fields[4], line_number, "триграмма")
            elif keyword == "DEFAULT":
                self._expect_fields(fields, 2, line_number, "DEFAULT <logprob>")
                default_score = self._log_prob(fields[1], line_number, "DEFAULT")
            else:
                self._fail(line_number, f"неизвестная запись {fields[0]!r}")
        logger.info(f"Триграмма {source}: категорий слов {len(category_of)}, оценок {len(scores)}")
        return CategoryTrigram(category_of=category_of, scores=scores, default_score=default_score)

    def _boundary(self, token: str, line_number: int) -> BoundaryClass:
        try:
            return BoundaryClass(token.upper())
        except ValueError:
            self._fail(line_number, f"неизвестный класс границы {token!r}, ожидалось B0, B2, B3 или B9")

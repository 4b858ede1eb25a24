"""Модуль с читателем эталонных транскрипций: одна транскрипция на строку."""

from typing import ClassVar

from src.domain.exceptions import LatticeSyntaxError
from src.domain.interfaces.base_reader import FormatReader
from src.domain.lattice_types import LexicalKey
from src.infrastructure.readers.mixins import LineReaderMixin

type Transcript = tuple[LexicalKey, ...]


class ReferenceReader(LineReaderMixin, FormatReader[list[Transcript]]):
    """Читатель эталонов: непустые строки без комментариев, слова через пробел."""

    _format_name: ClassVar[str] = "reference"
    _module: ClassVar[str] = "eval"
    _syntax_error = LatticeSyntaxError

    def read_text(self, text: str, source: str = "<text>") -> list[Transcript]:  # noqa: ARG002
        return [tuple(fields) for _, fields in self._records(text)]

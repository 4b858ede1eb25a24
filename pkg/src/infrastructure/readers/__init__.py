"""Пакет с читателями файловых форматов: грамматика, решётка, модели, эталоны."""

from src.infrastructure.readers.grammar_reader import GrammarReader, parse_grammar
from src.infrastructure.readers.lattice_reader import LatticeReader, load_lattice
from src.infrastructure.readers.model_reader import BigramReader, TrigramReader
from src.infrastructure.readers.reader_factory import ReaderFactory
from src.infrastructure.readers.reference_reader import ReferenceReader

__all__ = [
    "BigramReader",
    "GrammarReader",
    "LatticeReader",
    "ReaderFactory",
    "ReferenceReader",
    "TrigramReader",
    "load_lattice",
    "parse_grammar",
]

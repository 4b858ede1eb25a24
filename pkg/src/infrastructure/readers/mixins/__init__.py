"""Пакет с миксинами читателей строковых файловых форматов."""

from src.infrastructure.readers.mixins.base import LineReaderMixin

__all__ = ["LineReaderMixin"]

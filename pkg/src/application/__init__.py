"""Уровень приложения: движок, декодер, оценка и сервисы команд."""

from . import services

__all__ = ["services"]

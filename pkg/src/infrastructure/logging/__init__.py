"""Пакет журнала парсера на structlog."""

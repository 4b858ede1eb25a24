"""Пакет презентационного слоя: командная строка."""

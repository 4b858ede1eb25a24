"""Пакет интерфейсов доменного слоя."""

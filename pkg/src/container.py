"""Модуль с контейнером зависимостей парсера для тестов и внешних скриптов."""

from src.infrastructure.ioc import container, provider

__all__ = ["container", "provider"]

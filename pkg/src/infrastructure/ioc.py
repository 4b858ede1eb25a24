"""Модуль с контейнером зависимостей приложения.

Предоставляет единую точку инициализации и получения зависимостей.
"""

from dishka import Provider, Scope, make_container, provide

from src.application.services import BenchmarkService, EvaluationService, ParsingService
from src.config import Settings, SettingsManager
from src.infrastructure.logging.logger import logger
from src.infrastructure.readers import (
    BigramReader,
    GrammarReader,
    LatticeReader,
    ReaderFactory,
    ReferenceReader,
    TrigramReader,
)
from src.infrastructure.reports import ReportWriter


class DependencyProvider(Provider):
    """Главный провайдер зависимостей приложения."""

    @provide(scope=Scope.APP)
    def provide_settings(self) -> Settings:
        """Предоставляет настройки приложения."""
        return SettingsManager.get()

    @provide(scope=Scope.APP)
    def provide_reader_factory(self) -> ReaderFactory:
        """Создание фабрики читателей файловых форматов.

        :return: Экземпляр фабрики читателей
        """
        logger.info("Инициализация фабрики читателей")
        return ReaderFactory(
            [
                GrammarReader(),
                LatticeReader(),
                BigramReader(),
                TrigramReader(),
                ReferenceReader(),
            ],
        )

    @provide(scope=Scope.APP)
    def provide_report_writer(self) -> ReportWriter:
        return ReportWriter()

    @provide(scope=Scope.APP)
    def provide_parsing_service(self, reader_factory: ReaderFactory) -> ParsingService:
        """Предоставляет сервис разбора решёток."""
        return ParsingService(reader_factory)

    @provide(scope=Scope.APP)
    def provide_evaluation_service(
        self,
        parsing_service: ParsingService,
        reader_factory: ReaderFactory,
    ) -> EvaluationService:
        """Предоставляет сервис оценки точности."""
        return EvaluationService(parsing_service, reader_factory)

    @provide(scope=Scope.APP)
    def provide_benchmark_service(self, parsing_service: ParsingService) -> BenchmarkService:
        """Предоставляет сервис замеров параллельного разбора."""
        return BenchmarkService(parsing_service)


provider = DependencyProvider()
container = make_container(provider)

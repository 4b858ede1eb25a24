"""Модуль с командной строкой парсера словарных решёток.

Подкоманды ``parse``, ``eval`` и ``bench`` собирают :class:`RunConfig`
из флагов (значения по умолчанию - из :class:`Settings`), получают
сервис из контейнера и печатают отчёт в stdout. Все исключения
переводятся в коды завершения здесь.
"""

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import NoReturn

from src.application.services import BenchmarkService, EvaluationService, ParsingService
from src.config import RunConfig, Settings, SettingsManager
from src.domain.entities.scores import ModelWeights
from src.domain.exceptions import EXIT_VALIDATION, LatticeParserError, UsageError
from src.infrastructure.ioc import container
from src.infrastructure.logging.logger import logger
from src.infrastructure.reports import Report, ReportWriter

EXIT_OK = 0
SWITCH = {"on": True, "off": False}
SERVICES = {
    "parse": ParsingService,
    "eval": EvaluationService,
    "bench": BenchmarkService,
}


class CliArgumentParser(argparse.ArgumentParser):
    """Разбор аргументов, у которого ошибки использования - исключения."""

    def error(self, message: str) -> NoReturn:
        raise UsageError(message)


def _weights(text: str) -> ModelWeights:
    try:
        return ModelWeights.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _beam_offset(text: str) -> float:
    try:
        value = float(text)
    except ValueError as e:
        msg = f"смещение луча должно быть числом или inf: {text!r}"
        raise argparse.ArgumentTypeError(msg) from e
    if not value > 0:
        msg = f"смещение луча должно быть положительным: {text}"
        raise argparse.ArgumentTypeError(msg)
    return value


def _add_run_arguments(parser: argparse.ArgumentParser, settings: Settings) -> None:
    parser.add_argument("--grammar", type=Path, required=True, help="файл грамматики")
    parser.add_argument("--lattice", type=Path, action="append", required=True, help="файл решётки (можно повторять)")
    parser.add_argument("--bigram", type=Path, help="биграммная модель")
    parser.add_argument("--trigram", type=Path, help="триграмма категорий с классами границ")
    parser.add_argument("--ref", type=Path, help="эталонные транскрипции, по одной на решётку")
    parser.add_argument("--weights", type=_weights, default=settings.LRI_WEIGHTS, help="веса a,b,p,g")
    parser.add_argument("--beam-offset", type=_beam_offset, default=settings.LRI_BEAM_OFFSET, help="смещение луча или inf")
    parser.add_argument("--prosody", choices=SWITCH, default="on")
    parser.add_argument("--predict", choices=SWITCH, default="off")
    parser.add_argument("--skeleton", action="store_true", help="разбор без признаков")
    parser.add_argument("--workers", type=int, default=settings.LRI_WORKERS, help="число рабочих потоков")
    parser.add_argument("--format", choices=("text", "structured"), default="text", dest="output_format")
    parser.add_argument("--strict", action="store_true", help="ненулевой код при пустом результате")
    parser.add_argument("--seed", type=int, help="зерно порядка выдачи гипотез внутри кадра")
    parser.add_argument("--no-metrics", action="store_true", help="не собирать метрики параллельного прогона")


def build_parser(settings: Settings | None = None) -> CliArgumentParser:
    """Построение разбора аргументов со всеми подкомандами."""
    settings = settings or SettingsManager.get()
    parser = CliArgumentParser(prog="lri-parser", description="Инкрементный разбор словарных решёток")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=CliArgumentParser)
    for name, help_text in (
        ("parse", "разбор решёток"),
        ("eval", "строгая и стандартная пословная точность"),
        ("bench", "сравнение последовательного и параллельного разбора"),
    ):
        _add_run_arguments(commands.add_parser(name, help=help_text), settings)
    return parser


def run_config(arguments: argparse.Namespace) -> RunConfig:
    """Сборка конфигурации запуска из разобранных аргументов."""
    return RunConfig(
        grammar_path=arguments.grammar,
        lattice_paths=tuple(arguments.lattice),
        bigram_path=arguments.bigram,
        trigram_path=arguments.trigram,
        reference_path=arguments.ref,
        weights=arguments.weights,
        beam_offset=arguments.beam_offset,
        prosody=SWITCH[arguments.prosody],
        prediction=SWITCH[arguments.predict],
        skeleton=arguments.skeleton,
        worker_count=arguments.workers,
        output_format=arguments.output_format,
        strict=arguments.strict,
        seed=arguments.seed,
        metrics_enabled=not arguments.no_metrics,
    )


def execute(command: str, config: RunConfig) -> Report:
    service = container.get(SERVICES[command])
    return service.run(config)


def main(argv: Sequence[str] | None = None) -> int:
    """Запуск командной строки.

    :param argv: Аргументы без имени программы (None - из sys.argv)
    :return: Код завершения: 0 - успех, 1 - использование, 2 - входные данные, 3 - выполнение
    """
    try:
        arguments = build_parser().parse_args(argv)
        config = run_config(arguments)
        report = execute(arguments.command, config)
        sys.stdout.write(container.get(ReportWriter).render(report, config.output_format))
    except LatticeParserError as e:
        logger.error(f"Ошибка выполнения команды: {e}")
        sys.stderr.write(f"{e}\n")
        return e.exit_code
    except OSError as e:
        logger.error(f"Ошибка ввода-вывода: {e}")
        sys.stderr.write(f"io: {e}\n")
        return EXIT_VALIDATION
    return EXIT_OK

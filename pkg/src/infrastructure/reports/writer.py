"""Модуль с выводом отчётов разбора, оценки и замеров.

Текстовый отчёт - блоки строк ``key=value`` (по одному на высказывание),
общий блок и завершающая секция ``[timing]``. Структурированный отчёт -
объект JSON со схемой ``lri-report/1``. Времена вынесены отдельно, чтобы
остальная часть отчёта была воспроизводима побайтно.
"""

import json
import math
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from typing import Literal

from src.domain.exceptions import UsageError

REPORT_SCHEMA = "lri-report/1"

type ReportValue = str | int | float | bool | None | Sequence[ReportValue] | Mapping[str, ReportValue]
type ReportBlock = dict[str, ReportValue]


@dataclass(slots=True)
class Report:
    """Отчёт команды: блоки высказываний, общий блок и времена."""

    command: str
    utterances: list[ReportBlock] = field(default_factory=list)
    aggregate: ReportBlock = field(default_factory=dict)
    timing: dict[str, float] = field(default_factory=dict)


def _text_value(value: ReportValue) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, float):
        return "inf" if math.isinf(value) and value > 0 else f"{value:.6f}"
    if isinstance(value, Mapping):
        return " ".join(f"{key}:{_text_value(item)}" for key, item in value.items())
    if isinstance(value, Sequence) and not isinstance(value, str):
        return " ".join(_text_value(item) for item in value)
    return str(value)


def _json_value(value: ReportValue) -> ReportValue:
    if isinstance(value, float) and not math.isfinite(value):
        return str(value)
    if isinstance(value, Mapping):
        return {key: _json_value(item) for key, item in value.items()}
    if isinstance(value, Sequence) and not isinstance(value, str):
        return [_json_value(item) for item in value]
    return value


class ReportWriter:
    """Отрисовка отчётов в текстовом или структурированном виде."""

    def render(self, report: Report, output_format: Literal["text", "structured"] = "text") -> str:
        """Отрисовка отчёта.

        :param report: Отчёт команды
        :param output_format: ``text`` или ``structured``
        :return: Текст отчёта с завершающим переводом строки
        :raises UsageError: Неизвестный формат
        """
        if output_format == "text":
            return self.render_text(report)
        if output_format == "structured":
            return self.render_structured(report)
        msg = f"неизвестный формат отчёта: {output_format}"
        raise UsageError(msg)

    def render_text(self, report: Report) -> str:
        lines: list[str] = [f"command={report.command}"]
        for index, block in enumerate(report.utterances, start=1):
            lines.append("")
            lines.append(f"[utterance {index}]")
            lines.extend(f"{key}={_text_value(value)}" for key, value in block.items())
        if report.aggregate:
            lines.append("")
            lines.append("[aggregate]")
            lines.extend(f"{key}={_text_value(value)}" for key, value in report.aggregate.items())
        lines.append("")
        lines.append("[timing]")
        lines.extend(f"{key}={value:.6f}" for key, value in report.timing.items())
        return "\n".join(lines) + "\n"

    def render_structured(self, report: Report) -> str:
        document = {
            "schema": REPORT_SCHEMA,
            "command": report.command,
            "utterances": [_json_value(block) for block in report.utterances],
            "aggregate": _json_value(report.aggregate),
            "timing": dict(report.timing),
        }
        return json.dumps(document, ensure_ascii=False, indent=2) + "\n"

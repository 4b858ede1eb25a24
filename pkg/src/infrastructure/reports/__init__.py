"""Пакет с выводом отчётов."""

from src.infrastructure.reports.writer import REPORT_SCHEMA, Report, ReportWriter

__all__ = ["REPORT_SCHEMA", "Report", "ReportWriter"]

"""Пакет с имитацией декодера: покадровая выдача гипотез решётки."""

from src.application.decoder.emission import EmissionStream, emit_frame, set_prediction

__all__ = ["EmissionStream", "emit_frame", "set_prediction"]

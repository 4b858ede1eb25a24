"""Доменный слой: решётки, грамматика, модели, чарт и результаты разбора."""

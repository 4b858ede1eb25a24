"""Доменные сущности разбора словарных решёток."""

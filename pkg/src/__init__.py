"""LRI-парсер словарных решёток."""

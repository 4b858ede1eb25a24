"""Инфраструктурный слой: чтение файлов, отчёты, журнал и контейнер зависимостей."""

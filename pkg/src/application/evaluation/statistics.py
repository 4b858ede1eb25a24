"""Модуль со статистикой чарта.

Число рёбер - мера работы парсера, по которой сравниваются прогоны
с учётом просодии и без него.
"""

from collections import Counter

from src.domain.entities.chart import Chart
from src.domain.entities.results import EdgeStats


def edge_stats(chart: Chart) -> EdgeStats:
    """Число рёбер чарта: всего (с начальным ребром), пассивных и пассивных по категориям.

    :param chart: Законченный чарт
    :return: Статистика рёбер
    """
    per_category = Counter(edge.cat for edge in chart.edges if edge.is_passive)
    return EdgeStats(
        total=len(chart.edges),
        passive=sum(per_category.values()),
        per_category=dict(sorted(per_category.items())),
    )


def prosody_pruned_delta(with_prosody: EdgeStats, without_prosody: EdgeStats) -> float:
    """Относительное сокращение числа рёбер за счёт просодии.

    :param with_prosody: Статистика прогона с просодией
    :param without_prosody: Статистика прогона без просодии
    :return: Доля ``(off - on) / off``; 0.0 для пустого чарта
    """
    if without_prosody.total == 0:
        return 0.0
    return (without_prosody.total - with_prosody.total) / without_prosody.total

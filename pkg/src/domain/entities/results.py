"""Модуль с результатами разбора, оценки и параллельного прогона."""

from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from src.domain.lattice_types import Category, Frame, LexicalKey, LogScore

if TYPE_CHECKING:
    from src.domain.entities.chart import Chart


@dataclass(frozen=True, slots=True)
class ParseResult:
    """Пассивное ребро стартовой категории от вершины 0 с одним концом.

    :param score: Взвешенная внутренняя оценка для конца ``end``
    :param partial: Результат - лучший префикс, а не полный разбор
    """

    category: Category
    start: Frame
    end: Frame
    words: tuple[LexicalKey, ...]
    tree: str
    score: LogScore
    acoustic: LogScore
    bigram: LogScore
    prosody: LogScore
    grammar: LogScore
    spanning: bool = False
    partial: bool = False


@dataclass(frozen=True, slots=True)
class EdgeStats:
    """Число рёбер чарта: всего, пассивных и по категориям."""

    total: int
    passive: int
    per_category: dict[Category, int] = field(default_factory=dict)


@dataclass(slots=True)
class RunCounters:
    """Счётчики прогона: задания агенды, комбинации, отказы проверок."""

    pushed: int = 0
    processed: int = 0
    pruned: int = 0
    combinations: int = 0
    quick_check_rejections: int = 0
    unification_failures: int = 0
    merges: int = 0
    cycles: int = 0

    def as_dict(self) -> dict[str, int]:
        return {
            "pushed": self.pushed,
            "processed": self.processed,
            "pruned": self.pruned,
            "combinations": self.combinations,
            "quick_check_rejections": self.quick_check_rejections,
            "unification_failures": self.unification_failures,
            "merges": self.merges,
            "cycles": self.cycles,
        }


@dataclass(slots=True)
class ParseResultSet:
    """Все результаты разбора решётки и статистика чарта."""

    lattice_name: str
    frame_count: Frame
    results: list[ParseResult]
    best: ParseResult | None
    partial: bool
    stats: EdgeStats
    counters: RunCounters
    timing: dict[str, float] = field(default_factory=dict)
    chart: "Chart | None" = field(default=None, repr=False, compare=False)

    @property
    def spanning_results(self) -> list[ParseResult]:
        return [result for result in self.results if result.spanning]


@dataclass(frozen=True, slots=True)
class EvalReport:
    """Строгая (по разбору) и стандартная пословная точность.

    ``word_accuracy = 1 - (S + D + I) / n_ref``.
    """

    n_ref: int
    substitutions: int
    deletions: int
    insertions: int
    word_accuracy: float
    covered_words: tuple[LexicalKey, ...]
    reference: tuple[LexicalKey, ...] = ()
    edge_count_total: int = 0
    edge_count_passive: int = 0
    prosody_pruned_delta: float | None = None
    standard_word_accuracy: float | None = None
    standard_words: tuple[LexicalKey, ...] = ()
    name: str = ""


@dataclass(slots=True)
class ParallelMetrics:
    """Метрики параллельного прогона.

    :param worker_task_counts: Число заданий, выполненных каждым рабочим
    :param duration_histogram: Гистограмма длительностей заданий
    :param histogram_edges: Границы корзин гистограммы (секунды)
    :param unification_share: Доля времени унификации в общем времени заданий
    :param idle_time: Время простоя каждого рабочего (секунды)
    :param gain_percent: Выигрыш относительно последовательного прогона, %
    """

    worker_task_counts: list[int] = field(default_factory=list)
    duration_histogram: list[int] = field(default_factory=list)
    histogram_edges: list[float] = field(default_factory=list)
    unification_share: float = 0.0
    idle_time: list[float] = field(default_factory=list)
    sequential_time: float = 0.0
    parallel_time: float = 0.0
    gain_percent: float = 0.0
    name: str = ""

    @property
    def total_tasks(self) -> int:
        return sum(self.worker_task_counts)

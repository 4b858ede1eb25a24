"""Модуль с объектами графа разбора (чарта).

Вершина соответствует кадру сигнала и хранит четыре списка рёбер.
Ребро - активный или пассивный элемент чарта с набором конечных
вершин ("семейством") и записью оценок.
"""

from collections.abc import Hashable, Iterator
from dataclasses import dataclass, field

from src.domain.entities.features import FeatureStructure, canonical, format_features
from src.domain.entities.grammar import LHS_POSITION, Rule
from src.domain.entities.models import ProsodyAttribute
from src.domain.entities.scores import ScoreRecord
from src.domain.lattice_types import Category, Frame, LexicalKey

type EdgeKey = tuple[int, int, Frame, Hashable, int, LexicalKey]


@dataclass(slots=True, eq=False)
class Vertex:
    """Вершина чарта для кадра ``frame``."""

    frame: Frame
    inactive_out: list["Edge"] = field(default_factory=list)
    inactive_in: list["Edge"] = field(default_factory=list)
    active_out: list["Edge"] = field(default_factory=list)
    active_in: list["Edge"] = field(default_factory=list)
    prosody: ProsodyAttribute | None = None

    def __repr__(self) -> str:
        return f"V{self.frame}"


@dataclass(slots=True, eq=False)
class Edge:
    """Ребро чарта.

    ``to`` - упорядоченный набор конечных вершин, последняя из них -
    ``actual``. ``last_lexical`` - лексическое ребро последнего
    покрытого слова: все рёбра с общим последним словом имеют
    общий набор конечных вершин.
    """

    id: int
    rule: Rule
    dot: int
    start: Vertex
    to: list[Vertex]
    words: tuple[LexicalKey, ...]
    left_context: LexicalKey
    scores: ScoreRecord
    features: FeatureStructure | None = None
    last_lexical: "Edge | None" = None
    children: tuple["Edge", ...] = ()

    @property
    def cat(self) -> Category:
        return self.rule.lhs

    @property
    def next(self) -> Category | None:
        if self.dot < len(self.rule.rhs):
            return self.rule.rhs[self.dot]
        return None

    @property
    def is_passive(self) -> bool:
        return self.next is None

    @property
    def is_active(self) -> bool:
        return self.next is not None

    @property
    def is_lexical(self) -> bool:
        return self.rule.is_lexical

    @property
    def actual(self) -> Vertex:
        return self.to[-1]

    @property
    def to_frames(self) -> list[Frame]:
        return [vertex.frame for vertex in self.to]

    @property
    def effective_last_word(self) -> LexicalKey:
        """Последнее покрытое слово, а без слов - унаследованный левый контекст."""
        return self.words[-1] if self.words else self.left_context

    @property
    def exported_features(self) -> FeatureStructure | None:
        """Признаки, которые пассивное ребро передаёт родителю."""
        if self.features is None or self.is_lexical:
            return self.features
        value = self.features.get(LHS_POSITION)
        return value if isinstance(value, dict) else {}

    def ends_at(self, vertex: Vertex) -> bool:
        return any(end is vertex for end in self.to)

    def identity(self) -> EdgeKey:
        """Ключ дубликата: правило, точка, начало, признаки, последнее слово, контекст."""
        last = self.last_lexical.id if self.last_lexical is not None else -1
        return (
            self.rule.index,
            self.dot,
            self.start.frame,
            canonical(self.features),
            last,
            self.left_context,
        )

    def tree(self) -> str:
        """Скобочная запись лучшего вывода ребра."""
        if self.is_lexical:
            return f"({self.cat} {self.words[0]})"
        inner = " ".join(child.tree() for child in self.children)
        return f"({self.cat} {inner})" if inner else f"({self.cat})"

    def __str__(self) -> str:
        rhs = list(self.rule.rhs)
        rhs.insert(self.dot, ".")
        body = self.rule.key if self.is_lexical else " ".join(rhs)
        features = format_features(self.exported_features) if self.is_passive else ""
        return f"[{self.cat} -> {body}] {self.start.frame}->{self.to_frames} {features}".rstrip()


@dataclass(slots=True)
class Chart:
    """Чарт: вершины по кадрам, рёбра и индекс дубликатов."""

    vertices: list[Vertex] = field(default_factory=list)
    edges: list[Edge] = field(default_factory=list)
    initial_edge: Edge | None = None
    _index: dict[EdgeKey, Edge] = field(default_factory=dict)
    _families: dict[tuple[Frame, LexicalKey], list[Edge]] = field(default_factory=dict)
    _next_id: int = 0

    def new_id(self) -> int:
        self._next_id += 1
        return self._next_id

    def create_vertex(self, frame: Frame) -> Vertex:
        """Создание вершины следующего кадра."""
        if frame != len(self.vertices):
            msg = f"вершины создаются по порядку: ожидался кадр {len(self.vertices)}, получен {frame}"
            raise ValueError(msg)
        vertex = Vertex(frame)
        self.vertices.append(vertex)
        return vertex

    def vertex(self, frame: Frame) -> Vertex:
        return self.vertices[frame]

    def find_duplicate(self, edge: Edge) -> Edge | None:
        return self._index.get(edge.identity())

    def register(self, edge: Edge) -> None:
        """Добавление ребра в чарт и в списки вершин."""
        self.edges.append(edge)
        if not edge.is_lexical:
            self._index[edge.identity()] = edge
        else:
            self._families.setdefault((edge.start.frame, edge.rule.key or ""), []).append(edge)
        if edge.is_passive:
            edge.start.inactive_out.append(edge)
            for vertex in edge.to:
                vertex.inactive_in.append(edge)
        else:
            edge.start.active_out.append(edge)
            for vertex in edge.to:
                vertex.active_in.append(edge)

    def extend(self, edge: Edge, vertex: Vertex) -> None:
        """Добавление конечной вершины к семейству ребра."""
        edge.to.append(vertex)
        if edge.is_passive:
            vertex.inactive_in.append(edge)
        else:
            vertex.active_in.append(edge)

    def family_predecessor(self, start: Frame, key: LexicalKey, end: Frame) -> Edge | None:
        """Лексическое ребро (start, key), последняя вершина которого - ``end``."""
        for edge in self._families.get((start, key), []):
            if edge.actual.frame == end:
                return edge
        return None

    def passive_edges(self) -> Iterator[Edge]:
        return (edge for edge in self.edges if edge.is_passive)

    def active_edges(self) -> Iterator[Edge]:
        return (edge for edge in self.edges if edge.is_active)

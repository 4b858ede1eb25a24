"""Модуль с признаковыми структурами и унификацией.

Признаковая структура - ациклическое отображение атрибута в атом,
переменную или вложенную структуру. Унификация выполняется на частной
графовой копии обоих аргументов, поэтому исходные структуры не меняются
и функции безопасно вызывать из нескольких потоков.
"""

import itertools
from collections.abc import Hashable, Iterable
from typing import Final

from src.domain.lattice_types import Category


class Variable:
    """Переменная признаковой структуры.

    Переменные сравниваются по идентичности: одна и та же переменная
    в двух местах структуры означает разделяемое значение.
    """

    __slots__ = ("name",)

    _counter: Final = itertools.count()

    def __init__(self, name: str | None = None):
        self.name = name or f"_{next(self._counter)}"

    def __repr__(self) -> str:
        return f"?{self.name}"


type FeatureValue = str | Variable | FeatureStructure
type FeatureStructure = dict[str, FeatureValue]
type FeaturePath = tuple[str, ...]
type Signature = tuple[Category, tuple[str | None, ...]]


class _Node:
    """Вершина графа унификации (атом, переменная или сложная структура)."""

    __slots__ = ("arcs", "atom", "forward")

    def __init__(self, atom: str | None = None, arcs: dict[str, "_Node"] | None = None):
        self.atom = atom
        self.arcs = arcs
        self.forward: _Node | None = None

    @property
    def is_variable(self) -> bool:
        return self.atom is None and self.arcs is None


def _deref(node: _Node) -> _Node:
    while node.forward is not None:
        node = node.forward
    return node


class _GraphBuilder:
    """Строит граф из деревьев, сохраняя разделение переменных и словарей."""

    def __init__(self) -> None:
        self._variables: dict[Variable, _Node] = {}
        self._structures: dict[int, _Node] = {}

    def build(self, value: FeatureValue) -> _Node:
        if isinstance(value, str):
            return _Node(atom=value)
        if isinstance(value, Variable):
            if value not in self._variables:
                self._variables[value] = _Node()
            return self._variables[value]
        node = self._structures.get(id(value))
        if node is None:
            node = _Node(arcs={})
            self._structures[id(value)] = node
            for label, child in value.items():
                node.arcs[label] = self.build(child)  # type: ignore[index]
        return node


def _unify_nodes(left: _Node, right: _Node) -> bool:
    left, right = _deref(left), _deref(right)
    if left is right:
        return True
    if left.is_variable:
        left.forward = right
        return True
    if right.is_variable:
        right.forward = left
        return True
    if left.arcs is None or right.arcs is None:
        if left.atom is not None and left.atom == right.atom:
            left.forward = right
            return True
        return False
    left.forward = right
    for label, child in left.arcs.items():
        if label in right.arcs:
            if not _unify_nodes(child, right.arcs[label]):
                return False
        else:
            right.arcs[label] = child
    return True


def _is_acyclic(root: _Node) -> bool:
    on_path: set[int] = set()
    finished: set[int] = set()

    def visit(node: _Node) -> bool:
        node = _deref(node)
        if node.arcs is None or id(node) in finished:
            return True
        if id(node) in on_path:
            return False
        on_path.add(id(node))
        if not all(visit(child) for child in node.arcs.values()):
            return False
        on_path.discard(id(node))
        finished.add(id(node))
        return True

    return visit(root)


def _read_back(node: _Node, memo: dict[int, FeatureValue]) -> FeatureValue:
    node = _deref(node)
    if id(node) in memo:
        return memo[id(node)]
    if node.atom is not None:
        return node.atom
    if node.arcs is None:
        variable = Variable()
        memo[id(node)] = variable
        return variable
    structure: FeatureStructure = {}
    memo[id(node)] = structure
    for label in sorted(node.arcs):
        structure[label] = _read_back(node.arcs[label], memo)
    return structure


def unify(left: FeatureStructure, right: FeatureStructure) -> FeatureStructure | None:
    """Наиболее общий унификатор двух признаковых структур.

    Одинаковые объекты-переменные в обоих аргументах считаются
    одной переменной. Конфликт атомов и нарушение проверки вхождения
    дают ``None``: неудача унификации - значение, а не ошибка.

    :param left: Первая структура
    :param right: Вторая структура
    :return: Унифицированная структура со свежими переменными или None
    """
    builder = _GraphBuilder()
    left_root = builder.build(left)
    right_root = builder.build(right)
    if not _unify_nodes(left_root, right_root):
        return None
    if not _is_acyclic(left_root):
        return None
    result = _read_back(left_root, {})
    return result if isinstance(result, dict) else None


def path_value(structure: FeatureValue | None, path: FeaturePath) -> FeatureValue | None:
    """Значение по пути признаков или None, если путь не определён.

    :param structure: Признаковая структура
    :param path: Последовательность атрибутов
    :return: Значение по пути
    """
    current = structure
    for label in path:
        if not isinstance(current, dict) or label not in current:
            return None
        current = current[label]
    return current


def signature(
    category: Category,
    structure: FeatureStructure | None,
    paths: Iterable[FeaturePath],
) -> Signature:
    """Сигнатура быстрой проверки: категория и атомы по заданным путям.

    Переменная, сложное значение или отсутствие пути дают None.

    :param category: Категория
    :param structure: Признаковая структура (None в режиме скелета)
    :param paths: Пути быстрой проверки
    :return: Сигнатура
    """
    atoms: list[str | None] = []
    for path in paths:
        value = path_value(structure, path)
        atoms.append(value if isinstance(value, str) else None)
    return (category, tuple(atoms))


def quick_check(left: Signature, right: Signature) -> bool:
    """Быстрая проверка совместимости двух сигнатур.

    ``False`` гарантирует неудачу унификации; ``True`` лишь допускает успех.

    :param left: Сигнатура активного ребра
    :param right: Сигнатура пассивного ребра
    :return: Может ли унификация завершиться успешно
    """
    if left[0] != right[0] or len(left[1]) != len(right[1]):
        return False
    return all(a is None or b is None or a == b for a, b in zip(left[1], right[1], strict=True))


def canonical(structure: FeatureValue | None) -> Hashable:
    """Хешируемая каноническая форма структуры.

    Переменные нумеруются в порядке первого появления, поэтому структуры,
    равные с точностью до переименования, дают одну и ту же форму.

    :param structure: Признаковая структура
    :return: Вложенный кортеж
    """
    numbering: dict[Variable, int] = {}

    def walk(value: FeatureValue | None) -> Hashable:
        if value is None or isinstance(value, str):
            return value
        if isinstance(value, Variable):
            if value not in numbering:
                numbering[value] = len(numbering)
            return ("?", numbering[value])
        return tuple((label, walk(value[label])) for label in sorted(value))

    return walk(structure)


def format_features(structure: FeatureValue | None) -> str:
    """Запись структуры в виде ``[agr=pl, case=nom]``."""
    if structure is None:
        return ""
    if isinstance(structure, str):
        return structure
    if isinstance(structure, Variable):
        return repr(structure)
    inner = ", ".join(f"{label}={format_features(value)}" for label, value in sorted(structure.items()))
    return f"[{inner}]"

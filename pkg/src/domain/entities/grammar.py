"""Модуль с вероятностной грамматикой.

Содержит правила с признаковыми ограничениями, лексикон и
прекомпилированные таблицы предсказания: замыкание левого угла для
Seek Down и таблицу словесного предсказания.
"""

from collections.abc import Iterable
from dataclasses import dataclass, field

from src.domain.entities.features import (
    FeaturePath,
    FeatureStructure,
    FeatureValue,
    Variable,
    unify,
)
from src.domain.exceptions import (
    ProbabilityError,
    UndefinedCategoryError,
    UnknownCategoryError,
    UsageError,
)
from src.domain.lattice_types import GOAL_CATEGORY, Category, LexicalKey, LogScore

LHS_POSITION = "LHS"

type ConstraintTerm = FeaturePath | str


@dataclass(frozen=True, slots=True)
class Constraint:
    """Уравнение пути ``LHS.agr=C1.agr`` или ``C1.case=nom``.

    :param left: Путь, начинающийся с позиции правила
    :param right: Второй путь или атом
    """

    left: FeaturePath
    right: ConstraintTerm

    def __str__(self) -> str:
        right = self.right if isinstance(self.right, str) else ".".join(self.right)
        return f"{'.'.join(self.left)}={right}"


def position_name(index: int) -> str:
    """Имя позиции правой части: C1, C2, ..."""
    return f"C{index + 1}"


def nest_path(path: FeaturePath, value: FeatureValue) -> FeatureStructure:
    structure: FeatureStructure = {}
    current = structure
    for label in path[:-1]:
        inner: FeatureStructure = {}
        current[label] = inner
        current = inner
    current[path[-1]] = value
    return structure


@dataclass(frozen=True, slots=True, eq=False)
class Rule:
    """Правило грамматики с логарифмом вероятности.

    Лексические правила имеют пустую правую часть и лексический ключ.
    Шаблон признаков содержит позиции LHS, C1..Cn и переменные,
    разделяемые уравнениями путей.
    """

    index: int
    lhs: Category
    rhs: tuple[Category, ...]
    log_prob: LogScore
    constraints: tuple[Constraint, ...] = ()
    key: LexicalKey | None = None
    template: FeatureStructure | None = None

    @property
    def is_lexical(self) -> bool:
        return self.key is not None

    def __str__(self) -> str:
        if self.is_lexical:
            return f"{self.lhs} -> '{self.key}'"
        return f"{self.lhs} -> {' '.join(self.rhs)}"


def build_template(
    rhs_length: int,
    constraints: Iterable[Constraint],
) -> FeatureStructure | None:
    """Построение шаблона признаков правила из уравнений путей.

    :param rhs_length: Длина правой части
    :param constraints: Уравнения путей
    :return: Шаблон или None, если уравнения противоречивы
    """
    template: FeatureStructure | None = {LHS_POSITION: {}}
    for index in range(rhs_length):
        template[position_name(index)] = {}
    for constraint in constraints:
        if isinstance(constraint.right, str):
            equation = nest_path(constraint.left, constraint.right)
        else:
            shared = Variable()
            equation = nest_path(constraint.left, shared)
            other = nest_path(constraint.right, shared)
            equation = unify(equation, other)
            if equation is None:
                return None
        template = unify(template, equation)
        if template is None:
            return None
    return template


@dataclass(frozen=True, slots=True)
class LexicalEntry:
    """Лексическая статья: категория, оценка и признаки."""

    key: LexicalKey
    category: Category
    log_prob: LogScore
    features: FeatureStructure
    rule: Rule


@dataclass(slots=True)
class Grammar:
    """Вероятностная грамматика с лексиконом и таблицами предсказания.

    :param rules: Нелексические правила в порядке файла
    :param lexicon: Лексикон по ключу
    :param start_category: Стартовая категория
    :param quick_check_paths: Пути быстрой проверки
    """

    rules: list[Rule]
    lexicon: dict[LexicalKey, LexicalEntry]
    start_category: Category
    quick_check_paths: tuple[FeaturePath, ...] = ()
    predict_table: dict[Category, list[tuple[Rule, LogScore]]] = field(default_factory=dict)
    word_predict_table: dict[Category, frozenset[LexicalKey]] = field(default_factory=dict)
    goal_rule: Rule = field(init=False)

    def __post_init__(self) -> None:
        self._validate()
        self.goal_rule = Rule(
            index=-1,
            lhs=GOAL_CATEGORY,
            rhs=(self.start_category,),
            log_prob=0.0,
            template={LHS_POSITION: {}, position_name(0): {}},
        )
        self._compile_tables()

    @property
    def lexical_categories(self) -> set[Category]:
        return {entry.category for entry in self.lexicon.values()}

    @property
    def categories(self) -> list[Category]:
        seen: dict[Category, None] = {}
        for rule in self.rules:
            seen[rule.lhs] = None
            for category in rule.rhs:
                seen[category] = None
        for entry in self.lexicon.values():
            seen[entry.category] = None
        return list(seen)

    def _validate(self) -> None:
        defined = {rule.lhs for rule in self.rules} | self.lexical_categories
        for rule in self.rules:
            if rule.log_prob > 0:
                msg = f"правило {rule}: логарифм вероятности {rule.log_prob} > 0"
                raise ProbabilityError("grammar", msg)
            for category in rule.rhs:
                if category not in defined:
                    raise UndefinedCategoryError(category)
        if self.start_category not in defined:
            raise UndefinedCategoryError(self.start_category)

    def _left_corner_scores(self, category: Category) -> dict[Category, LogScore]:
        """Лучшая оценка пути левого угла от категории до каждой достижимой категории."""
        best: dict[Category, LogScore] = {category: 0.0}
        changed = True
        while changed:
            changed = False
            for rule in self.rules:
                if rule.lhs not in best:
                    continue
                score = best[rule.lhs] + rule.log_prob
                corner = rule.rhs[0]
                if corner not in best or score > best[corner]:
                    best[corner] = score
                    changed = True
        return best

    def _compile_tables(self) -> None:
        for category in self.categories:
            corners = self._left_corner_scores(category)
            self.predict_table[category] = [
                (rule, corners[rule.lhs] + rule.log_prob)
                for rule in self.rules
                if rule.lhs in corners
            ]
            self.word_predict_table[category] = frozenset(
                key for key, entry in self.lexicon.items() if entry.category in corners
            )

    def lex(self, key: LexicalKey) -> LexicalEntry | None:
        return self.lexicon.get(key)

    def closure(self, category: Category) -> list[tuple[Rule, LogScore]]:
        """Правила, вводимые одним шагом Seek Down для категории."""
        return self.predict_table.get(category, [])

    def with_quick_check_paths(self, paths: tuple[FeaturePath, ...]) -> "Grammar":
        """Копия грамматики с другими путями быстрой проверки."""
        return Grammar(
            rules=self.rules,
            lexicon=self.lexicon,
            start_category=self.start_category,
            quick_check_paths=paths,
        )


def predict_words(grammar: Grammar, frontier_categories: Iterable[Category]) -> set[LexicalKey]:
    """Словесное предсказание по прекомпилированной таблице.

    :param grammar: Грамматика
    :param frontier_categories: Категории, ожидаемые активными рёбрами фронта
    :return: Ключи слов, которые могут быть поглощены следующими
    :raises UnknownCategoryError: Если категория отсутствует в грамматике
    """
    keys: set[LexicalKey] = set()
    for category in frontier_categories:
        if category not in grammar.word_predict_table:
            raise UnknownCategoryError(category)
        keys |= grammar.word_predict_table[category]
    return keys


def parse_feature_path(text: str) -> FeaturePath:
    """Разбор пути признаков ``agr.num`` в кортеж."""
    parts = tuple(part for part in text.strip().split(".") if part)
    if not parts:
        msg = f"пустой путь признаков: {text!r}"
        raise UsageError(msg, module="grammar")
    return parts

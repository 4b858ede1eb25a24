"""Модуль с читателем файла грамматики.

Формат файла (UTF-8, ``#`` - комментарий)::

    START S
    QUICKCHECK agr case
    RULE S -> NP VP : 0.0 { C1.agr=C2.agr }
    RULE NP -> n : -0.51 { LHS.agr=C1.agr }
    LEX we n : 0.0 { agr=pl }
"""

import re
from typing import ClassVar

from src.domain.entities.features import FeatureStructure, unify
from src.domain.entities.grammar import (
    LHS_POSITION,
    Constraint,
    ConstraintTerm,
    Grammar,
    LexicalEntry,
    Rule,
    build_template,
    nest_path,
    parse_feature_path,
    position_name,
)
from src.domain.exceptions import GrammarSyntaxError, UsageError
from src.domain.interfaces.base_reader import FormatReader
from src.infrastructure.logging.logger import logger
from src.infrastructure.readers.mixins import LineReaderMixin

_STATEMENT = re.compile(r"^(?P<head>[^{]*?)\s*(?:\{(?P<body>[^}]*)\})?\s*$")
_ATOM = re.compile(r"^[\w\-+']+$")


class GrammarReader(LineReaderMixin, FormatReader[Grammar]):
    """Читатель грамматики: правила, лексикон, стартовая категория и пути быстрой проверки."""

    _format_name: ClassVar[str] = "grammar"
    _module: ClassVar[str] = "grammar"
    _syntax_error = GrammarSyntaxError

    def read_text(self, text: str, source: str = "<text>") -> Grammar:
        """Разбор грамматики с построением таблиц предсказания.

        :param text: Содержимое файла грамматики
        :param source: Имя источника для сообщений
        :return: Грамматика
        :raises GrammarSyntaxError: Синтаксическая ошибка, повтор LEX, нет стартовой категории
        :raises UndefinedCategoryError: Категория правой части нигде не определена
        :raises ProbabilityError: Логарифм вероятности больше 0
        """
        rules: list[Rule] = []
        lexicon: dict[str, LexicalEntry] = {}
        start_category: str | None = None
        quick_check_paths: list[tuple[str, ...]] = []

        for line_number, fields in self._records(text):
            keyword, rest = fields[0].upper(), " ".join(fields[1:])
            if keyword == "RULE":
                rules.append(self._parse_rule(rest, len(rules), line_number))
            elif keyword == "LEX":
                entry = self._parse_lexical(rest, len(lexicon), line_number)
                if entry.key in lexicon:
                    self._fail(line_number, f"повторная лексическая статья {entry.key!r}")
                lexicon[entry.key] = entry
            elif keyword == "START":
                self._expect_fields(fields, 2, line_number, "START <категория>")
                start_category = fields[1]
            elif keyword == "QUICKCHECK":
                quick_check_paths.extend(self._path(token, line_number) for token in fields[1:])
            else:
                self._fail(line_number, f"неизвестная директива {fields[0]!r}")

        if start_category is None:
            if not rules:
                self._fail(0, "нет стартовой категории")
            start_category = rules[0].lhs

        grammar = Grammar(
            rules=rules,
            lexicon=lexicon,
            start_category=start_category,
            quick_check_paths=tuple(quick_check_paths),
        )
        logger.info(
            f"Грамматика {source}: правил {len(rules)}, лексем {len(lexicon)}, "
            f"старт {start_category}",
        )
        return grammar

    def _path(self, token: str, line_number: int) -> tuple[str, ...]:
        try:
            return parse_feature_path(token)
        except UsageError as e:
            self._fail(line_number, e.message)

    def _split(self, rest: str, line_number: int) -> tuple[str, str | None, str | None]:
        """Разделение записи на заголовок, логарифм вероятности и тело ограничений."""
        match = _STATEMENT.match(rest)
        if match is None:
            self._fail(line_number, f"некорректная запись: {rest}")
        head, body = match.group("head"), match.group("body")
        if ":" in head:
            head, log_prob = head.rsplit(":", 1)
            return head.strip(), log_prob.strip(), body
        return head.strip(), None, body

    def _parse_rule(self, rest: str, index: int, line_number: int) -> Rule:
        head, log_prob_text, body = self._split(rest, line_number)
        if log_prob_text is None:
            self._fail(line_number, "ожидалось RULE LHS -> C1 ... : <logprob>")
        if "->" not in head:
            self._fail(line_number, f"в правиле нет стрелки '->': {head}")
        lhs_text, rhs_text = head.split("->", 1)
        lhs = lhs_text.split()
        rhs = tuple(rhs_text.split())
        if len(lhs) != 1:
            self._fail(line_number, f"левая часть должна быть одной категорией: {lhs_text.strip()!r}")
        if not rhs:
            self._fail(line_number, "пустая правая часть допустима только для лексических статей")
        log_prob = self._log_prob(log_prob_text, line_number, f"правило {lhs[0]}")
        constraints = tuple(self._parse_constraints(body, len(rhs), line_number))
        template = build_template(len(rhs), constraints)
        if template is None:
            self._fail(line_number, f"противоречивые ограничения правила {lhs[0]}")
        return Rule(
            index=index,
            lhs=lhs[0],
            rhs=rhs,
            log_prob=log_prob,
            constraints=constraints,
            template=template,
        )

    def _parse_constraints(self, body: str | None, rhs_length: int, line_number: int) -> list[Constraint]:
        """Уравнения путей ``LHS.agr=C1.agr`` и ``C1.case=nom``."""
        if not body or not body.strip():
            return []
        positions = {LHS_POSITION} | {position_name(i) for i in range(rhs_length)}
        constraints: list[Constraint] = []
        for equation in body.split(","):
            if "=" not in equation:
                self._fail(line_number, f"ограничение без '=': {equation.strip()!r}")
            left_text, right_text = (part.strip() for part in equation.split("=", 1))
            left = self._path(left_text, line_number)
            if left[0] not in positions:
                self._fail(line_number, f"путь {left_text!r} должен начинаться с одной из позиций {sorted(positions)}")
            right: ConstraintTerm
            if "." in right_text or right_text in positions:
                right = self._path(right_text, line_number)
                if right[0] not in positions:
                    self._fail(line_number, f"путь {right_text!r} ссылается на несуществующую позицию")
            elif _ATOM.match(right_text):
                right = right_text
            else:
                self._fail(line_number, f"некорректное значение {right_text!r}")
            constraints.append(Constraint(left, right))
        return constraints

    def _parse_lexical(self, rest: str, position: int, line_number: int) -> LexicalEntry:
        head, log_prob_text, body = self._split(rest, line_number)
        parts = head.split()
        if len(parts) != 2:  # noqa: PLR2004
            self._fail(line_number, "ожидалось LEX <ключ> <категория> [: <logprob>] [{ attr=atom }]")
        key, category = parts
        log_prob = 0.0 if log_prob_text is None else self._log_prob(log_prob_text, line_number, f"лексема {key}")
        features = self._parse_lexical_features(body, line_number)
        rule = Rule(
            index=-2 - position,
            lhs=category,
            rhs=(),
            log_prob=log_prob,
            key=key,
            template=features,
        )
        return LexicalEntry(key=key, category=category, log_prob=log_prob, features=features, rule=rule)

    def _parse_lexical_features(self, body: str | None, line_number: int) -> FeatureStructure:
        features: FeatureStructure = {}
        if not body or not body.strip():
            return features
        for assignment in body.split(","):
            if "=" not in assignment:
                self._fail(line_number, f"признак без '=': {assignment.strip()!r}")
            path_text, value = (part.strip() for part in assignment.split("=", 1))
            if not _ATOM.match(value):
                self._fail(line_number, f"значение признака лексемы должно быть атомом: {value!r}")
            unified = unify(features, nest_path(self._path(path_text, line_number), value))
            if unified is None:
                self._fail(line_number, f"противоречивые признаки: {body.strip()}")
            features = unified
        return features


def parse_grammar(text: str) -> Grammar:
    """Разбор текста грамматики."""
    return GrammarReader().read_text(text)

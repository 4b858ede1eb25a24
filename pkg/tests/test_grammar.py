import random

import pytest

from src.domain.entities.features import path_value
from src.domain.entities.grammar import predict_words
from src.domain.exceptions import (
    GrammarSyntaxError,
    ProbabilityError,
    UndefinedCategoryError,
    UnknownCategoryError,
)
from src.infrastructure.readers import parse_grammar

from .corpus import random_grammar
from .oracle import seek_down_closure


def test_toy_grammar(toy_grammar):
    assert toy_grammar.start_category == 'S'
    assert [str(rule) for rule in toy_grammar.rules] == ['S -> NP VP', 'NP -> n', 'VP -> v']
    assert toy_grammar.lex('we').category == 'n'
    assert toy_grammar.lex('meet').rule.is_lexical
    assert toy_grammar.lex('tomorrow') is None


def test_closure_of_start_category(toy_grammar):
    closure = {str(rule): score for rule, score in toy_grammar.closure('S')}

    assert closure == {'S -> NP VP': 0.0, 'NP -> n': pytest.approx(-0.51)}


def test_closure_of_lexical_category_is_empty(toy_grammar):
    assert toy_grammar.closure('n') == []


def test_closure_path_score_keeps_best_path():
    grammar = parse_grammar(
        """
        RULE S -> A : -1.0
        RULE S -> B : -0.1
        RULE A -> x : -0.5
        RULE B -> A : -0.2
        LEX w x
        """,
    )

    closure = {str(rule): score for rule, score in grammar.closure('S')}

    assert closure['A -> x'] == pytest.approx(-0.1 - 0.2 - 0.5)


def test_predict_words(toy_grammar):
    assert predict_words(toy_grammar, {'S'}) == {'we'}
    assert predict_words(toy_grammar, {'VP'}) == {'meet'}
    assert predict_words(toy_grammar, {'S', 'VP'}) == {'we', 'meet'}
    assert predict_words(toy_grammar, set()) == set()


def test_predict_words_unknown_category(toy_grammar):
    with pytest.raises(UnknownCategoryError):
        predict_words(toy_grammar, {'ADV'})


def test_start_defaults_to_first_rule():
    grammar = parse_grammar('RULE X -> n : 0.0\nLEX a n')

    assert grammar.start_category == 'X'


def test_no_rules_and_no_start():
    with pytest.raises(GrammarSyntaxError, match='нет стартовой категории'):
        parse_grammar('LEX a n')


def test_undefined_category():
    with pytest.raises(UndefinedCategoryError) as error:
        parse_grammar('RULE S -> NP VP : 0.0\nRULE NP -> n : 0.0\nLEX a n')

    assert error.value.category == 'VP'
    assert error.value.exit_code == 2


def test_positive_log_probability():
    with pytest.raises(ProbabilityError):
        parse_grammar('RULE S -> n : 0.5\nLEX a n')


def test_duplicate_lexical_entry():
    with pytest.raises(GrammarSyntaxError) as error:
        parse_grammar('RULE S -> n : 0.0\nLEX a n\nLEX a n')

    assert error.value.line_number == 3


@pytest.mark.parametrize(
    'text',
    [
        'RULE S n : 0.0',
        'RULE S -> : 0.0',
        'RULE S -> n',
        'RULE S T -> n : 0.0',
        'WORD a n',
        'RULE S -> n : 0.0 { C1.agr }',
        'RULE S -> n : 0.0 { C3.agr=pl }',
    ],
)
def test_syntax_errors(text):
    with pytest.raises(GrammarSyntaxError):
        parse_grammar(text + '\nLEX a n')


def test_contradictory_constraints():
    with pytest.raises(GrammarSyntaxError, match='противоречивые'):
        parse_grammar('RULE S -> n : 0.0 { C1.agr=sg, C1.agr=pl }\nLEX a n')


def test_constraints_share_values():
    grammar = parse_grammar(
        """
        START S
        QUICKCHECK agr case
        RULE S -> NP VP : 0.0 { C1.agr=C2.agr, C1.case=nom }
        RULE NP -> n : 0.0 { LHS.agr=C1.agr }
        RULE VP -> v : 0.0
        LEX we n { agr=pl }
        LEX meet v
        """,
    )
    template = grammar.rules[0].template

    assert grammar.quick_check_paths == (('agr',), ('case',))
    assert path_value(template, ('C1', 'case')) == 'nom'
    assert path_value(template, ('C1', 'agr')) is path_value(template, ('C2', 'agr'))
    assert grammar.lex('we').features == {'agr': 'pl'}


def test_comments_and_blank_lines_are_ignored():
    grammar = parse_grammar('# комментарий\n\nRULE S -> n : -0.1  # хвост\nLEX a n : -0.2\n')

    assert len(grammar.rules) == 1
    assert grammar.lex('a').log_prob == pytest.approx(-0.2)


def test_lexical_rule_indices_are_distinct(toy_grammar):
    indices = {entry.rule.index for entry in toy_grammar.lexicon.values()}

    assert indices == {-2, -3}


def test_closure_matches_path_enumeration():
    rng = random.Random(31)
    for _ in range(200):
        grammar = random_grammar(rng, max_rules=10)
        for category in grammar.categories:
            closure = {rule.index: score for rule, score in grammar.closure(category)}

            assert closure == pytest.approx(seek_down_closure(grammar, category)), category

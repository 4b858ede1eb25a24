import math
import random

import pytest

from src.application.engine import parse_lattice
from src.config import ParserConfig
from src.domain.entities.features import canonical
from src.domain.entities.hypotheses import Lattice
from src.domain.entities.scores import ModelWeights
from src.domain.exceptions import SizeLimitError
from src.infrastructure.readers import parse_grammar

from .corpus import random_corpus
from .oracle import MAX_FRAMES, exhaustive_parse, reachable_items

ORACLE_WEIGHTS = ModelWeights(1.0, 0.0, 0.0, 1.0)
NO_BEAM = ParserConfig(weights=ORACLE_WEIGHTS, beam_offset=math.inf, prosody=False)


def _engine_items(result_set, *, lexical: bool = False) -> dict[tuple, float]:
    """Лучшая оценка каждого пассивного элемента (категория, начало, конец)."""
    items: dict[tuple, float] = {}
    for edge in result_set.chart.passive_edges():
        if edge.is_lexical and not lexical:
            continue
        for frame in edge.scores.inside_acoustic:
            key = (edge.cat, edge.start.frame, frame)
            score = edge.scores.inside_at(frame, ORACLE_WEIGHTS)
            items[key] = max(items.get(key, -math.inf), score)
    return items


def test_oracle_toy_items(toy_grammar, toy_lattice):
    items = exhaustive_parse(toy_lattice, toy_grammar)

    assert items[('NP', 0, 10)].score == pytest.approx(-5.51)
    assert items[('VP', 10, 30)].score == pytest.approx(-12.69)
    assert items[('S', 0, 30)].score == pytest.approx(-18.20)
    assert items[('S', 0, 30)].tree == '(S (NP (n we)) (VP (v meet)))'
    assert items[('n', 0, 10)].lexical


def test_oracle_with_bigram_matches_engine(toy_grammar, toy_lattice, toy_bigram, toy_models):
    items = exhaustive_parse(toy_lattice, toy_grammar, toy_bigram)
    result_set = parse_lattice(toy_lattice, toy_grammar, toy_models, ParserConfig(beam_offset=math.inf))

    assert items[('S', 0, 30)].score == pytest.approx(-20.5)
    assert result_set.best.score == pytest.approx(items[('S', 0, 30)].score)


def test_oracle_empty_lattice(toy_grammar):
    assert exhaustive_parse(Lattice(frame_count=10), toy_grammar) == {}


def test_oracle_size_limits(toy_grammar):
    with pytest.raises(SizeLimitError):
        exhaustive_parse(Lattice(frame_count=MAX_FRAMES + 1), toy_grammar)

    rules = '\n'.join(f'RULE S -> n : -0.{index}' for index in range(20))
    large = parse_grammar(f'START S\n{rules}\nLEX we n')
    with pytest.raises(SizeLimitError):
        exhaustive_parse(Lattice(frame_count=10), large)


def test_oracle_ignores_hypothesis_order(toy_grammar, toy_lattice):
    shuffled = list(toy_lattice.hypotheses)
    random.Random(3).shuffle(shuffled)
    reordered = Lattice(frame_count=toy_lattice.frame_count, hypotheses=shuffled)

    assert exhaustive_parse(reordered, toy_grammar) == exhaustive_parse(toy_lattice, toy_grammar)


def test_engine_matches_exhaustive_parse():
    for grammar, lattice in random_corpus(seed=11):
        expected = {
            span: item.score for span, item in reachable_items(grammar, exhaustive_parse(lattice, grammar)).items()
        }
        actual = _engine_items(parse_lattice(lattice, grammar, config=NO_BEAM))

        assert actual.keys() == expected.keys(), lattice.name
        for span, score in expected.items():
            assert actual[span] == pytest.approx(score, abs=1e-9), (lattice.name, span)


@pytest.mark.parametrize('beam_offset', [2.0, 4.0, 8.0])
def test_beam_never_adds_or_improves(beam_offset):
    beamed = ParserConfig(weights=ORACLE_WEIGHTS, beam_offset=beam_offset, prosody=False)
    for grammar, lattice in random_corpus(seed=5, grammars=10):
        full = parse_lattice(lattice, grammar, config=NO_BEAM)
        pruned = parse_lattice(lattice, grammar, config=beamed)
        full_items = _engine_items(full, lexical=True)
        pruned_items = _engine_items(pruned, lexical=True)

        assert pruned_items.keys() <= full_items.keys(), lattice.name
        for span, score in pruned_items.items():
            assert score <= full_items[span] + 1e-9, (lattice.name, span)
        assert pruned.stats.total <= full.stats.total
        if pruned.spanning_results:
            assert full.spanning_results
            assert max(r.score for r in pruned.spanning_results) <= max(r.score for r in full.spanning_results) + 1e-9


def test_prediction_keeps_every_parse():
    predicting = ParserConfig(weights=ORACLE_WEIGHTS, beam_offset=math.inf, prosody=False, prediction=True)
    for grammar, lattice in random_corpus(seed=13, grammars=10):
        plain = parse_lattice(lattice, grammar, config=NO_BEAM)
        filtered = parse_lattice(lattice, grammar, config=predicting)

        assert _engine_items(filtered) == pytest.approx(_engine_items(plain)), lattice.name
        assert filtered.stats.total <= plain.stats.total


def _edge_keys(result_set) -> set[tuple]:
    """Ключи рёбер без номеров, зависящих от прогона."""
    keys = set()
    for edge in result_set.chart.edges:
        last = edge.last_lexical
        word = (last.start.frame, last.to[0].frame, last.words[0]) if last is not None else None
        keys.add((edge.rule.index, edge.dot, edge.start.frame, canonical(edge.features), word, edge.left_context))
    return keys


@pytest.mark.parametrize(('narrow', 'wide'), [(2.0, 4.0), (4.0, 8.0), (8.0, math.inf)])
def test_beam_widths_nest(narrow, wide):
    pruned_total = 0
    for grammar, lattice in random_corpus(seed=5, grammars=10):
        inner = parse_lattice(lattice, grammar, config=ParserConfig(ORACLE_WEIGHTS, narrow, prosody=False))
        outer = parse_lattice(lattice, grammar, config=ParserConfig(ORACLE_WEIGHTS, wide, prosody=False))
        pruned_total += inner.counters.pruned
        inner_items = _engine_items(inner, lexical=True)
        outer_items = _engine_items(outer, lexical=True)

        assert _edge_keys(inner) <= _edge_keys(outer), lattice.name
        assert inner_items.keys() <= outer_items.keys(), lattice.name
        for span, score in inner_items.items():
            assert score <= outer_items[span] + 1e-9, (lattice.name, span)
        if inner.spanning_results:
            assert outer.spanning_results
            assert max(r.score for r in inner.spanning_results) <= max(r.score for r in outer.spanning_results) + 1e-9

    if narrow == 2.0:
        assert pruned_total > 0

import math

import pytest

from src.application.engine import LatticeParser, parse_lattice
from src.application.engine.mixins.base import combined_score
from src.config import ParserConfig
from src.domain.entities.hypotheses import Lattice, WordHypothesis
from src.domain.entities.models import ScoringModels
from src.domain.entities.scores import ModelWeights
from src.domain.exceptions import EmptyLatticeError, UnknownWordError
from src.infrastructure.readers import GrammarReader, LatticeReader, TrigramReader, load_lattice, parse_grammar

NO_BEAM = ParserConfig(beam_offset=math.inf)


def test_toy_trace_spanning_result(toy_grammar, toy_lattice, toy_models):
    result_set = parse_lattice(toy_lattice, toy_grammar, toy_models)
    best = result_set.best

    assert best is not None
    assert best.spanning
    assert not result_set.partial
    assert best.words == ('we', 'meet')
    assert (best.category, best.start, best.end) == ('S', 0, 30)
    assert best.grammar == pytest.approx(-1.20, abs=1e-9)
    assert best.acoustic == pytest.approx(-17.0, abs=1e-9)
    assert best.bigram == pytest.approx(-2.3, abs=1e-9)
    assert best.prosody == 0.0
    assert best.score == pytest.approx(-20.5, abs=1e-9)
    assert best.tree == '(S (NP (n we)) (VP (v meet)))'


def test_toy_trace_edge_statistics(toy_grammar, toy_lattice, toy_models):
    result_set = parse_lattice(toy_lattice, toy_grammar, toy_models)

    assert result_set.stats.total == 10
    assert result_set.stats.passive == 5
    assert result_set.stats.per_category == {'NP': 1, 'S': 1, 'VP': 1, 'n': 1, 'v': 1}
    assert result_set.counters.pushed == 4
    assert result_set.counters.processed == 4
    assert result_set.counters.pruned == 0


def test_toy_spanning_edge_scores(toy_grammar, toy_lattice, toy_models):
    result_set = parse_lattice(toy_lattice, toy_grammar, toy_models)
    spanning = [edge for edge in result_set.chart.passive_edges() if edge.cat == 'S']

    assert len(spanning) == 1
    scores = spanning[0].scores
    assert scores.inside_acoustic.entries == {30: pytest.approx(-17.0)}
    assert scores.inside_grammar == pytest.approx(-1.20)
    assert scores.inside_bigram == pytest.approx(-2.3)


def test_combined_score_of_toy_pair(toy_grammar, toy_lattice, toy_models):
    parser = LatticeParser(toy_grammar, toy_models)
    parser.parse_lattice(toy_lattice)
    chart = parser.chart
    active = next(edge for edge in chart.active_edges() if str(edge.rule) == 'VP -> v')
    passive = next(edge for edge in chart.passive_edges() if edge.is_lexical and edge.words == ('meet',))

    assert combined_score(active, passive, ModelWeights(), toy_models) == pytest.approx(-20.5)


def test_dot_shift_conservation(toy_grammar, toy_lattice, toy_models):
    parser = LatticeParser(toy_grammar, toy_models, NO_BEAM)
    parser.parse_lattice(toy_lattice)
    weights = parser.weights
    for edge in parser.chart.edges:
        if len(edge.children) < 2:
            continue
        assert edge.scores.inside_grammar == pytest.approx(
            sum(child.scores.inside_grammar for child in edge.children) + edge.rule.log_prob,
        )
        for frame in edge.to_frames:
            context = edge.scores.outside_at(frame, weights) - edge.scores.inside_at(frame, weights)
            assert context == pytest.approx(0.0)


def test_results_delivered_to_sink(toy_grammar, toy_lattice, toy_models):
    delivered = []

    parse_lattice(toy_lattice, toy_grammar, toy_models, sink=delivered.append)

    assert [result.words for result in delivered] == [('we', 'meet')]


def test_results_reported_as_found(toy_grammar, toy_models):
    parser = LatticeParser(toy_grammar, toy_models)
    parser.start()
    for frame in range(1, 10):
        assert parser.run_cycle(frame, []) == []
    parser.run_cycle(10, [WordHypothesis(0, 10, 'we', -5.0)])
    for frame in range(11, 30):
        parser.run_cycle(frame, [])

    found = parser.run_cycle(30, [WordHypothesis(10, 30, 'meet', -12.0)])

    assert [result.words for result in found] == [('we', 'meet')]


def test_partial_result_without_spanning_parse(toy_grammar):
    lattice = load_lattice('FRAMES 40\nWORD we 0 10 -5.0\nWORD meet 10 30 -12.0\nWORD we 30 40 -5.0')

    result_set = parse_lattice(lattice, toy_grammar)

    assert result_set.partial
    assert result_set.best.partial
    assert result_set.best.words == ('we', 'meet')
    assert result_set.best.end == 30
    assert result_set.spanning_results == []


def test_partial_falls_back_to_any_category(toy_grammar):
    lattice = load_lattice('FRAMES 20\nWORD we 0 10 -5.0\nWORD we 10 20 -5.0')

    result_set = parse_lattice(lattice, toy_grammar)

    assert result_set.partial
    assert result_set.best.words == ('we',)
    assert result_set.best.category in {'NP', 'n'}


def test_inherit_extends_family(toy_grammar):
    lattice = load_lattice(
        'FRAMES 30\nWORD we 0 10 -5.0\nWORD we 0 11 -5.2\nWORD meet 11 30 -12.0',
    )
    parser = LatticeParser(toy_grammar, config=NO_BEAM)

    result_set = parser.parse_lattice(lattice)

    noun_phrase = next(edge for edge in parser.chart.passive_edges() if edge.cat == 'NP')
    assert noun_phrase.to_frames == [10, 11]
    assert noun_phrase.scores.inside_acoustic.entries == {10: -5.0, 11: pytest.approx(-5.2)}
    assert result_set.best.spanning
    assert result_set.best.acoustic == pytest.approx(-17.2)
    assert result_set.best.score == pytest.approx(-17.2 - 1.2)


def test_inherit_matches_single_end_sublattices(toy_grammar):
    family = load_lattice(
        'FRAMES 30\nWORD we 0 10 -5.0\nWORD we 0 11 -5.2\nWORD meet 10 30 -12.0\nWORD meet 11 30 -11.5',
    )
    first = load_lattice('FRAMES 30\nWORD we 0 10 -5.0\nWORD meet 10 30 -12.0')
    second = load_lattice('FRAMES 30\nWORD we 0 11 -5.2\nWORD meet 11 30 -11.5')

    scores = [parse_lattice(lattice, toy_grammar, config=NO_BEAM).best.score for lattice in (family, first, second)]

    assert scores[0] == pytest.approx(max(scores[1], scores[2]), abs=1e-9)


def test_empty_lattice(toy_grammar):
    with pytest.raises(EmptyLatticeError):
        parse_lattice(Lattice(frame_count=10), toy_grammar)


def test_unknown_word(toy_grammar):
    with pytest.raises(UnknownWordError) as error:
        parse_lattice(load_lattice('FRAMES 10\nWORD tomorrow 0 10 -1.0'), toy_grammar)

    assert error.value.key == 'tomorrow'


def test_agreement_blocks_mismatched_subject(data_dir):
    grammar = GrammarReader().read_path(data_dir / 'agreement.grammar')
    lattice = LatticeReader().read_path(data_dir / 'agreement.lattice')

    result_set = parse_lattice(lattice, grammar, config=NO_BEAM)

    assert result_set.best.words == ('we', 'meet')
    assert result_set.counters.quick_check_rejections >= 1


def test_skeleton_ignores_agreement(data_dir):
    grammar = GrammarReader().read_path(data_dir / 'agreement.grammar')
    lattice = LatticeReader().read_path(data_dir / 'agreement.lattice')

    result_set = parse_lattice(lattice, grammar, config=ParserConfig(beam_offset=math.inf, skeleton=True))

    assert result_set.best.words == ('he', 'meet')


def test_unification_failure_without_quick_check(data_dir):
    grammar = GrammarReader().read_path(data_dir / 'agreement.grammar').with_quick_check_paths(())
    lattice = LatticeReader().read_path(data_dir / 'agreement.lattice')

    result_set = parse_lattice(lattice, grammar, config=NO_BEAM)

    assert result_set.best.words == ('we', 'meet')
    assert result_set.counters.quick_check_rejections == 0
    assert result_set.counters.unification_failures >= 1


def test_pause_between_constituents(data_dir):
    grammar = GrammarReader().read_path(data_dir / 'toy_pause.grammar')
    lattice = LatticeReader().read_path(data_dir / 'toy_pause.lattice')

    result_set = parse_lattice(lattice, grammar)

    assert result_set.best.words == ('we', '<pause>', 'meet')
    assert result_set.best.score == pytest.approx(-18.0 - 1.0 - 0.51 - 0.69)


def test_duplicate_predictions_are_merged():
    grammar = parse_grammar(
        """
        RULE S -> X Y : 0.0
        RULE S -> X Z : -1.0
        RULE X -> n : 0.0
        RULE Y -> n : 0.0
        RULE Z -> Y : 0.0
        LEX w n
        """,
    )
    parser = LatticeParser(grammar, config=NO_BEAM)

    result_set = parser.parse_lattice(load_lattice('FRAMES 10\nWORD w 0 5 -1.0\nWORD w 5 10 -1.0'))

    predicted = [
        edge for edge in parser.chart.active_edges() if str(edge.rule) == 'Y -> n' and edge.start.frame == 5
    ]
    assert len(predicted) == 1
    assert parser.counters.merges >= 1
    assert predicted[0].scores.outside_grammar == pytest.approx(0.0)
    assert result_set.best.tree == '(S (X (n w)) (Y (n w)))'


def test_weights_scale_transition_models(toy_grammar, toy_lattice, toy_models):
    config = ParserConfig(weights=ModelWeights(1.0, 0.0, 1.0, 1.0))

    result_set = parse_lattice(toy_lattice, toy_grammar, toy_models, config)

    assert result_set.best.score == pytest.approx(-18.2)
    assert result_set.best.bigram == pytest.approx(-2.3)


def test_prosody_charged_when_trigram_present(toy_grammar, toy_lattice, toy_bigram, data_dir):
    trigram = TrigramReader().read_path(data_dir / 'toy.trigram')
    models = ScoringModels(bigram=toy_bigram, trigram=trigram)

    with_prosody = parse_lattice(toy_lattice, toy_grammar, models)
    without = parse_lattice(toy_lattice, toy_grammar, models, ParserConfig(prosody=False))

    assert with_prosody.best.prosody == pytest.approx(-2.0 - 0.1)
    assert without.best.prosody == 0.0

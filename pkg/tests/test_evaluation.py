import itertools
import random
from functools import cache

import pytest

from src.application.engine import LatticeParser, parse_lattice
from src.application.evaluation import (
    align,
    best_lattice_path,
    covered_string,
    edge_stats,
    prosody_pruned_delta,
    standard_word_accuracy,
    strict_word_accuracy,
)
from src.domain.entities.chart import Chart
from src.domain.entities.models import BigramModel
from src.domain.entities.results import EdgeStats, ParseResultSet, RunCounters
from src.domain.exceptions import EmptyResultError
from src.infrastructure.readers import load_lattice

ALPHABET = ('a', 'b', 'c')

HAND_PAIRS = [
    (['we', 'meet', 'tomorrow'], ['we', 'meet'], (0, 1, 0), 2 / 3),
    (['we', 'meet'], ['we', 'meet'], (0, 0, 0), 1.0),
    (['we', 'meet'], ['you', 'meet'], (1, 0, 0), 0.5),
    (['a', 'b', 'c'], [], (0, 3, 0), 0.0),
    (['a', 'b'], ['a', 'x', 'b'], (0, 0, 1), 0.5),
    (['a', 'b', 'c', 'd'], ['a', 'c', 'd'], (0, 1, 0), 0.75),
    (['a', 'b', 'c', 'd'], ['a', 'x', 'c'], (1, 1, 0), 0.5),
    (['x'], ['y', 'z'], (1, 0, 1), -1.0),
    (['the', 'dog', 'we', 'meet'], ['dog', 'we', 'meet'], (0, 1, 0), 0.75),
    (['they', 'meet', 'a', 'dog'], ['they', 'meet', 'the', 'dog'], (1, 0, 0), 0.75),
]


def _distance(reference: tuple[str, ...], hypothesis: tuple[str, ...]) -> int:
    @cache
    def go(i: int, j: int) -> int:
        if i == len(reference):
            return len(hypothesis) - j
        if j == len(hypothesis):
            return len(reference) - i
        return min(
            go(i + 1, j + 1) + (reference[i] != hypothesis[j]),
            go(i + 1, j) + 1,
            go(i, j + 1) + 1,
        )

    return go(0, 0)


def _sequences(max_length: int):
    for length in range(max_length + 1):
        yield from itertools.product(ALPHABET, repeat=length)


@pytest.mark.parametrize(('reference', 'covered', 'errors', 'accuracy'), HAND_PAIRS)
def test_strict_accuracy_hand_pairs(reference, covered, errors, accuracy):
    report = strict_word_accuracy(reference, covered)

    assert (report.substitutions, report.deletions, report.insertions) == errors
    assert report.word_accuracy == pytest.approx(accuracy, abs=1e-12)
    assert report.n_ref == len(reference)
    assert report.covered_words == tuple(covered)


def test_alignment_matches_brute_force_short_sequences():
    sequences = list(_sequences(4))
    for reference in sequences:
        if not reference:
            continue
        for hypothesis in sequences:
            alignment = align(reference, hypothesis)
            assert sum(alignment) == _distance(reference, hypothesis), (reference, hypothesis)


def test_alignment_matches_brute_force_long_sequences():
    rng = random.Random(20240613)
    for _ in range(3000):
        reference = tuple(rng.choice(ALPHABET) for _ in range(rng.randint(1, 8)))
        hypothesis = tuple(rng.choice(ALPHABET) for _ in range(rng.randint(0, 8)))
        substitutions, deletions, insertions = align(reference, hypothesis)

        assert substitutions + deletions + insertions == _distance(reference, hypothesis)
        assert len(hypothesis) == len(reference) - deletions + insertions
        assert min(substitutions, deletions, insertions) >= 0


def test_identity_is_perfect():
    for reference in _sequences(5):
        if reference:
            assert strict_word_accuracy(reference, reference).word_accuracy == 1.0


def test_truncation_never_increases_accuracy():
    for reference in _sequences(6):
        if not reference:
            continue
        scores = [strict_word_accuracy(reference, reference[:cut]).word_accuracy for cut in range(len(reference) + 1)]
        assert scores == sorted(scores)


def test_empty_reference_rejected():
    with pytest.raises(ValueError, match='пуста'):
        strict_word_accuracy([], ['we'])


def test_covered_string_of_parse(toy_grammar, toy_lattice, toy_models):
    result_set = parse_lattice(toy_lattice, toy_grammar, toy_models)

    assert covered_string(result_set) == ('we', 'meet')


def test_covered_string_without_result():
    empty = ParseResultSet(
        lattice_name='empty',
        frame_count=10,
        results=[],
        best=None,
        partial=False,
        stats=EdgeStats(0, 0),
        counters=RunCounters(),
    )

    with pytest.raises(EmptyResultError):
        covered_string(empty)


def test_edge_stats_of_fresh_chart(toy_grammar):
    assert edge_stats(Chart()) == EdgeStats(0, 0, {})

    parser = LatticeParser(toy_grammar)
    parser.start()
    stats = edge_stats(parser.chart)

    assert stats.total == 3
    assert stats.passive == 0
    assert stats.per_category == {}


@pytest.mark.parametrize(
    ('on', 'off', 'expected'),
    [(29, 35, 6 / 35), (10, 10, 0.0), (0, 0, 0.0)],
)
def test_prosody_pruned_delta(on, off, expected):
    assert prosody_pruned_delta(EdgeStats(on, 0), EdgeStats(off, 0)) == pytest.approx(expected)


def test_best_lattice_path_with_bigram(toy_lattice, toy_bigram):
    words, score = best_lattice_path(toy_lattice, toy_bigram)

    assert words == ('we', 'meet')
    assert score == pytest.approx(-19.3, abs=1e-9)


def test_best_lattice_path_prefers_bigram_context():
    lattice = load_lattice(
        """
        FRAMES 20
        WORD we 0 10 -5.0
        WORD wee 0 10 -4.0
        WORD meet 10 20 -5.0
        """,
    )
    bigram = BigramModel(scores={('<s>', 'we'): -0.5, ('we', 'meet'): -0.5}, default_score=-5.0)

    words, score = best_lattice_path(lattice, bigram)

    assert words == ('we', 'meet')
    assert score == pytest.approx(-11.0, abs=1e-9)


def test_best_lattice_path_unreachable_end():
    lattice = load_lattice('FRAMES 30\nWORD we 0 10 -5.0\nWORD meet 12 30 -5.0\n')

    words, score = best_lattice_path(lattice, BigramModel())

    assert words == ()
    assert score == float('-inf')


def test_standard_accuracy_ignores_grammar(toy_lattice, toy_bigram):
    accuracy, words = standard_word_accuracy(['we', 'meet', 'tomorrow'], toy_lattice, toy_bigram)

    assert words == ('we', 'meet')
    assert accuracy == pytest.approx(2 / 3)

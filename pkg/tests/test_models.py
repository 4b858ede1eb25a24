import math

import pytest

from src.domain.entities.chart import Vertex
from src.domain.entities.hypotheses import ProsodyHypothesis
from src.domain.entities.models import (
    BigramModel,
    CategoryTrigram,
    ProsodyAttribute,
    attach_prosody,
    bigram_trans,
    prosody_trans,
)
from src.domain.exceptions import OverlappingProsodyError
from src.domain.lattice_types import LOG_FLOOR, SENTENCE_BEGIN, BoundaryClass


def test_bigram_trans_stored_and_default(toy_bigram):
    assert bigram_trans(toy_bigram, SENTENCE_BEGIN, 'we') == -0.7
    assert bigram_trans(toy_bigram, 'we', 'we') == -5.0
    assert bigram_trans(BigramModel(), 'a', 'b') == 0.0


def _trigram() -> CategoryTrigram:
    return CategoryTrigram(
        category_of={'we': 'N', 'meet': 'V'},
        scores={
            ('V', BoundaryClass.B0, 'N'): -0.1,
            ('V', BoundaryClass.B3, 'N'): -3.0,
        },
        default_score=-2.0,
    )


def test_prosody_trans_takes_best_boundary_class():
    attribute = ProsodyAttribute.from_hypothesis(ProsodyHypothesis(0, 5, 0.1, 0.0, 0.9, 0.0))

    score = prosody_trans(attribute, 'meet', 'we', _trigram())

    assert score == pytest.approx(max(math.log(0.1) - 0.1, math.log(0.9) - 3.0))


def test_neutral_attribute_is_no_boundary():
    attribute = ProsodyAttribute.neutral()

    assert attribute.log_p(BoundaryClass.B0) == 0.0
    assert attribute.log_p(BoundaryClass.B3) == LOG_FLOOR
    assert prosody_trans(attribute, 'meet', 'we', _trigram()) == pytest.approx(-0.1)


def test_attach_prosody_uses_enclosing_interval():
    interval = ProsodyHypothesis(9, 11, 0.1, 0.6, 0.2, 0.1)

    inside = attach_prosody(Vertex(10), [interval])
    outside = attach_prosody(Vertex(11), [interval])

    assert inside.prosody == ProsodyAttribute.from_hypothesis(interval)
    assert outside.prosody == ProsodyAttribute.neutral()


def test_attach_prosody_rejects_overlap():
    intervals = [ProsodyHypothesis(0, 5, 1, 0, 0, 0), ProsodyHypothesis(3, 8, 1, 0, 0, 0)]

    with pytest.raises(OverlappingProsodyError):
        attach_prosody(Vertex(4), intervals)

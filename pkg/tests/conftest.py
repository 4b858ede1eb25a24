"""Общие фикстуры тестов: пути к данным, игрушечная грамматика и модели."""

from pathlib import Path

import pytest

from src.config import SettingsManager
from src.domain.entities.grammar import Grammar
from src.domain.entities.hypotheses import Lattice
from src.domain.entities.models import BigramModel, ScoringModels
from src.infrastructure.readers import BigramReader, GrammarReader, LatticeReader

DATA_DIR = Path(__file__).resolve().parent.parent / 'data'


@pytest.fixture(autouse=True)
def _fresh_settings():
    SettingsManager.reset()
    yield
    SettingsManager.reset()


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def toy_grammar() -> Grammar:
    return GrammarReader().read_path(DATA_DIR / 'toy.grammar')


@pytest.fixture
def toy_lattice() -> Lattice:
    return LatticeReader().read_path(DATA_DIR / 'toy.lattice')


@pytest.fixture
def toy_bigram() -> BigramModel:
    return BigramReader().read_path(DATA_DIR / 'toy.bigram')


@pytest.fixture
def toy_models(toy_bigram: BigramModel) -> ScoringModels:
    return ScoringModels(bigram=toy_bigram)

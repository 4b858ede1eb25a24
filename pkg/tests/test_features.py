import random

from src.domain.entities.features import (
    Variable,
    canonical,
    path_value,
    quick_check,
    signature,
    unify,
)

PATHS = (('agr',), ('case',), ('agr', 'num'))
ATOMS = ('sg', 'pl', 'nom', 'acc')


def test_unify_merges_disjoint_attributes():
    assert unify({'agr': 'pl'}, {'case': 'nom'}) == {'agr': 'pl', 'case': 'nom'}


def test_unify_atom_clash_fails():
    assert unify({'agr': 'pl'}, {'agr': 'sg'}) is None


def test_unify_atom_against_structure_fails():
    assert unify({'agr': 'pl'}, {'agr': {'num': 'pl'}}) is None


def test_shared_variable_propagates_value():
    shared = Variable()
    template = {'LHS': {'agr': shared}, 'C1': {'agr': shared}}

    result = unify(template, {'C1': {'agr': 'pl'}})

    assert result is not None
    assert path_value(result, ('LHS', 'agr')) == 'pl'


def test_shared_variable_detects_conflict():
    shared = Variable()
    template = {'C1': {'agr': shared}, 'C2': {'agr': shared}}
    first = unify(template, {'C1': {'agr': 'sg'}})

    assert first is not None
    assert unify(first, {'C2': {'agr': 'pl'}}) is None


def test_unify_leaves_arguments_untouched():
    shared = Variable()
    template = {'LHS': {'agr': shared}, 'C1': {'agr': shared}}
    before = canonical(template)

    unify(template, {'C1': {'agr': 'pl'}})

    assert canonical(template) == before


def test_canonical_ignores_variable_names():
    first, second = Variable('a'), Variable('b')

    assert canonical({'x': first, 'y': first}) == canonical({'x': second, 'y': second})
    assert canonical({'x': first, 'y': first}) != canonical({'x': first, 'y': Variable()})


def test_quick_check_rejects_different_atoms():
    left = signature('NP', {'agr': 'sg'}, PATHS)
    right = signature('NP', {'agr': 'pl'}, PATHS)

    assert not quick_check(left, right)


def test_quick_check_accepts_missing_paths():
    left = signature('NP', {}, PATHS)
    right = signature('NP', {'agr': 'pl', 'case': 'acc'}, PATHS)

    assert quick_check(left, right)


def test_quick_check_rejects_category_mismatch():
    assert not quick_check(signature('NP', {}, PATHS), signature('VP', {}, PATHS))


def _random_value(rng: random.Random, depth: int, pool: list[Variable]):
    roll = rng.random()
    if depth >= 2 or roll < 0.4:
        return rng.choice(ATOMS)
    if roll < 0.6:
        return rng.choice(pool)
    return _random_structure(rng, depth + 1, pool)


def _random_structure(rng: random.Random, depth: int, pool: list[Variable]):
    labels = rng.sample(['agr', 'case', 'num'], rng.randint(0, 3))
    return {label: _random_value(rng, depth, pool) for label in labels}


def test_quick_check_is_sound_on_random_pairs():
    rng = random.Random(20240613)
    violations = 0
    for _ in range(10_000):
        pool = [Variable() for _ in range(2)]
        left = _random_structure(rng, 0, pool)
        right = _random_structure(rng, 0, pool)
        compatible = quick_check(signature('X', left, PATHS), signature('X', right, PATHS))
        if not compatible and unify(left, right) is not None:
            violations += 1

    assert violations == 0


def _unify_or_none(left, right):
    if left is None or right is None:
        return None
    return unify(left, right)


def test_unify_is_commutative_on_random_pairs():
    rng = random.Random(7)
    failures = 0
    for _ in range(5_000):
        pool = [Variable() for _ in range(2)]
        left = _random_structure(rng, 0, pool)
        right = _random_structure(rng, 0, pool)
        forward, backward = unify(left, right), unify(right, left)
        failures += forward is None

        assert canonical(forward) == canonical(backward)

    assert 0 < failures < 5_000


def test_unify_is_associative_on_random_triples():
    rng = random.Random(11)
    failures = 0
    for _ in range(5_000):
        first, second, third = (_random_structure(rng, 0, [Variable() for _ in range(2)]) for _ in range(3))
        grouped_left = _unify_or_none(unify(first, second), third)
        grouped_right = _unify_or_none(first, unify(second, third))
        failures += grouped_left is None

        assert canonical(grouped_left) == canonical(grouped_right)
        assert canonical(grouped_left) == canonical(_unify_or_none(unify(first, third), second))

    assert 0 < failures < 5_000

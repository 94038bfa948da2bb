#  Created by the pconnect developers
#  Distributed under the terms of the MIT License.

import pytest

import pconnect
from pconnect import DeckGroup, MorseSet, MorseDecomposition, OrbitRecord, OrbitList, Poset
from pconnect import classify_orbits, translate_decomposition, validate_regime, assemble_NDelta, parse_decomposition
from pconnect import AdmissibilityError, RegimeError, SchemaError, DegreeError, GroupMismatchError
from pconnect import H2, H3


def non_adjacent_decomposition():
    group = DeckGroup.infinite_cyclic()
    e = group.identity()

    sets = [
        MorseSet('A', {1: ['a1']}),
        MorseSet('B', {1: ['b1'], 0: ['b0']}),
        MorseSet('C', {0: ['c0']})]

    orbits = [
        OrbitRecord('B', 'b1', 1, 'C', 'c0', 0, e, 1),
        OrbitRecord('A', 'a1', 1, 'B', 'b0', 0, e, 1),
        OrbitRecord('A', 'a1', 1, 'C', 'c0', 0, e, 1)]

    return MorseDecomposition(group, H2, sets, orbits)


def test_klein_regime(fixture_path):
    d = pconnect.read(fixture_path('klein.json')).load()
    report = validate_regime(d)

    assert report.passed
    assert report.kind == pconnect.KLEIN_BOTTLE
    assert [tuple(x['pair']) for x in report.pairs] == [('x', 'y1'), ('x', 'y2'), ('y1', 'z'), ('y2', 'z')]
    assert all(x['adjacent'] for x in report.pairs)
    assert all('min_label' not in x for x in report.pairs)
    assert report.pairs[1]['support'] == ["e", "a"]
    assert len(report.advisories) == 1
    assert "(H3)" in report.advisories[0]


def test_torus_regime(fixture_path):
    d = pconnect.read(fixture_path('torus_decomposition.json')).load()
    report = validate_regime(d)

    assert report.passed
    assert len(report.pairs) == 2
    assert report.pairs[0]['buckets'] == {"e": 1, "t^2": 1}
    assert report.pairs[0]['support_size'] == 2
    assert report.pairs[0]['min_label'] == "e"
    assert not report.advisories
    assert report.to_dict()['passed']


def test_free_regime(fixture_path):
    d = pconnect.read(fixture_path('solid_double_torus.json')).load()
    report = validate_regime(d)

    assert report.passed
    assert report.pairs[0]['support_size'] == 5
    assert len(report.advisories) == 2


def test_regime_mismatch(fixture_path):
    d = pconnect.read(fixture_path('klein.json')).load()

    with pytest.raises(RegimeError):
        validate_regime(d.replace(regime=pconnect.H1))

    with pytest.raises(RegimeError):
        assemble_NDelta(d.replace(regime=H2))


def test_non_adjacent():
    d = non_adjacent_decomposition()
    report = validate_regime(d)

    assert not report.passed
    assert d.non_adjacent_pairs() == [('A', 'C')]
    assert len(report.violations) == 1
    assert "non-adjacent" in report.violations[0]

    with pytest.raises(AdmissibilityError):
        assemble_NDelta(d)


def test_classify_orbits(fixture_path):
    d = pconnect.read(fixture_path('klein.json')).load()
    buckets = classify_orbits(d, ('x', 'y1'))

    assert [d.group.format(g) for g in buckets] == ["e", "b"]
    assert all(len(records) == 1 for records in buckets.values())
    assert classify_orbits(d, ('x', 'z')) == {}


def test_cyclic_orbits(fixture_path):
    with pytest.raises(AdmissibilityError):
        pconnect.read(fixture_path('cyclic_orbits.json')).load()


def test_upward_orbit():
    group = DeckGroup.infinite_cyclic()
    sets = [MorseSet('A', {1: ['a1']}), MorseSet('B', {0: ['b0']})]
    orbits = [OrbitRecord('A', 'a1', 1, 'B', 'b0', 0, group.identity(), 1)]

    with pytest.raises(AdmissibilityError):
        MorseDecomposition(group, H2, sets, orbits, poset=Poset(('A', 'B'), [('A', 'B')]))


def test_orbit_generators():
    group = DeckGroup.infinite_cyclic()
    sets = [MorseSet('A', {1: ['a1']}), MorseSet('B', {0: ['b0']})]

    with pytest.raises(SchemaError):
        MorseDecomposition(group, H2, sets, [OrbitRecord('A', 'a2', 1, 'B', 'b0', 0, group.identity(), 1)])

    with pytest.raises(GroupMismatchError):
        MorseDecomposition(group, H2, sets, [OrbitRecord('A', 'a1', 1, 'B', 'b0', 0, DeckGroup.free(2).identity(), 1)])

    with pytest.raises(SchemaError):
        MorseDecomposition(group, H2, sets + [MorseSet('A', {0: ['c0']})])


def test_morse_set():
    assert MorseSet('s', {}, index_trivial=True).index_trivial

    with pytest.raises(AdmissibilityError):
        MorseSet('s', {1: ['x']}, evenly_covered=False)

    with pytest.raises(SchemaError):
        MorseSet('s', {})

    d = non_adjacent_decomposition()
    assert d.set_of('b0') == 'B'

    with pytest.raises(SchemaError):
        d.set_of('nowhere')


def test_orbit_record():
    group = DeckGroup.infinite_cyclic()
    e = group.identity()

    with pytest.raises(SchemaError):
        OrbitRecord('A', 'a1', 1, 'B', 'b0', 0, e, 0)

    with pytest.raises(DegreeError):
        OrbitRecord('A', 'a2', 2, 'B', 'b0', 0, e, 1)

    with pytest.raises(SchemaError):
        OrbitRecord('A', 'a1', 1, 'A', 'a0', 0, e, 1)

    with pytest.raises(GroupMismatchError):
        OrbitRecord('A', 'a1', 1, 'B', 'b0', 0, 't', 1)

    with pytest.raises(TypeError):
        OrbitList(['record'])


def test_orbit_list_sorted(fixture_path):
    d = pconnect.read(fixture_path('torus_decomposition.json')).load()
    orbits = d.orbits

    assert orbits.pairs() == [('h1_3', 'h0_1'), ('h2_4', 'h1_2')]
    assert orbits.signed_count('h2_4', 'h1_2') == 0
    assert [str(r.label) for r in orbits.for_pair('h2_4', 'h1_2')] == ["e", "t^2"]


def test_translate(fixture_path):
    d = pconnect.read(fixture_path('torus_decomposition.json')).load()
    h = d.group.element(3)
    moved = translate_decomposition(d, h)

    assert moved.base_shift == h
    assert [str(r.label) for r in moved.orbits.for_pair('h2_4', 'h1_2')] == ["t^3", "t^5"]
    assert validate_regime(moved).pairs[0]['min_label'] == "e"

    with pytest.raises(GroupMismatchError):
        translate_decomposition(d, DeckGroup.free(2).identity())


def test_equivariance(fixture_path, rng, random_element):
    for name in ('klein.json', 'solid_double_torus.json'):
        d = pconnect.read(fixture_path(name)).load()
        expected = assemble_NDelta(d)

        for _ in range(25):
            h = random_element(d.group, rng)
            assert assemble_NDelta(translate_decomposition(d, h)) == expected


def test_to_dict(fixture_path):
    for name in ('klein.json', 'double_torus.json', 'torus_decomposition.json'):
        d = pconnect.read(fixture_path(name)).load()
        assert parse_decomposition(d.to_dict()) == d


def test_replace(fixture_path):
    d = pconnect.read(fixture_path('klein.json')).load()

    assert d.replace(name='other').name == 'other'
    assert d.replace(regime=H3) == d

    with pytest.raises(AttributeError):
        d.replace(colour='red')

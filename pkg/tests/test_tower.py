#  Created by the pconnect developers
#  Distributed under the terms of the MIT License.

import numpy
import pytest

import pconnect
from pconnect import CircleMorseData, NovikovRing, NovikovSeries
from pconnect import truncation_tower, compare_tower_limit, build_novikov_complex, build_morse_complex


@pytest.fixture
def torus(fixture_path):
    return pconnect.read(fixture_path('torus.json')).load()


def test_stable_level(torus):
    tower = truncation_tower(torus, 3)

    assert tower.levels == 3
    assert tower.max_level == 2
    assert tower.stabilized
    assert tower.stable_level == 2
    assert str(tower) == "levels 0..3, stable at 2"


def test_not_stabilized(torus):
    tower = truncation_tower(torus, 1)

    assert not tower.stabilized
    assert tower.stable_level is None
    assert tower.entry(1, 2, 'h1_2', 'h2_4') == 1


def test_matrices(torus):
    tower = truncation_tower(torus, 3)

    assert tower.degrees() == [1, 2]
    assert tower.basis(2) == (('h1_2', 'h1_3'), ('h2_4',))
    assert tower.matrix(3, 2).shape == (2, 1, 4)
    assert list(tower.matrix(3, 2)[0, 0]) == [1, 0, -1, 0]
    assert tower.matrix(0, 1).shape == (1, 2, 1)
    assert tower.entry(3, 2, 'h1_2', 'h2_4') == NovikovSeries.from_terms({0: 1, 2: -1})
    assert tower.entry(3, 2, 'h1_3', 'h2_4').is_zero()


def test_projection(torus):
    tower = truncation_tower(torus, 3)

    projected = tower.project(3, 1)
    assert projected[2].shape == (2, 1, 2)
    assert numpy.array_equal(projected[2], tower.matrix(1, 2))
    assert tower.coherence() == []

    with pytest.raises(ValueError):
        tower.project(1, 2)


def test_format_level(torus):
    tower = truncation_tower(torus, 3)

    assert tower.format_level(3, NovikovRing()) == [
        (1, 'h0_1', 'h1_3', "1 - t^2"),
        (2, 'h1_2', 'h2_4', "1 - t^2")]

    assert tower.format_level(1, NovikovRing()) == [
        (1, 'h0_1', 'h1_3', "1"),
        (2, 'h1_2', 'h2_4', "1")]


def test_compare_limit(torus):
    tower = truncation_tower(torus, 4)
    report = compare_tower_limit(tower, build_novikov_complex(torus))

    assert report.passed
    assert report.first_mismatch() is None
    assert str(report) == "tower matches Novikov boundary at all levels"


@pytest.mark.parametrize('level', [0, 1, 2, 3])
def test_expand_matches_unroll(torus, level):
    tower = truncation_tower(torus, 3)

    for k in (1, 2):
        row_ids, col_ids, array = tower.expand(level, k)
        boundary = build_morse_complex(torus.unroll(level)).boundary(k)

        assert row_ids == boundary.rows
        assert col_ids == boundary.cols
        assert numpy.array_equal(array, boundary.to_array())


def test_no_records():
    data = CircleMorseData([('p', 1), ('q', 0)])
    tower = truncation_tower(data, 2)

    assert tower.max_level is None
    assert tower.stable_level == 0
    assert not tower.matrix(2, 1).any()


def test_negative_levels(torus):
    with pytest.raises(ValueError):
        truncation_tower(torus, -1)


@pytest.mark.parametrize('levels', range(9))
def test_compare_limit_levels(torus, levels):
    chain = build_novikov_complex(torus)
    report = compare_tower_limit(truncation_tower(torus, levels), chain)

    assert report.passed
    assert str(report) == "tower matches Novikov boundary at all levels"


@pytest.mark.parametrize('levels', range(9))
def test_compare_limit_deep_levels(levels):
    data = CircleMorseData(
        [('x', 0), ('y', 0), ('p', 1), ('q', 1)],
        [('p', 'x', 0, 1), ('p', 'y', 0, 1), ('q', 'x', 0, 1), ('q', 'y', 0, 1), ('q', 'y', 5, 1)])

    tower = truncation_tower(data, levels)
    report = compare_tower_limit(tower, build_novikov_complex(data))

    assert report.passed
    assert tower.stabilized == (levels >= 5)

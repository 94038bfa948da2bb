#  Created by the pconnect developers
#  Distributed under the terms of the MIT License.

import pytest

import pconnect
from pconnect import GainGraph, lift_path
from pconnect import PathError, SchemaError, GroupMismatchError


@pytest.fixture
def klein_graph(fixture_path):
    reader = pconnect.read(fixture_path('klein.json'))
    d = reader.load()
    return GainGraph.from_dict(d.group, reader.document()['gain_graph'])


@pytest.fixture
def free_graph(free2):
    a = free2.generator('a')
    b = free2.generator('b')

    edges = [
        ('c', 'p', 'q', free2.identity()),
        ('la', 'q', 'q', a),
        ('lb', 'q', 'q', b)]

    return GainGraph(free2, ('p', 'q'), edges, {'p': 'p', 'q': 'q'})


def test_klein_path(klein_graph, klein):
    label = klein_graph.lift_path(['s1', 's2', 's3'])

    assert label == klein.generator('a')
    assert klein_graph.endpoints(['s1', 's2', 's3']) == ('x', 'y2')
    assert klein_graph.lift_orbit(['s1', 's2', 's3'], 'x', 'y2') == label


def test_free_path(free_graph, free2):
    label = lift_path(free_graph, ['c', 'la', '-lb'])

    assert free2.format(label) == "a b^-1"
    assert free_graph.lift_path(['c', 'lb', 'lb']) == free2.generator('b') ** 2
    assert free_graph.lift_path([]).is_identity()
    assert free_graph.endpoints([]) == (None, None)


def test_inverse_step(klein_graph, klein):
    label = klein_graph.lift_path(['s1', 's2', 's3', '-s3', '-s2', '-s1'])
    assert label.is_identity()


def test_non_consecutive(klein_graph):
    with pytest.raises(PathError):
        klein_graph.lift_path(['s1', 's3'])


def test_unknown_edge(klein_graph):
    with pytest.raises(PathError):
        klein_graph.lift_path(['s4'])


def test_anchor_mismatch(klein_graph):
    with pytest.raises(PathError):
        klein_graph.lift_orbit(['s2'], 'x', 'y2')


def test_path_label_conflict(fixture_path):
    reader = pconnect.read(fixture_path('klein.json'))
    data = reader.document()
    data['orbits'][3]['label'] = {'b': 1, 'a': 0}

    with pytest.raises(PathError):
        pconnect.parse_decomposition(data)


def test_construction_errors(free2, klein):
    with pytest.raises(SchemaError):
        GainGraph(free2, ('p',), [('c', 'p', 'p', free2.identity()), ('c', 'p', 'p', free2.identity())])

    with pytest.raises(GroupMismatchError):
        GainGraph(free2, ('p',), [('c', 'p', 'p', klein.identity())])

    with pytest.raises(SchemaError):
        GainGraph(free2, ('p',), [], {'P': 'r'})


def test_to_dict(free_graph, free2):
    graph = GainGraph.from_dict(free2, free_graph.to_dict())

    assert graph.vertices() == ('p', 'q')
    assert graph.lift_path(['c', 'la', '-lb']) == free_graph.lift_path(['c', 'la', '-lb'])

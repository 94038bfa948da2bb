#  Created by the pconnect developers
#  Distributed under the terms of the MIT License.

import itertools

import pytest

from pconnect import Poset, OrbitRecord, DeckGroup, intervals, adjacent_pairs, flow_order
from pconnect import AdmissibilityError, SchemaError


def all_orders(n):
    """Generates all strict orders on n labeled elements compatible with 0 < 1 < ... < n-1."""

    elements = tuple("p%d" % i for i in range(n))
    pairs = [(elements[i], elements[j]) for i in range(n) for j in range(i + 1, n)]

    for mask in range(2 ** len(pairs)):
        yield elements, [p for i, p in enumerate(pairs) if mask >> i & 1]


def closure(elements, relations):
    less = {(a, b) for a, b in relations}
    for c in elements:
        for a in elements:
            for b in elements:
                if (a, c) in less and (c, b) in less:
                    less.add((a, b))
    return less


def brute_intervals(elements, less):
    result = set()
    for size in range(len(elements) + 1):
        for subset in itertools.combinations(elements, size):
            chosen = set(subset)
            if all(c in chosen for a in chosen for b in chosen for c in elements if (a, c) in less and (c, b) in less):
                result.add(subset)
    return result


@pytest.mark.parametrize('n', [1, 2, 3, 4, 5])
def test_intervals_exhaustive(n):
    for elements, relations in all_orders(n):
        poset = Poset(elements, relations)
        less = closure(elements, relations)

        assert set(poset.relations()) == less
        assert set(intervals(poset)) == brute_intervals(elements, less)


@pytest.mark.parametrize('n', [1, 2, 3, 4, 5])
def test_adjacent_pairs_exhaustive(n):
    for elements, relations in all_orders(n):
        poset = Poset(elements, relations)
        less = closure(elements, relations)
        found = brute_intervals(elements, less)

        expected = set()
        for lower in found:
            for upper in found:
                if not lower or not upper or set(lower) & set(upper):
                    continue
                union = tuple(x for x in elements if x in set(lower) | set(upper))
                if union not in found:
                    continue
                if any((j, i) in less for i in lower for j in upper):
                    continue
                expected.add((lower, upper))

        assert set(adjacent_pairs(poset)) == expected


def test_empty_interval():
    poset = Poset(('a', 'b'), [('a', 'b')])

    assert () in poset.intervals()
    assert all(lower and upper for lower, upper in poset.adjacent_pairs())


def test_chain():
    poset = Poset(('a', 'b', 'c'), [('a', 'b'), ('b', 'c')])

    assert poset.less('a', 'c')
    assert not poset.less('c', 'a')
    assert poset.covers() == [('a', 'b'), ('b', 'c')]
    assert poset.relations() == [('a', 'b'), ('a', 'c'), ('b', 'c')]
    assert not poset.is_interval(('a', 'c'))
    assert poset.is_adjacent(('a',), ('b',))
    assert not poset.is_adjacent(('a',), ('c',))
    assert not poset.is_adjacent(('b',), ('a',))
    assert poset.below('c') == ('a', 'b')
    assert poset.above('a') == ('b', 'c')


def test_antichain():
    poset = Poset(('x', 'y'))

    assert not poset.comparable('x', 'y')
    assert poset.is_adjacent(('x',), ('y',))
    assert poset.is_adjacent(('y',), ('x',))
    assert poset.linear_extension() == ('x', 'y')


def test_linear_extension():
    poset = Poset(('c', 'b', 'a'), [('a', 'b'), ('b', 'c')])
    assert poset.linear_extension() == ('a', 'b', 'c')

    poset = Poset(('z', 'y', 'x'), [('x', 'z')])
    assert poset.linear_extension() == ('y', 'x', 'z')


def test_restrict():
    poset = Poset(('a', 'b', 'c'), [('a', 'b'), ('b', 'c')])
    sub = poset.restrict(('c', 'a'))

    assert sub.elements == ('a', 'c')
    assert sub.less('a', 'c')


def test_cycle():
    with pytest.raises(AdmissibilityError) as e:
        Poset(('a', 'b', 'c'), [('a', 'b'), ('b', 'c'), ('c', 'a')])

    assert "cycle" in str(e.value)


def test_reflexive():
    with pytest.raises(AdmissibilityError):
        Poset(('a',), [('a', 'a')])


def test_unknown_element():
    with pytest.raises(SchemaError):
        Poset(('a',), [('a', 'b')])

    with pytest.raises(SchemaError):
        Poset(('a', 'a'))


def test_flow_order():
    group = DeckGroup.infinite_cyclic()
    e = group.identity()

    orbits = [
        OrbitRecord('A', 'a1', 1, 'B', 'b0', 0, e, 1),
        OrbitRecord('B', 'b1', 1, 'C', 'c0', 0, e, 1)]

    poset = flow_order(orbits)
    assert poset.elements == ('B', 'A', 'C')
    assert poset.less('C', 'A')
    assert poset.less('B', 'A')
    assert poset.covers() == [('B', 'A'), ('C', 'B')]

    poset = flow_order(orbits, ('A', 'B', 'C', 'D'))
    assert 'D' in poset
    assert not poset.comparable('D', 'A')


def test_flow_order_cycle():
    group = DeckGroup.infinite_cyclic()

    orbits = [
        OrbitRecord('A', 'a1', 1, 'B', 'b0', 0, group.identity(), 1),
        OrbitRecord('B', 'b1', 1, 'A', 'a0', 0, group.generator('t'), 1)]

    with pytest.raises(AdmissibilityError):
        flow_order(orbits)

#  Created by the pconnect developers
#  Distributed under the terms of the MIT License.

import os.path
import random

import pytest

import pconnect
from pconnect import DeckGroup, GroupRing, NovikovSeries

FIXTURES = os.path.join(os.path.dirname(pconnect.__file__), 'fixtures')

Z2Z2_ELEMENTS = ('e', 'a', 'b', 'ab')
Z2Z2_TABLE = (
    ('e', 'a', 'b', 'ab'),
    ('a', 'e', 'ab', 'b'),
    ('b', 'ab', 'e', 'a'),
    ('ab', 'b', 'a', 'e'))


@pytest.fixture
def fixture_path():
    """Gets path of a bundled fixture document."""

    def path(name):
        return os.path.join(FIXTURES, name)

    return path


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def z2z2():
    return DeckGroup.finite(Z2Z2_ELEMENTS, Z2Z2_TABLE, ('a', 'b'))


@pytest.fixture
def klein():
    return DeckGroup.klein_bottle()


@pytest.fixture
def free2():
    return DeckGroup.free(2)


@pytest.fixture
def cyclic():
    return DeckGroup.infinite_cyclic()


@pytest.fixture
def lattice():
    return DeckGroup.free_abelian(2, ('u', 'v'))


@pytest.fixture
def groups(z2z2, klein, free2, cyclic, lattice):
    return {
        'finite': z2z2,
        'klein_bottle': klein,
        'free': free2,
        'infinite_cyclic': cyclic,
        'free_abelian': lattice}


@pytest.fixture
def random_element():
    """Gets factory of random group elements with small normal forms."""

    def make(group, rng):

        if group.kind == pconnect.FINITE:
            return rng.choice(group.all_elements())

        if group.kind == pconnect.FREE_ABELIAN:
            return group.element([rng.randint(-3, 3) for _ in range(group.rank)])

        if group.kind == pconnect.FREE:
            word = [(rng.randrange(group.rank), rng.choice((-2, -1, 1, 2))) for _ in range(rng.randint(0, 4))]
            return group.element(word)

        if group.kind == pconnect.INFINITE_CYCLIC:
            return group.element(rng.randint(-5, 5))

        return group.element((rng.randint(-3, 3), rng.randint(-3, 3)))

    return make


@pytest.fixture
def random_ring_element(random_element):
    """Gets factory of random group ring elements with up to three terms."""

    def make(group, rng):

        ring = GroupRing(group)
        result = ring.zero()
        for _ in range(rng.randint(0, 3)):
            result = result + ring.embed(random_element(group, rng), rng.randint(-3, 3))

        return result

    return make


@pytest.fixture
def random_series():
    """Gets factory of random exact Laurent polynomials."""

    def make(rng, precision=32, length=6):
        coeffs = [rng.randint(-3, 3) for _ in range(rng.randint(0, length))]
        return NovikovSeries(rng.randint(-3, 3), coeffs, precision, exact=True)

    return make
